#include "scspread/cycles.hpp"

#include <algorithm>
#include <climits>
#include <set>
#include <stdexcept>

#include "scspread/errors.hpp"
#include "scspread/parallel.hpp"

namespace scspread {

namespace {

std::vector<int> interleave(const CycleCandidate& c) {
    const int g = c.half_length();
    std::vector<int> seq(static_cast<std::size_t>(2 * g));
    for (int k = 0; k < g; ++k) {
        seq[static_cast<std::size_t>(2 * k)] = c.cols[static_cast<std::size_t>(k)];
        seq[static_cast<std::size_t>(2 * k + 1)] = c.rows[static_cast<std::size_t>(k)];
    }
    return seq;
}

CycleCandidate rotate(const CycleCandidate& c, int shift) {
    const int g = c.half_length();
    CycleCandidate out;
    out.rows.resize(static_cast<std::size_t>(g));
    out.cols.resize(static_cast<std::size_t>(g));
    for (int k = 0; k < g; ++k) {
        out.rows[static_cast<std::size_t>(k)] = c.rows[static_cast<std::size_t>((k + shift) % g)];
        out.cols[static_cast<std::size_t>(k)] = c.cols[static_cast<std::size_t>((k + shift) % g)];
    }
    return out;
}

// Reverse traversal direction; keeps the same edge set.
CycleCandidate reflect(const CycleCandidate& c) {
    const int g = c.half_length();
    CycleCandidate out;
    out.rows.resize(static_cast<std::size_t>(g));
    out.cols.resize(static_cast<std::size_t>(g));
    for (int k = 0; k < g; ++k) {
        out.rows[static_cast<std::size_t>(k)] = c.rows[static_cast<std::size_t>(g - 1 - k)];
        out.cols[static_cast<std::size_t>(k)] = c.cols[static_cast<std::size_t>(k == 0 ? 0 : g - k)];
    }
    return out;
}

// Enumerates k-subsets of {0, ..., n-1} in lexicographic order.
bool next_combination(std::vector<int>& comb, int n) {
    const int k = static_cast<int>(comb.size());
    for (int i = k - 1; i >= 0; --i) {
        if (comb[static_cast<std::size_t>(i)] < n - k + i) {
            ++comb[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

bool operator<(const CycleCandidate& a, const CycleCandidate& b) {
    return interleave(a) < interleave(b);
}

CycleCandidate make_canonical(std::vector<int> rows, std::vector<int> cols) {
    if (rows.size() != cols.size())
        throw std::invalid_argument("cycle candidate: rows and cols must have equal length");
    const int g = static_cast<int>(rows.size());
    if (g < 2) throw std::invalid_argument("cycle candidate: half-length must be >= 2");
    for (int v : rows)
        if (v < 0) throw std::invalid_argument("cycle candidate: negative row index");
    for (int v : cols)
        if (v < 0) throw std::invalid_argument("cycle candidate: negative column index");

    CycleCandidate c{std::move(rows), std::move(cols)};

    // The 2g traversed edges must be pairwise distinct; this also rules out
    // immediate backtracking (j_k == j_{k+1} or i_k == i_{k+1}).
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(2 * g));
    for (int k = 0; k < g; ++k) {
        edges.emplace_back(c.rows[static_cast<std::size_t>(k)], c.cols[static_cast<std::size_t>(k)]);
        edges.emplace_back(c.rows[static_cast<std::size_t>(k)],
                           c.cols[static_cast<std::size_t>((k + 1) % g)]);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("cycle candidate: traversed edges are not pairwise distinct");

    CycleCandidate best = c;
    std::vector<int> best_seq = interleave(best);
    const CycleCandidate mirrored = reflect(c);
    for (const CycleCandidate* variant : {static_cast<const CycleCandidate*>(&c), &mirrored}) {
        for (int shift = 0; shift < g; ++shift) {
            CycleCandidate cand = rotate(*variant, shift);
            std::vector<int> seq = interleave(cand);
            if (seq < best_seq) {
                best = std::move(cand);
                best_seq = std::move(seq);
            }
        }
    }
    return best;
}

double projected_candidate_count(const BaseGraph& base, int g) {
    if (g < 2) throw std::invalid_argument("cycle enumeration: g must be >= 2");
    if (g > base.gamma || g > base.kappa) return 0.0;
    double total = 1.0;
    for (int k = 0; k < g; ++k) {
        total *= static_cast<double>(base.gamma - k) / (k + 1);
        total *= static_cast<double>(base.kappa - k) / (k + 1);
    }
    // Hamiltonian cycles of K_{g,g} between a fixed row set and column set.
    for (int k = 2; k <= g; ++k) total *= k;
    for (int k = 2; k <= g - 1; ++k) total *= k;
    return total / 2.0;
}

std::vector<CycleCandidate> enumerate_cycle_candidates(const BaseGraph& base, int g,
                                                       std::int64_t budget) {
    const double projected = projected_candidate_count(base, g);
    if (projected > static_cast<double>(budget))
        throw resource_limit_error("cycle enumeration: projected candidate count " +
                                       std::to_string(projected) + " exceeds budget " +
                                       std::to_string(budget),
                                   projected, budget);

    std::vector<CycleCandidate> out;
    if (g > base.gamma || g > base.kappa) return out;
    out.reserve(static_cast<std::size_t>(projected));

    if (g == 2) {
        // (j1, i1, j2, i2) with i1 < i2, j1 < j2 is already canonical.
        for (int i1 = 0; i1 < base.gamma; ++i1)
            for (int i2 = i1 + 1; i2 < base.gamma; ++i2)
                for (int j1 = 0; j1 < base.kappa; ++j1)
                    for (int j2 = j1 + 1; j2 < base.kappa; ++j2)
                        out.push_back(CycleCandidate{{i1, i2}, {j1, j2}});
        return out;
    }

    std::vector<int> row_set(static_cast<std::size_t>(g));
    std::vector<int> col_set(static_cast<std::size_t>(g));
    for (int k = 0; k < g; ++k) row_set[static_cast<std::size_t>(k)] = k;
    do {
        for (int k = 0; k < g; ++k) col_set[static_cast<std::size_t>(k)] = k;
        do {
            // Fix the first column and run over the remaining column orders
            // and all row orders; canonicalization dedups the 2x overcount.
            std::set<CycleCandidate> local;
            std::vector<int> col_tail(col_set.begin() + 1, col_set.end());
            std::sort(col_tail.begin(), col_tail.end());
            do {
                std::vector<int> cols;
                cols.reserve(static_cast<std::size_t>(g));
                cols.push_back(col_set[0]);
                cols.insert(cols.end(), col_tail.begin(), col_tail.end());
                std::vector<int> rows = row_set;
                std::sort(rows.begin(), rows.end());
                do {
                    local.insert(make_canonical(rows, cols));
                } while (std::next_permutation(rows.begin(), rows.end()));
            } while (std::next_permutation(col_tail.begin(), col_tail.end()));
            out.insert(out.end(), local.begin(), local.end());
        } while (next_combination(col_set, base.kappa));
    } while (next_combination(row_set, base.gamma));

    std::sort(out.begin(), out.end());
    return out;
}

bool is_active(const CycleCandidate& c, const PartitionMatrix& p) {
    const int g = c.half_length();
    long long straight = 0;
    long long crossed = 0;
    for (int k = 0; k < g; ++k) {
        const int i = c.rows[static_cast<std::size_t>(k)];
        straight += p(i, c.cols[static_cast<std::size_t>(k)]);
        crossed += p(i, c.cols[static_cast<std::size_t>((k + 1) % g)]);
    }
    return straight == crossed;
}

CycleCensus census(const BaseGraph& base, const PartitionMatrix& p, int g, bool collect_active,
                   std::int64_t budget, int threads) {
    if (p.gamma() != base.gamma || p.kappa() != base.kappa)
        throw std::invalid_argument("census: partition matrix does not match base graph");
    const auto candidates = enumerate_cycle_candidates(base, g, budget);
    CycleCensus result;
    result.g = g;
    result.total_candidates = static_cast<std::int64_t>(candidates.size());
    if (collect_active) result.active_list.emplace();

    struct Part {
        std::int64_t count = 0;
        std::vector<CycleCandidate> active;
    };
    auto scan = [&](std::int64_t lo, std::int64_t hi) -> Part {
        Part part;
        for (std::int64_t k = lo; k < hi; ++k) {
            const auto& c = candidates[static_cast<std::size_t>(k)];
            if (!is_active(c, p)) continue;
            ++part.count;
            if (collect_active) part.active.push_back(c);
        }
        return part;
    };
    Part total = detail::chunked_reduce(
        std::int64_t{0}, result.total_candidates, threads, Part{}, scan,
        [](Part acc, Part part) {
            acc.count += part.count;
            acc.active.insert(acc.active.end(), std::make_move_iterator(part.active.begin()),
                              std::make_move_iterator(part.active.end()));
            return acc;
        });
    result.active_count = total.count;
    if (collect_active) *result.active_list = std::move(total.active);
    return result;
}

std::string GirthResult::to_string() const {
    return girth ? std::to_string(*girth) : ">= " + std::to_string(cap);
}

GirthResult tanner_girth(const SparseBinaryMatrix& h, int cap, int threads) {
    if (cap != 4 && cap != 6 && cap != 8 && cap != 10 && cap != 12)
        throw std::invalid_argument("tanner_girth: cap must be one of 4, 6, 8, 10, 12");
    if (h.nnz() == 0)
        throw std::domain_error("tanner_girth: girth is undefined for an empty matrix");

    // Unified vertex ids: checks 0..rows-1, variables rows..rows+cols-1.
    const int vertex_count = h.rows() + h.cols();
    const auto& nz = h.nonzeros();
    std::vector<int> offset(static_cast<std::size_t>(vertex_count) + 1, 0);
    for (const auto& [r, c] : nz) {
        ++offset[static_cast<std::size_t>(r) + 1];
        ++offset[static_cast<std::size_t>(h.rows() + c) + 1];
    }
    for (std::size_t v = 1; v < offset.size(); ++v) offset[v] += offset[v - 1];
    std::vector<int> neighbor(2 * nz.size());
    std::vector<int> via_edge(2 * nz.size());
    {
        std::vector<int> cursor(offset.begin(), offset.end() - 1);
        for (std::size_t e = 0; e < nz.size(); ++e) {
            const int u = nz[e].first;
            const int w = h.rows() + nz[e].second;
            neighbor[static_cast<std::size_t>(cursor[static_cast<std::size_t>(u)])] = w;
            via_edge[static_cast<std::size_t>(cursor[static_cast<std::size_t>(u)]++)] =
                static_cast<int>(e);
            neighbor[static_cast<std::size_t>(cursor[static_cast<std::size_t>(w)])] = u;
            via_edge[static_cast<std::size_t>(cursor[static_cast<std::size_t>(w)]++)] =
                static_cast<int>(e);
        }
    }

    const int depth_limit = cap / 2;
    // Truncated BFS from every root; a non-tree edge (u, w) closes a walk of
    // length dist[u] + dist[w] + 1 through the root. The minimum over all
    // roots is the girth whenever it is below the cap.
    auto probe = [&](std::int64_t lo, std::int64_t hi) -> int {
        int best = INT_MAX;
        std::vector<int> dist(static_cast<std::size_t>(vertex_count), -1);
        std::vector<int> parent_edge(static_cast<std::size_t>(vertex_count), -1);
        std::vector<int> queue;
        queue.reserve(static_cast<std::size_t>(vertex_count));
        for (std::int64_t root = lo; root < hi && best > 4; ++root) {
            queue.clear();
            queue.push_back(static_cast<int>(root));
            dist[static_cast<std::size_t>(root)] = 0;
            parent_edge[static_cast<std::size_t>(root)] = -1;
            for (std::size_t head = 0; head < queue.size(); ++head) {
                const int u = queue[head];
                if (dist[static_cast<std::size_t>(u)] >= depth_limit) break;
                for (int a = offset[static_cast<std::size_t>(u)];
                     a < offset[static_cast<std::size_t>(u) + 1]; ++a) {
                    const int w = neighbor[static_cast<std::size_t>(a)];
                    const int e = via_edge[static_cast<std::size_t>(a)];
                    if (e == parent_edge[static_cast<std::size_t>(u)]) continue;
                    if (dist[static_cast<std::size_t>(w)] == -1) {
                        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                        parent_edge[static_cast<std::size_t>(w)] = e;
                        queue.push_back(w);
                    } else {
                        best = std::min(best, dist[static_cast<std::size_t>(u)] +
                                                  dist[static_cast<std::size_t>(w)] + 1);
                    }
                }
            }
            for (int v : queue) dist[static_cast<std::size_t>(v)] = -1;
        }
        return best;
    };

    const int best = detail::chunked_reduce(
        std::int64_t{0}, static_cast<std::int64_t>(vertex_count), threads, INT_MAX, probe,
        [](int a, int b) { return std::min(a, b); });

    GirthResult result;
    result.cap = cap;
    if (best < cap) result.girth = best;
    return result;
}

}  // namespace scspread

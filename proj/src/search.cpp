#include "scspread/search.hpp"

#include <algorithm>
#include <stdexcept>

#include "scspread/cycles.hpp"
#include "scspread/parallel.hpp"
#include "scspread/rng.hpp"

namespace scspread {

namespace {

// A cycle flattened to edge indices, tagged with its structure and the
// row-major edge at which it becomes fully assigned.
struct FlatCycle {
    std::vector<int> plus;
    std::vector<int> minus;
    std::size_t structure = 0;
    int completion_edge = 0;
};

struct FlatProblem {
    std::vector<FlatCycle> cycles;
    std::vector<std::vector<int>> completing;  // per edge: cycle ids completing there
    std::vector<int> structure_sizes;
};

FlatProblem flatten(const BaseGraph& base, const HarmfulStructureSet& hset) {
    hset.check_in_range(base);
    FlatProblem fp;
    fp.completing.resize(static_cast<std::size_t>(base.edge_count()));
    fp.structure_sizes.reserve(hset.size());
    for (std::size_t sidx = 0; sidx < hset.size(); ++sidx) {
        const auto& structure = hset.structures()[sidx];
        fp.structure_sizes.push_back(static_cast<int>(structure.size()));
        for (const auto& c : structure) {
            FlatCycle fc;
            fc.structure = sidx;
            const int g = c.half_length();
            int last = 0;
            for (int k = 0; k < g; ++k) {
                const int i = c.rows[static_cast<std::size_t>(k)];
                const int ep = i * base.kappa + c.cols[static_cast<std::size_t>(k)];
                const int em = i * base.kappa + c.cols[static_cast<std::size_t>((k + 1) % g)];
                fc.plus.push_back(ep);
                fc.minus.push_back(em);
                last = std::max({last, ep, em});
            }
            fc.completion_edge = last;
            fp.completing[static_cast<std::size_t>(last)].push_back(
                static_cast<int>(fp.cycles.size()));
            fp.cycles.push_back(std::move(fc));
        }
    }
    return fp;
}

long long cycle_diff(const FlatCycle& fc, const std::vector<int>& values) {
    long long diff = 0;
    for (int e : fc.plus) diff += values[static_cast<std::size_t>(e)];
    for (int e : fc.minus) diff -= values[static_cast<std::size_t>(e)];
    return diff;
}

bool assignment_breaks_all(const FlatProblem& fp, const std::vector<int>& values,
                           std::size_t structure_count) {
    std::vector<char> broken(structure_count, 0);
    std::size_t remaining = structure_count;
    for (const auto& fc : fp.cycles) {
        if (broken[fc.structure]) continue;
        if (cycle_diff(fc, values) != 0) {
            broken[fc.structure] = 1;
            if (--remaining == 0) return true;
        }
    }
    return remaining == 0;
}

struct Backtracker {
    const FlatProblem& fp;
    const std::vector<int>& pattern_values;
    int edge_count;
    std::int64_t budget;

    std::vector<int> values;
    std::vector<int> active_count;
    std::int64_t nodes = 0;
    bool exhausted_budget = false;

    Backtracker(const FlatProblem& problem, const std::vector<int>& pvals, int edges,
                std::int64_t node_budget)
        : fp(problem), pattern_values(pvals), edge_count(edges), budget(node_budget),
          values(static_cast<std::size_t>(edges), 0),
          active_count(fp.structure_sizes.size(), 0) {}

    bool solve(int edge) {
        if (edge == edge_count) return true;
        for (int value : pattern_values) {
            if (++nodes > budget) {
                exhausted_budget = true;
                return false;
            }
            values[static_cast<std::size_t>(edge)] = value;
            bool violated = false;
            int bumped = 0;
            const auto& completing = fp.completing[static_cast<std::size_t>(edge)];
            for (std::size_t k = 0; k < completing.size() && !violated; ++k) {
                const auto& fc = fp.cycles[static_cast<std::size_t>(completing[k])];
                if (cycle_diff(fc, values) != 0) continue;
                ++bumped;
                if (++active_count[fc.structure] ==
                    fp.structure_sizes[fc.structure])
                    violated = true;
            }
            if (!violated && solve(edge + 1)) return true;
            // Roll back the structures bumped by this value choice.
            for (std::size_t k = 0; bumped > 0; ++k) {
                const auto& fc = fp.cycles[static_cast<std::size_t>(completing[k])];
                if (cycle_diff(fc, values) != 0) continue;
                --active_count[fc.structure];
                --bumped;
            }
            if (exhausted_budget) return false;
        }
        return false;
    }
};

}  // namespace

SearchResult search_assignment(const BaseGraph& base, const SearchConfig& cfg) {
    if (cfg.node_budget < 1)
        throw std::invalid_argument("search_assignment: node budget must be >= 1");
    const FlatProblem fp = flatten(base, cfg.hset);
    const int n = static_cast<int>(base.edge_count());
    SearchResult result;

    auto finish_found = [&](std::vector<int> entries) {
        result.found = true;
        result.p.emplace(base.gamma, base.kappa, std::move(entries));
        const auto report = verify_assignment(base, *result.p, cfg.pattern, cfg.hset);
        if (!report.ok)
            throw std::logic_error("search_assignment: produced assignment failed verification");
        result.certificate.assign(report.certificate.begin(), report.certificate.end());
    };

    switch (cfg.strategy) {
        case SearchStrategy::backtracking: {
            Backtracker bt(fp, cfg.pattern.values(), n, cfg.node_budget);
            const bool ok = bt.solve(0);
            result.nodes_explored = bt.nodes;
            if (ok) {
                finish_found(bt.values);
            } else {
                result.conclusive = !bt.exhausted_budget;
            }
            return result;
        }
        case SearchStrategy::random_sampling: {
            const CounterRng rng(cfg.seed);
            const std::uint64_t s = static_cast<std::uint64_t>(cfg.pattern.size());
            const std::size_t structure_count = cfg.hset.size();
            // First successful draw index, or -1; min-reduction keeps the
            // result identical for every thread count.
            auto probe = [&](std::int64_t lo, std::int64_t hi) -> std::int64_t {
                std::vector<int> values(static_cast<std::size_t>(n), 0);
                for (std::int64_t k = lo; k < hi; ++k) {
                    const std::uint64_t offset =
                        static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(n);
                    for (int e = 0; e < n; ++e)
                        values[static_cast<std::size_t>(e)] = cfg.pattern.values()[
                            static_cast<std::size_t>(rng.below(offset + static_cast<std::uint64_t>(e), s))];
                    if (assignment_breaks_all(fp, values, structure_count)) return k;
                }
                return -1;
            };
            const std::int64_t hit = detail::chunked_reduce(
                std::int64_t{0}, cfg.node_budget, cfg.threads, std::int64_t{-1}, probe,
                [](std::int64_t a, std::int64_t b) {
                    if (a < 0) return b;
                    if (b < 0) return a;
                    return std::min(a, b);
                });
            if (hit >= 0) {
                result.nodes_explored = hit + 1;
                std::vector<int> values(static_cast<std::size_t>(n), 0);
                const std::uint64_t offset =
                    static_cast<std::uint64_t>(hit) * static_cast<std::uint64_t>(n);
                for (int e = 0; e < n; ++e)
                    values[static_cast<std::size_t>(e)] = cfg.pattern.values()[
                        static_cast<std::size_t>(rng.below(offset + static_cast<std::uint64_t>(e), s))];
                finish_found(std::move(values));
            } else {
                result.nodes_explored = cfg.node_budget;
                result.conclusive = false;  // sampling never proves nonexistence
            }
            return result;
        }
        case SearchStrategy::explicit_product: {
            PartitionMatrix p = explicit_product_assignment(base);
            for (int e : p.entries())
                if (!cfg.pattern.contains(e))
                    throw std::invalid_argument(
                        "search_assignment: explicit product assignment needs the consecutive "
                        "pattern up to (gamma-1)(kappa-1)");
            result.nodes_explored = 1;
            const auto report = verify_assignment(base, p, cfg.pattern, cfg.hset);
            if (report.ok) {
                result.found = true;
                result.p = std::move(p);
                result.certificate.assign(report.certificate.begin(), report.certificate.end());
            }
            return result;
        }
    }
    throw std::logic_error("search_assignment: unknown strategy");
}

VerifyReport verify_assignment(const BaseGraph& base, const PartitionMatrix& p,
                               const CouplingPattern& pattern, const HarmfulStructureSet& hset) {
    if (p.gamma() != base.gamma || p.kappa() != base.kappa)
        throw std::invalid_argument("verify_assignment: partition matrix does not match base graph");
    for (int i = 0; i < base.gamma; ++i)
        for (int j = 0; j < base.kappa; ++j)
            if (!pattern.contains(p(i, j))) throw invalid_partition_error(i, j, p(i, j));
    hset.check_in_range(base);

    VerifyReport report;
    report.certificate.reserve(hset.size());
    for (std::size_t sidx = 0; sidx < hset.size(); ++sidx) {
        const auto& structure = hset.structures()[sidx];
        std::ptrdiff_t witness = -1;
        for (std::size_t k = 0; k < structure.size(); ++k) {
            if (!is_active(structure[k], p)) {
                witness = static_cast<std::ptrdiff_t>(k);
                break;
            }
        }
        report.certificate.push_back(witness);
        if (witness < 0) report.violations.push_back(sidx);
    }
    report.ok = report.violations.empty();
    return report;
}

}  // namespace scspread

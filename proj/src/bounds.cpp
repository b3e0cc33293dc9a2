#include "scspread/bounds.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <map>
#include <stdexcept>

#include "scspread/counting.hpp"

namespace scspread {

HarmfulStructureSet::HarmfulStructureSet(std::vector<std::vector<CycleCandidate>> structures)
    : structures_(std::move(structures)) {
    for (auto& structure : structures_) {
        if (structure.empty())
            throw std::invalid_argument("harmful structure set: structure without fundamental cycles");
        for (auto& c : structure) c = make_canonical(c.rows, c.cols);
    }
}

HarmfulStructureSet HarmfulStructureSet::singletons(std::vector<CycleCandidate> cycles) {
    std::vector<std::vector<CycleCandidate>> structures;
    structures.reserve(cycles.size());
    for (auto& c : cycles) structures.push_back({std::move(c)});
    return HarmfulStructureSet(std::move(structures));
}

HarmfulStructureSet HarmfulStructureSet::girth6_target(const BaseGraph& base) {
    return singletons(enumerate_cycle_candidates(base, 2));
}

HarmfulStructureSet HarmfulStructureSet::girth8_target(const BaseGraph& base) {
    auto cycles = enumerate_cycle_candidates(base, 2);
    auto six = enumerate_cycle_candidates(base, 3);
    cycles.insert(cycles.end(), std::make_move_iterator(six.begin()),
                  std::make_move_iterator(six.end()));
    return singletons(std::move(cycles));
}

std::vector<CycleCandidate> HarmfulStructureSet::fundamental_cycle_union() const {
    std::vector<CycleCandidate> all;
    for (const auto& structure : structures_)
        all.insert(all.end(), structure.begin(), structure.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

void HarmfulStructureSet::check_in_range(const BaseGraph& base) const {
    for (const auto& structure : structures_) {
        for (const auto& c : structure) {
            for (int i : c.rows)
                if (i >= base.gamma)
                    throw std::invalid_argument("harmful structure set: row index out of range");
            for (int j : c.cols)
                if (j >= base.kappa)
                    throw std::invalid_argument("harmful structure set: column index out of range");
        }
    }
}

namespace {

// Flat edge-index lists (i * kappa + j) of a candidate's 2g traversed edges.
std::vector<int> edge_indices(const CycleCandidate& c, int kappa) {
    const int g = c.half_length();
    std::vector<int> edges;
    edges.reserve(static_cast<std::size_t>(2 * g));
    for (int k = 0; k < g; ++k) {
        const int i = c.rows[static_cast<std::size_t>(k)];
        edges.push_back(i * kappa + c.cols[static_cast<std::size_t>(k)]);
        edges.push_back(i * kappa + c.cols[static_cast<std::size_t>((k + 1) % g)]);
    }
    return edges;
}

}  // namespace

LoadProfile edge_loads(const BaseGraph& base, const std::vector<CycleCandidate>& cycles) {
    LoadProfile profile;
    profile.gamma = base.gamma;
    profile.kappa = base.kappa;
    profile.per_edge.assign(static_cast<std::size_t>(base.edge_count()), 0);
    for (const auto& c : cycles) {
        for (int i : c.rows)
            if (i >= base.gamma) throw std::invalid_argument("edge_loads: row index out of range");
        for (int j : c.cols)
            if (j >= base.kappa) throw std::invalid_argument("edge_loads: column index out of range");
        for (int e : edge_indices(c, base.kappa)) ++profile.per_edge[static_cast<std::size_t>(e)];
    }
    profile.max_load = profile.per_edge.empty()
                           ? 0
                           : *std::max_element(profile.per_edge.begin(), profile.per_edge.end());
    return profile;
}

int union_load(const BaseGraph& base, const HarmfulStructureSet& hset) {
    return edge_loads(base, hset.fundamental_cycle_union()).max_load;
}

namespace {

struct HittingSearch {
    // Unique cycles across all structures, each with its flat edge list.
    std::vector<std::vector<int>> cycle_edges;
    // Structures as cycle-id lists, ordered fewest-options-first.
    std::vector<std::vector<int>> structures;

    std::vector<int> load;            // per-edge load of currently selected cycles
    std::vector<int> selected_count;  // per cycle id; loads count each cycle once
    std::vector<int> choice;          // per structure: chosen cycle id

    std::int64_t nodes = 0;
    std::int64_t budget = 0;
    bool aborted = false;

    int best = INT_MAX;
    std::vector<int> best_choice;

    void dfs(std::size_t depth, int current_max) {
        if (aborted) return;
        if (++nodes > budget) {
            aborted = true;
            return;
        }
        if (current_max >= best) return;  // cannot improve
        if (depth == structures.size()) {
            best = current_max;
            best_choice = choice;
            return;
        }
        for (int cid : structures[depth]) {
            int next_max = current_max;
            const bool fresh = selected_count[static_cast<std::size_t>(cid)]++ == 0;
            if (fresh)
                for (int e : cycle_edges[static_cast<std::size_t>(cid)])
                    next_max = std::max(next_max, ++load[static_cast<std::size_t>(e)]);
            choice[depth] = cid;
            dfs(depth + 1, next_max);
            if (--selected_count[static_cast<std::size_t>(cid)] == 0)
                for (int e : cycle_edges[static_cast<std::size_t>(cid)])
                    --load[static_cast<std::size_t>(e)];
            if (aborted) return;
        }
    }
};

}  // namespace

HittingSetLoad min_hitting_set_load(const BaseGraph& base, const HarmfulStructureSet& hset,
                                    std::int64_t node_budget) {
    hset.check_in_range(base);
    HittingSetLoad result;
    if (hset.empty()) {
        result.exact = true;
        return result;
    }

    // Index unique cycles.
    std::map<CycleCandidate, int> ids;
    HittingSearch search;
    search.structures.reserve(hset.size());
    for (const auto& structure : hset.structures()) {
        std::vector<int> cids;
        cids.reserve(structure.size());
        for (const auto& c : structure) {
            auto [it, inserted] = ids.emplace(c, static_cast<int>(ids.size()));
            if (inserted) search.cycle_edges.push_back(edge_indices(c, base.kappa));
            cids.push_back(it->second);
        }
        std::sort(cids.begin(), cids.end());
        cids.erase(std::unique(cids.begin(), cids.end()), cids.end());
        search.structures.push_back(std::move(cids));
    }
    std::stable_sort(search.structures.begin(), search.structures.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });

    search.load.assign(static_cast<std::size_t>(base.edge_count()), 0);
    search.selected_count.assign(search.cycle_edges.size(), 0);
    search.choice.assign(search.structures.size(), -1);
    search.budget = node_budget;
    search.dfs(0, 0);

    std::vector<CycleCandidate> by_id(ids.size());
    for (const auto& [cand, cid] : ids) by_id[static_cast<std::size_t>(cid)] = cand;

    auto witness_from = [&](const std::vector<int>& choice) {
        std::vector<int> cids = choice;
        std::sort(cids.begin(), cids.end());
        cids.erase(std::unique(cids.begin(), cids.end()), cids.end());
        std::vector<CycleCandidate> witness;
        witness.reserve(cids.size());
        for (int cid : cids) witness.push_back(by_id[static_cast<std::size_t>(cid)]);
        return witness;
    };

    result.nodes_explored = search.nodes;
    if (!search.aborted) {
        result.exact = true;
        result.lower = result.upper = search.best;
        result.witness = witness_from(search.best_choice);
        return result;
    }

    // Budget exceeded: bracket the optimum. Cycles of single-option
    // structures are forced into every hitting set, so their union load is a
    // valid lower bound; the best incumbent (or the full union) is an upper
    // bound with a witness.
    std::vector<CycleCandidate> forced;
    for (const auto& structure : hset.structures())
        if (structure.size() == 1) forced.push_back(structure.front());
    std::sort(forced.begin(), forced.end());
    forced.erase(std::unique(forced.begin(), forced.end()), forced.end());
    result.exact = false;
    result.lower = std::max(1, edge_loads(base, forced).max_load);
    if (search.best != INT_MAX) {
        result.upper = search.best;
        result.witness = witness_from(search.best_choice);
    } else {
        result.witness = hset.fundamental_cycle_union();
        result.upper = edge_loads(base, result.witness).max_load;
    }
    result.lower = std::min(result.lower, result.upper);
    return result;
}

long long memory_bound_girth6(int gamma, int kappa) {
    if (gamma < 1 || kappa < 1)
        throw std::invalid_argument("memory_bound_girth6: dimensions must be >= 1");
    return static_cast<long long>(gamma - 1) * (kappa - 1);
}

long long memory_bound_girth8(int gamma, int kappa) {
    if (gamma < 1 || kappa < 1)
        throw std::invalid_argument("memory_bound_girth8: dimensions must be >= 1");
    return static_cast<long long>(gamma - 1) * (gamma - 2) * (kappa - 1) * (kappa - 2) +
           static_cast<long long>(gamma - 1) * (kappa - 1);
}

std::pair<long long, long long> literature_lower_bounds(int kappa) {
    if (kappa < 1) throw std::invalid_argument("literature_lower_bounds: kappa must be >= 1");
    const long long k = kappa;
    return {(k - 1 + 1) / 2, (k * (k - 1) + 7) / 8};
}

double ScaledRational::value() const {
    return static_cast<double>(num) / static_cast<double>(den) * std::pow(std::exp(1.0), e_power);
}

std::string ScaledRational::to_string() const {
    std::string s = std::to_string(num);
    if (e_power == 1)
        s += "e";
    else if (e_power != 0)
        s += "e^" + std::to_string(e_power);
    if (den != 1) s += "/" + std::to_string(den);
    return s;
}

long long c4_dependency_degree(int gamma, int kappa) {
    if (gamma < 2 || kappa < 2)
        throw std::domain_error("c4_dependency_degree: needs at least one 4-cycle");
    return 4 * (static_cast<long long>(gamma - 1) * (kappa - 1) - 1) - 2 * (kappa - 2) -
           2 * (gamma - 2);
}

ClllMtComparison clll_mt_comparison(int gamma, int kappa) {
    if (gamma < 3)
        throw std::domain_error("clll_mt_comparison: unsupported regime, gamma must be >= 3");
    if (kappa < 2)
        throw std::domain_error("clll_mt_comparison: kappa must be >= 2 (no 4-cycles otherwise)");

    ClllMtComparison cmp;
    cmp.gamma = gamma;
    cmp.kappa = kappa;
    cmp.this_work_bound = memory_bound_girth6(gamma, kappa);
    cmp.dependency_degree = c4_dependency_degree(gamma, kappa);
    cmp.num_4cycles = static_cast<long long>(gamma) * (gamma - 1) / 2 * kappa * (kappa - 1) / 2;

    if (gamma == 3)
        cmp.c_clll_ratio = {2, 1, 1};
    else if (gamma == 4)
        cmp.c_clll_ratio = {20, 9, 1};
    else
        cmp.c_clll_ratio = {512, 81, 0};

    const double e = std::exp(1.0);
    const double d = static_cast<double>(cmp.dependency_degree);
    cmp.m_clll = static_cast<long long>(std::ceil(2.0 * e * (d - 1.0) / 3.0));
    cmp.m_mt = static_cast<long long>(std::ceil(2.0 * e * d / 3.0));
    cmp.m_clll_asymptotic = cmp.c_clll_ratio.value() * (gamma - 1) * kappa;
    cmp.m_mt_asymptotic = 4.0 * e * (2.0 * gamma - 3.0) / 3.0 * kappa;

    const long long n = static_cast<long long>(gamma) * kappa;
    cmp.af_count_at_this_work = c4_counting_bound(gamma, kappa, cmp.this_work_bound).bound;
    cmp.af_count_at_m_clll = c4_counting_bound(gamma, kappa, cmp.m_clll).bound;
    cmp.af_count_at_m_mt = c4_counting_bound(gamma, kappa, cmp.m_mt).bound;
    cmp.clll_count = std::exp(static_cast<double>(n) * std::log(static_cast<double>(cmp.m_clll + 1)) +
                              static_cast<double>(n) * d * std::log1p(-2.0 / d));
    cmp.mt_count = std::exp(static_cast<double>(n) * std::log(static_cast<double>(cmp.m_mt + 1)) -
                            static_cast<double>(cmp.num_4cycles) / d);
    return cmp;
}

BoundReport make_bound_report(const BaseGraph& base, const HarmfulStructureSet& hset,
                              std::int64_t hitting_budget) {
    BoundReport report;
    report.gamma = base.gamma;
    report.kappa = base.kappa;
    report.w_union = union_load(base, hset);
    report.w_hit = min_hitting_set_load(base, hset, hitting_budget);
    report.girth6_bound = memory_bound_girth6(base.gamma, base.kappa);
    report.girth8_bound = memory_bound_girth8(base.gamma, base.kappa);
    if (base.gamma == 3) report.lit_lower_bounds = literature_lower_bounds(base.kappa);
    if (base.gamma >= 3 && base.kappa >= 2)
        report.comparison = clll_mt_comparison(base.gamma, base.kappa);
    return report;
}

}  // namespace scspread

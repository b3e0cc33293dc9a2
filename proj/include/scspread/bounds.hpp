#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scspread/bigint.hpp"
#include "scspread/cycles.hpp"

namespace scspread {

// Family of harmful structures. Each structure is a nonempty set of
// fundamental cycles and is broken as soon as one of them is inactive.
class HarmfulStructureSet {
public:
    explicit HarmfulStructureSet(std::vector<std::vector<CycleCandidate>> structures);

    // One singleton structure per cycle: every listed cycle must be broken.
    static HarmfulStructureSet singletons(std::vector<CycleCandidate> cycles);
    // All 4-cycle candidates as singletons (girth >= 6 target).
    static HarmfulStructureSet girth6_target(const BaseGraph& base);
    // All 4- and 6-cycle candidates as singletons (girth >= 8 target).
    static HarmfulStructureSet girth8_target(const BaseGraph& base);

    const std::vector<std::vector<CycleCandidate>>& structures() const { return structures_; }
    std::size_t size() const { return structures_.size(); }
    bool empty() const { return structures_.empty(); }

    // Union of all fundamental cycles with repeats identified.
    std::vector<CycleCandidate> fundamental_cycle_union() const;

    // Every candidate index must fit inside `base`.
    void check_in_range(const BaseGraph& base) const;

private:
    std::vector<std::vector<CycleCandidate>> structures_;
};

struct LoadProfile {
    int gamma = 0;
    int kappa = 0;
    std::vector<int> per_edge;  // row-major lambda(e)
    int max_load = 0;
};

// lambda(e) = number of listed cycles containing edge e.
LoadProfile edge_loads(const BaseGraph& base, const std::vector<CycleCandidate>& cycles);

// W_H: maximum load of the union of all fundamental cycles. Memory
// m >= m_t >= W_H suffices to break every structure.
int union_load(const BaseGraph& base, const HarmfulStructureSet& hset);

// Result of the min-max hitting-set search. `exact` means lower == upper ==
// the true minimum hitting-set load; otherwise [lower, upper] brackets it
// and `witness` is a hitting set attaining `upper`.
struct HittingSetLoad {
    bool exact = false;
    int lower = 0;
    int upper = 0;
    std::vector<CycleCandidate> witness;
    std::int64_t nodes_explored = 0;
};

// Depth-first branch and bound over one-cycle-per-structure choices,
// smallest structures first, pruning on the incumbent maximum load.
HittingSetLoad min_hitting_set_load(const BaseGraph& base, const HarmfulStructureSet& hset,
                                    std::int64_t node_budget = 10'000'000);

// Sufficient memory for girth >= 6: (gamma-1)(kappa-1).
long long memory_bound_girth6(int gamma, int kappa);

// Sufficient memory for girth >= 8:
// (gamma-1)(gamma-2)(kappa-1)(kappa-2) + (gamma-1)(kappa-1).
long long memory_bound_girth8(int gamma, int kappa);

// Known lower bounds for gamma = 3: memory needed to destroy all 4-cycles,
// and to destroy all 4- and 6-cycles.
std::pair<long long, long long> literature_lower_bounds(int kappa);

// Exact rational times an integer power of e; rendered to decimals only at
// report boundaries.
struct ScaledRational {
    long long num = 0;
    long long den = 1;
    int e_power = 0;

    double value() const;
    std::string to_string() const;

    friend bool operator==(const ScaledRational&, const ScaledRational&) = default;
};

// Mirror of the published comparison between this work's deterministic
// 4-cycle memory bound and the CLLL / Moser-Tardos specializations at
// lifting degree 1, including the feasible-count figures at each method's
// own memory requirement.
struct ClllMtComparison {
    int gamma = 0;
    int kappa = 0;
    long long this_work_bound = 0;    // (gamma-1)(kappa-1)
    long long dependency_degree = 0;  // 4-cycles sharing an edge with a fixed 4-cycle
    long long num_4cycles = 0;

    ScaledRational c_clll_ratio;  // C_CLLL(gamma) / (gamma-1)
    long long m_clll = 0;         // ceil(2e(d-1)/3)
    long long m_mt = 0;           // ceil(2e d/3)
    double m_clll_asymptotic = 0;  // C_CLLL(gamma) * kappa
    double m_mt_asymptotic = 0;    // 4e(2 gamma - 3)/3 * kappa

    BigInt af_count_at_this_work;  // counting bound at m_t = (gamma-1)(kappa-1)
    double clll_count = 0;         // (m_clll+1)^n (1 - 2/d)^(n d)
    BigInt af_count_at_m_clll;
    double mt_count = 0;  // (m_mt+1)^n exp(-|C4|/d)
    BigInt af_count_at_m_mt;
};

// Number of other 4-cycles sharing at least one edge with a fixed 4-cycle
// of the fully connected base (the dependency degree of the 4-cycle event
// graph): 4((gamma-1)(kappa-1) - 1) - 2(kappa-2) - 2(gamma-2).
long long c4_dependency_degree(int gamma, int kappa);

ClllMtComparison clll_mt_comparison(int gamma, int kappa);

struct BoundReport {
    int gamma = 0;
    int kappa = 0;
    int w_union = 0;
    std::optional<HittingSetLoad> w_hit;
    long long girth6_bound = 0;
    long long girth8_bound = 0;
    std::optional<std::pair<long long, long long>> lit_lower_bounds;  // gamma == 3 only
    std::optional<ClllMtComparison> comparison;                       // gamma >= 3, kappa >= 2
};

BoundReport make_bound_report(const BaseGraph& base, const HarmfulStructureSet& hset,
                              std::int64_t hitting_budget = 10'000'000);

}  // namespace scspread

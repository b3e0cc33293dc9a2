#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scspread/protograph.hpp"

namespace scspread {

// One potential cycle of length 2g in the base graph: the closed path
// j_1 - i_1 - j_2 - i_2 - ... - j_g - i_g - j_1, traversing the edges
// (i_k, j_k) and (i_k, j_{k+1}) with j_{g+1} = j_1. Stored in canonical
// form: the lexicographically smallest interleaved tuple
// (j_1, i_1, ..., j_g, i_g) over all g rotations and 2 traversal
// directions, so equal cycles compare equal.
struct CycleCandidate {
    std::vector<int> rows;  // i_1 .. i_g
    std::vector<int> cols;  // j_1 .. j_g

    int half_length() const { return static_cast<int>(rows.size()); }

    friend bool operator==(const CycleCandidate&, const CycleCandidate&) = default;
};

// Interleaved lexicographic order (j_1, i_1, j_2, i_2, ...).
bool operator<(const CycleCandidate& a, const CycleCandidate& b);

// Validates the tuple (g >= 2, consistent lengths, non-negative indices,
// pairwise-distinct traversed edges) and returns the canonical form.
CycleCandidate make_canonical(std::vector<int> rows, std::vector<int> cols);

// All canonical cycle-2g candidates with g distinct rows and g distinct
// columns. g = 2 and g = 3 are the supported design targets; larger g is
// allowed but guarded by `budget` (throws resource_limit_error with the
// projected candidate count).
std::vector<CycleCandidate> enumerate_cycle_candidates(const BaseGraph& base, int g,
                                                       std::int64_t budget = 10'000'000);

// Closed-form candidate count for the fully connected base:
// binom(gamma,g) * binom(kappa,g) * g! * (g-1)! / 2.
double projected_candidate_count(const BaseGraph& base, int g);

// Activation condition: the candidate survives edge spreading iff
// sum_k P(i_k, j_k) == sum_k P(i_k, j_{k+1}), evaluated exactly over the
// integers.
bool is_active(const CycleCandidate& c, const PartitionMatrix& p);

struct CycleCensus {
    int g = 0;
    std::int64_t total_candidates = 0;
    std::int64_t active_count = 0;
    std::optional<std::vector<CycleCandidate>> active_list;
};

// Data-parallel over candidates with an order-independent reduction, so the
// result does not depend on the thread count.
CycleCensus census(const BaseGraph& base, const PartitionMatrix& p, int g,
                   bool collect_active = false, std::int64_t budget = 10'000'000,
                   int threads = 1);

// Girth probe result: exact girth when it is below the cap, otherwise the
// sentinel ">= cap".
struct GirthResult {
    int cap = 0;
    std::optional<int> girth;  // empty means girth >= cap

    bool at_least(int length) const { return girth ? *girth >= length : cap >= length; }
    std::string to_string() const;

    friend bool operator==(const GirthResult&, const GirthResult&) = default;
};

// Independent BFS oracle on the bipartite Tanner graph of h (rows are check
// nodes, columns variable nodes). cap must be one of 4, 6, 8, 10, 12.
GirthResult tanner_girth(const SparseBinaryMatrix& h, int cap = 12, int threads = 1);

}  // namespace scspread

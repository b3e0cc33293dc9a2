#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "scspread/bounds.hpp"
#include "scspread/protograph.hpp"

namespace scspread {

enum class SearchStrategy { backtracking, random_sampling, explicit_product };

struct SearchConfig {
    CouplingPattern pattern;
    HarmfulStructureSet hset;
    std::int64_t node_budget = 10'000'000;
    std::uint64_t seed = 0;
    SearchStrategy strategy = SearchStrategy::backtracking;
    int threads = 1;
};

struct SearchResult {
    bool found = false;
    // Meaningful when found == false: true iff the whole space was explored,
    // so the failure proves nonexistence under this pattern.
    bool conclusive = false;
    std::optional<PartitionMatrix> p;
    std::int64_t nodes_explored = 0;
    // Per structure: index of an inactive fundamental cycle (when found).
    std::vector<std::size_t> certificate;
};

// Constructs a partition matrix breaking every structure, or reports
// failure. Backtracking assigns edges in row-major order with the pattern's
// value order, checking only cycles fully contained in the assigned prefix;
// the random strategy draws and tests whole assignments.
SearchResult search_assignment(const BaseGraph& base, const SearchConfig& cfg);

struct VerifyReport {
    bool ok = false;
    // Per structure: index of the first inactive fundamental cycle, or -1.
    std::vector<std::ptrdiff_t> certificate;
    std::vector<std::size_t> violations;  // structures with every cycle active
};

VerifyReport verify_assignment(const BaseGraph& base, const PartitionMatrix& p,
                               const CouplingPattern& pattern, const HarmfulStructureSet& hset);

}  // namespace scspread

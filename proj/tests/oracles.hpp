#pragma once

// Independent brute-force oracles used only by the test suites. None of
// them share an algorithmic path with the library routines they check.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "scspread/bigint.hpp"
#include "scspread/bounds.hpp"
#include "scspread/counting.hpp"
#include "scspread/cycles.hpp"
#include "scspread/protograph.hpp"
#include "scspread/rng.hpp"

namespace oracles {

using scspread::BaseGraph;
using scspread::BigInt;
using scspread::CouplingPattern;
using scspread::CycleCandidate;
using scspread::HarmfulStructureSet;
using scspread::PartitionMatrix;

// Exact m(a_1..a_n; N) by dynamic programming over coordinates and sums.
inline std::optional<BigInt> dp_min_grid_product(const std::vector<long long>& sizes,
                                                 long long target_sum) {
    std::map<long long, BigInt> reachable;
    reachable[0] = 1;
    for (long long a : sizes) {
        std::map<long long, BigInt> next;
        for (const auto& [sum, prod] : reachable) {
            for (long long y = 1; y <= a; ++y) {
                if (sum + y > target_sum) break;
                const BigInt candidate = prod * y;
                auto it = next.find(sum + y);
                if (it == next.end() || candidate < it->second) next[sum + y] = candidate;
            }
        }
        reachable = std::move(next);
    }
    auto it = reachable.find(target_sum);
    if (it == reachable.end()) return std::nullopt;
    return it->second;
}

// Every 6-cycle with distinct rows and distinct columns, found by exhaustive
// closed-walk enumeration and canonical deduplication.
inline std::set<CycleCandidate> closed_walk_6cycles(const BaseGraph& base) {
    std::set<CycleCandidate> found;
    for (int j1 = 0; j1 < base.kappa; ++j1)
        for (int j2 = 0; j2 < base.kappa; ++j2)
            for (int j3 = 0; j3 < base.kappa; ++j3) {
                if (j1 == j2 || j1 == j3 || j2 == j3) continue;
                for (int i1 = 0; i1 < base.gamma; ++i1)
                    for (int i2 = 0; i2 < base.gamma; ++i2)
                        for (int i3 = 0; i3 < base.gamma; ++i3) {
                            if (i1 == i2 || i1 == i3 || i2 == i3) continue;
                            found.insert(scspread::make_canonical({i1, i2, i3}, {j1, j2, j3}));
                        }
            }
    return found;
}

// Minimum hitting-set load by enumerating every one-cycle-per-structure
// choice directly on edge grids.
inline int brute_force_min_hitting_load(const BaseGraph& base, const HarmfulStructureSet& hset) {
    const auto& structures = hset.structures();
    std::vector<std::size_t> choice(structures.size(), 0);
    int best = -1;
    while (true) {
        std::set<CycleCandidate> picked;
        for (std::size_t s = 0; s < structures.size(); ++s)
            picked.insert(structures[s][choice[s]]);
        const auto profile =
            scspread::edge_loads(base, {picked.begin(), picked.end()});
        if (best < 0 || profile.max_load < best) best = profile.max_load;

        std::size_t level = 0;
        while (level < structures.size() && ++choice[level] == structures[level].size())
            choice[level++] = 0;
        if (level == structures.size()) break;
    }
    return best < 0 ? 0 : best;
}

// Valid-assignment count by plain recursion over edges, evaluating every
// structure with is_active on a real PartitionMatrix.
inline long long recursive_count_valid(const BaseGraph& base, const CouplingPattern& pattern,
                                       const HarmfulStructureSet& hset) {
    std::vector<int> entries(static_cast<std::size_t>(base.edge_count()), 0);
    long long count = 0;
    auto valid = [&]() {
        const PartitionMatrix p(base.gamma, base.kappa, entries);
        for (const auto& structure : hset.structures()) {
            bool broken = false;
            for (const auto& c : structure)
                if (!scspread::is_active(c, p)) {
                    broken = true;
                    break;
                }
            if (!broken) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, std::size_t e) -> void {
        if (e == entries.size()) {
            if (valid()) ++count;
            return;
        }
        for (int v : pattern.values()) {
            entries[e] = v;
            self(self, e + 1);
        }
    };
    rec(rec, 0);
    return count;
}

// How many other 4-cycles share at least one edge with `c`.
inline long long brute_force_dependency_degree(const BaseGraph& base, const CycleCandidate& c) {
    auto edges_of = [&](const CycleCandidate& cand) {
        std::set<std::pair<int, int>> edges;
        const int g = cand.half_length();
        for (int k = 0; k < g; ++k) {
            edges.emplace(cand.rows[static_cast<std::size_t>(k)], cand.cols[static_cast<std::size_t>(k)]);
            edges.emplace(cand.rows[static_cast<std::size_t>(k)],
                          cand.cols[static_cast<std::size_t>((k + 1) % g)]);
        }
        return edges;
    };
    const auto mine = edges_of(c);
    long long sharing = 0;
    for (const auto& other : scspread::enumerate_cycle_candidates(base, 2)) {
        if (other == c) continue;
        const auto theirs = edges_of(other);
        const bool overlaps = std::any_of(theirs.begin(), theirs.end(),
                                          [&](const auto& e) { return mine.count(e) > 0; });
        if (overlaps) ++sharing;
    }
    return sharing;
}

// Deterministic random partition matrix with entries drawn from the pattern.
inline PartitionMatrix random_partition(const BaseGraph& base, const CouplingPattern& pattern,
                                        std::uint64_t seed) {
    const scspread::CounterRng rng(seed);
    std::vector<int> entries(static_cast<std::size_t>(base.edge_count()));
    for (std::size_t e = 0; e < entries.size(); ++e)
        entries[e] = pattern.values()[static_cast<std::size_t>(
            rng.below(e, static_cast<std::uint64_t>(pattern.size())))];
    return PartitionMatrix(base.gamma, base.kappa, std::move(entries));
}

}  // namespace oracles

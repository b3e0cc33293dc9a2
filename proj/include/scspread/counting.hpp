#pragma once

#include <cstdint>
#include <vector>

#include "scspread/bigint.hpp"
#include "scspread/bounds.hpp"
#include "scspread/protograph.hpp"

namespace scspread {

// Per-coordinate set sizes (#A_1, ..., #A_n) of a finite grid.
struct GridSpec {
    std::vector<long long> sizes;
};

// m(a_1, ..., a_n; N): minimum of prod y_i over integer vectors with
// 1 <= y_i <= a_i and sum y_i = N. Computed greedily: sorted ascending, the
// deficit sum(a_i) - N is concentrated in the smallest coordinates first.
// Infeasible N (N < n or N > sum a_i) is a domain error.
BigInt min_grid_product(const GridSpec& grid, long long target_sum);

// Uniform-grid closed form: with D = q(s-1) + r, 0 <= r < s-1,
// m(s, ..., s; ns - D) = s^(n-q) when r = 0 and (s-r) s^(n-q-1) otherwise.
BigInt uniform_min_product(long long n, long long s, long long D);

struct CountingBound {
    long long degree = 0;  // total degree of the elimination polynomial
    long long q = 0;
    long long r = 0;
    BigInt bound;
    BigInt grid_total;
};

// Lower bound on the number of assignments over a size-(m_t+1) pattern that
// deactivate every 4-cycle. Requires m_t >= (gamma-1)(kappa-1); the degree
// is D_4 = binom(gamma,2) binom(kappa,2) and D_4 = q m_t + r.
CountingBound c4_counting_bound(int gamma, int kappa, long long mt);

// Same counting bound for an arbitrary elimination-polynomial degree over
// the uniform grid of n coordinates with m_t + 1 values each.
CountingBound general_af_bound(long long n, long long mt, long long degree);

// Exact number of assignments in S^(gamma kappa) under which every
// structure has at least one inactive fundamental cycle. Guarded by
// `budget` on the grid size; suggests monte_carlo_fraction when exceeded.
std::int64_t exhaustive_count_valid(const BaseGraph& base, const CouplingPattern& pattern,
                                    const HarmfulStructureSet& hset,
                                    std::int64_t budget = 100'000'000, int threads = 1);

struct FractionEstimate {
    double fraction = 0;
    double wilson_low = 0;  // 99% Wilson score interval
    double wilson_high = 0;
    std::int64_t samples = 0;
    std::int64_t valid = 0;
    std::uint64_t seed = 0;
};

// Seeded, reproducible estimate of the valid-assignment fraction; draws are
// a pure function of (seed, sample index, edge index).
FractionEstimate monte_carlo_fraction(const BaseGraph& base, const CouplingPattern& pattern,
                                      const HarmfulStructureSet& hset, std::int64_t samples,
                                      std::uint64_t seed, int threads = 1);

// 99% Wilson score interval for `successes` out of `trials`.
std::pair<double, double> wilson_interval_99(std::int64_t successes, std::int64_t trials);

}  // namespace scspread

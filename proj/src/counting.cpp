#include "scspread/counting.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "scspread/errors.hpp"
#include "scspread/parallel.hpp"
#include "scspread/rng.hpp"

namespace scspread {

BigInt min_grid_product(const GridSpec& grid, long long target_sum) {
    const std::size_t n = grid.sizes.size();
    if (n == 0) throw std::domain_error("min_grid_product: grid must have at least one coordinate");
    long long total = 0;
    for (long long a : grid.sizes) {
        if (a < 1) throw std::domain_error("min_grid_product: coordinate sizes must be >= 1");
        total += a;
    }
    if (target_sum < static_cast<long long>(n) || target_sum > total)
        throw std::domain_error("min_grid_product: target sum " + std::to_string(target_sum) +
                                " outside feasible range [" + std::to_string(n) + ", " +
                                std::to_string(total) + "]");

    std::vector<long long> sizes = grid.sizes;
    std::sort(sizes.begin(), sizes.end());

    // Concentrate the deficit in the smallest coordinates: drive them to 1
    // while the deficit allows, put the remainder on the next one.
    long long deficit = total - target_sum;
    std::size_t k = 0;
    while (k < n && deficit >= sizes[k] - 1) {
        deficit -= sizes[k] - 1;
        ++k;
    }
    BigInt product = 1;
    if (k < n && deficit > 0) {
        product = sizes[k] - deficit;
        ++k;
    }
    // Remaining coordinates stay at their caps; group equal sizes into pows.
    while (k < n) {
        std::size_t run = k;
        while (run < n && sizes[run] == sizes[k]) ++run;
        product *= bigint_pow(BigInt(sizes[k]), static_cast<unsigned long>(run - k));
        k = run;
    }
    return product;
}

namespace {

// Same cap as make_base_graph; keeps bigint powers at sane sizes.
constexpr long long kMaxCoordinates = 1'000'000;

}  // namespace

BigInt uniform_min_product(long long n, long long s, long long D) {
    if (n < 1 || n > kMaxCoordinates)
        throw std::domain_error("uniform_min_product: n must be in [1, " +
                                std::to_string(kMaxCoordinates) + "]");
    if (s < 2) throw std::domain_error("uniform_min_product: s must be >= 2");
    if (D < 0 || D > n * (s - 1))
        throw std::domain_error("uniform_min_product: D = " + std::to_string(D) +
                                " outside [0, " + std::to_string(n * (s - 1)) + "]");
    const long long q = D / (s - 1);
    const long long r = D % (s - 1);
    if (r == 0) return bigint_pow(BigInt(s), static_cast<unsigned long>(n - q));
    return BigInt(s - r) * bigint_pow(BigInt(s), static_cast<unsigned long>(n - q - 1));
}

CountingBound c4_counting_bound(int gamma, int kappa, long long mt) {
    if (gamma < 1 || kappa < 1)
        throw std::invalid_argument("c4_counting_bound: dimensions must be >= 1");
    if (static_cast<long long>(gamma) * kappa > kMaxCoordinates)
        throw std::invalid_argument("c4_counting_bound: gamma * kappa exceeds " +
                                    std::to_string(kMaxCoordinates));
    const long long threshold = memory_bound_girth6(gamma, kappa);
    if (mt < threshold)
        throw std::domain_error("c4_counting_bound: requires m_t >= (gamma-1)(kappa-1) = " +
                                std::to_string(threshold));
    const long long n = static_cast<long long>(gamma) * kappa;
    CountingBound result;
    result.degree = static_cast<long long>(gamma) * (gamma - 1) / 2 * kappa * (kappa - 1) / 2;
    result.grid_total = bigint_pow(BigInt(mt + 1), static_cast<unsigned long>(n));
    if (result.degree == 0) {
        // No 4-cycles: every assignment qualifies.
        result.bound = result.grid_total;
        return result;
    }
    result.q = result.degree / mt;
    result.r = result.degree % mt;
    result.bound = uniform_min_product(n, mt + 1, result.degree);
    return result;
}

CountingBound general_af_bound(long long n, long long mt, long long degree) {
    if (n < 1 || n > kMaxCoordinates)
        throw std::domain_error("general_af_bound: n must be in [1, " +
                                std::to_string(kMaxCoordinates) + "]");
    if (mt < 0) throw std::domain_error("general_af_bound: m_t must be >= 0");
    if (degree < 0 || degree > n * mt)
        throw std::domain_error("general_af_bound: degree = " + std::to_string(degree) +
                                " outside [0, " + std::to_string(n * mt) + "]");
    CountingBound result;
    result.degree = degree;
    result.grid_total = bigint_pow(BigInt(mt + 1), static_cast<unsigned long>(n));
    if (degree == 0) {
        result.bound = result.grid_total;
        return result;
    }
    result.q = degree / mt;
    result.r = degree % mt;
    result.bound = uniform_min_product(n, mt + 1, degree);
    return result;
}

namespace {

// Structures compiled to flat edge-index lists: a cycle is active iff the
// assignment values on `plus` and `minus` have equal sums.
struct CompiledCycle {
    std::vector<int> plus;
    std::vector<int> minus;
};

using CompiledStructures = std::vector<std::vector<CompiledCycle>>;

CompiledStructures compile_structures(const BaseGraph& base, const HarmfulStructureSet& hset) {
    hset.check_in_range(base);
    CompiledStructures compiled;
    compiled.reserve(hset.size());
    for (const auto& structure : hset.structures()) {
        std::vector<CompiledCycle> cycles;
        cycles.reserve(structure.size());
        for (const auto& c : structure) {
            CompiledCycle cc;
            const int g = c.half_length();
            for (int k = 0; k < g; ++k) {
                const int i = c.rows[static_cast<std::size_t>(k)];
                cc.plus.push_back(i * base.kappa + c.cols[static_cast<std::size_t>(k)]);
                cc.minus.push_back(i * base.kappa + c.cols[static_cast<std::size_t>((k + 1) % g)]);
            }
            cycles.push_back(std::move(cc));
        }
        compiled.push_back(std::move(cycles));
    }
    return compiled;
}

bool assignment_valid(const std::vector<int>& values, const CompiledStructures& compiled) {
    for (const auto& structure : compiled) {
        bool broken = false;
        for (const auto& cycle : structure) {
            long long diff = 0;
            for (int e : cycle.plus) diff += values[static_cast<std::size_t>(e)];
            for (int e : cycle.minus) diff -= values[static_cast<std::size_t>(e)];
            if (diff != 0) {
                broken = true;
                break;
            }
        }
        if (!broken) return false;
    }
    return true;
}

}  // namespace

std::int64_t exhaustive_count_valid(const BaseGraph& base, const CouplingPattern& pattern,
                                    const HarmfulStructureSet& hset, std::int64_t budget,
                                    int threads) {
    const long long n = base.edge_count();
    const long long s = pattern.size();
    std::int64_t total = 1;
    for (long long e = 0; e < n; ++e) {
        if (total > budget / s) {
            const double projected = std::pow(static_cast<double>(s), static_cast<double>(n));
            throw resource_limit_error(
                "exhaustive_count_valid: grid of about " + std::to_string(projected) +
                    " assignments exceeds budget " + std::to_string(budget) +
                    "; use monte_carlo_fraction instead",
                projected, budget);
        }
        total *= s;
    }
    const auto compiled = compile_structures(base, hset);

    auto count_range = [&](std::int64_t lo, std::int64_t hi) -> std::int64_t {
        // Decode lo into a base-s odometer, most significant digit first.
        std::vector<int> digits(static_cast<std::size_t>(n), 0);
        std::vector<int> values(static_cast<std::size_t>(n), 0);
        std::int64_t rem = lo;
        for (long long e = n - 1; e >= 0; --e) {
            digits[static_cast<std::size_t>(e)] = static_cast<int>(rem % s);
            values[static_cast<std::size_t>(e)] =
                pattern.values()[static_cast<std::size_t>(digits[static_cast<std::size_t>(e)])];
            rem /= s;
        }
        std::int64_t count = 0;
        for (std::int64_t idx = lo; idx < hi; ++idx) {
            if (assignment_valid(values, compiled)) ++count;
            for (long long e = n - 1; e >= 0; --e) {
                auto& d = digits[static_cast<std::size_t>(e)];
                if (++d < s) {
                    values[static_cast<std::size_t>(e)] =
                        pattern.values()[static_cast<std::size_t>(d)];
                    break;
                }
                d = 0;
                values[static_cast<std::size_t>(e)] = pattern.values()[0];
            }
        }
        return count;
    };

    return detail::chunked_reduce(std::int64_t{0}, total, threads, std::int64_t{0}, count_range,
                                  [](std::int64_t a, std::int64_t b) { return a + b; });
}

std::pair<double, double> wilson_interval_99(std::int64_t successes, std::int64_t trials) {
    if (trials < 1) throw std::invalid_argument("wilson_interval_99: trials must be >= 1");
    const double z = 2.5758293035489004;  // two-sided 99% normal quantile
    const double nf = static_cast<double>(trials);
    const double phat = static_cast<double>(successes) / nf;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nf;
    const double center = (phat + z2 / (2.0 * nf)) / denom;
    const double half =
        z * std::sqrt(phat * (1.0 - phat) / nf + z2 / (4.0 * nf * nf)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

FractionEstimate monte_carlo_fraction(const BaseGraph& base, const CouplingPattern& pattern,
                                      const HarmfulStructureSet& hset, std::int64_t samples,
                                      std::uint64_t seed, int threads) {
    if (samples < 1) throw std::invalid_argument("monte_carlo_fraction: samples must be >= 1");
    const auto compiled = compile_structures(base, hset);
    const long long n = base.edge_count();
    const std::uint64_t s = static_cast<std::uint64_t>(pattern.size());
    const CounterRng rng(seed);

    auto count_range = [&](std::int64_t lo, std::int64_t hi) -> std::int64_t {
        std::vector<int> values(static_cast<std::size_t>(n), 0);
        std::int64_t count = 0;
        for (std::int64_t k = lo; k < hi; ++k) {
            const std::uint64_t offset = static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(n);
            for (long long e = 0; e < n; ++e)
                values[static_cast<std::size_t>(e)] =
                    pattern.values()[static_cast<std::size_t>(rng.below(offset + static_cast<std::uint64_t>(e), s))];
            if (assignment_valid(values, compiled)) ++count;
        }
        return count;
    };

    FractionEstimate est;
    est.samples = samples;
    est.seed = seed;
    est.valid = detail::chunked_reduce(std::int64_t{0}, samples, threads, std::int64_t{0},
                                       count_range,
                                       [](std::int64_t a, std::int64_t b) { return a + b; });
    est.fraction = static_cast<double>(est.valid) / static_cast<double>(samples);
    std::tie(est.wilson_low, est.wilson_high) = wilson_interval_99(est.valid, samples);
    return est;
}

}  // namespace scspread

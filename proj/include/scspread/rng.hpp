#pragma once

#include <cstdint>

namespace scspread {

// SplitMix64 finalizer applied to a seeded counter stream. value(i) is a
// pure function of (seed, i), so any subsequence can be generated out of
// order or in parallel and still reproduce bit-for-bit.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t value(std::uint64_t counter) const {
        std::uint64_t z = seed_ + (counter + 1) * 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform draw from [0, bound) via 128-bit multiply-shift.
    std::uint64_t below(std::uint64_t counter, std::uint64_t bound) const {
        using u128 = unsigned __int128;
        return static_cast<std::uint64_t>((static_cast<u128>(value(counter)) * bound) >> 64);
    }

    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
};

}  // namespace scspread

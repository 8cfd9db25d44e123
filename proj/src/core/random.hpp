#pragma once

#include <cstdint>

namespace monomtest {

// SplitMix64. Used for every randomized suite and the ideal generator so
// runs are reproducible independent of the standard library's
// distributions.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform-ish in [0, n); modulo bias is irrelevant for test data
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

    // inclusive range
    std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }
};

}  // namespace monomtest

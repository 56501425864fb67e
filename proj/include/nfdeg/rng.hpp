#pragma once

#include <cstdint>
#include <random>

#include "nfdeg/errors.hpp"

namespace nfdeg {

// splitmix64 output function. Used both as the seed mixer for derived
// per-trial seeds and (indirectly) to decorrelate raw user seeds.
inline std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
}

// Per-trial seed derivation: one splitmix64 step from the base seed.
// Documented in CONVENTIONS.md; suite trial i uses derive_seed(seed, i).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    return mix64(base + (index + 1) * 0x9E3779B97F4A7C15ULL);
}

// Deterministic random source. The engine is std::mt19937_64, whose output
// sequence is pinned by the language standard, and all bounded draws go
// through the rejection sampler below rather than std::uniform_int_
// distribution (whose mapping is implementation-defined). Together these
// make every generated instance reproducible across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t raw() { return engine_(); }

    // Uniform draw from [0, n) by rejection.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw domain_error("Rng::below requires n >= 1");
        std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t r;
        do {
            r = engine_();
        } while (r >= limit);
        return r % n;
    }

    // Uniform draw from the inclusive range [lo, hi].
    long range(long lo, long hi) {
        if (lo > hi) throw domain_error("Rng::range requires lo <= hi");
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(below(span));
    }

    bool flip() { return below(2) == 1; }

private:
    std::mt19937_64 engine_;
};

} // namespace nfdeg

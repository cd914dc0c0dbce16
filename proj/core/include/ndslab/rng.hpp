#pragma once

#include <cstdint>
#include <random>

#include "ndslab/rational.hpp"

namespace ndslab {

/// Seed-deterministic random source. Raw mt19937_64 output is mapped to
/// ranges by hand so that streams are identical across platforms and
/// standard-library versions.
class Rng {
public:
    explicit Rng(std::uint64_t seed)
        : engine_(seed), seed_mix_(seed * 0x9e3779b97f4a7c15ull + 0x2545f4914f6cdd1dull) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, n).
    std::uint64_t index(std::uint64_t n) {
        // rejection sampling keeps the stream unbiased
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return v % n;
    }

    bool coin() { return (engine_() & 1u) != 0; }

    /// Uniform rational k/2^bits with k in [0, 2^bits].
    Rational unit(unsigned bits = 16) {
        const std::uint64_t den = std::uint64_t(1) << bits;
        std::uint64_t k = index(den + 1);
        return Rational(static_cast<long long>(k)) / Rational(static_cast<long long>(den));
    }

    /// Uniform rational strictly inside (lo, hi) on a 2^bits grid.
    Rational open_between(const Rational& lo, const Rational& hi, unsigned bits = 16) {
        const std::uint64_t den = std::uint64_t(1) << bits;
        std::uint64_t k = 1 + index(den - 1);
        return lo + (hi - lo) * Rational(static_cast<long long>(k)) / Rational(static_cast<long long>(den));
    }

    /// Uniform rational in [lo, hi] on a 2^bits grid.
    Rational between(const Rational& lo, const Rational& hi, unsigned bits = 16) {
        return lo + (hi - lo) * unit(bits);
    }

    /// Derives an independent child stream; stable under call order.
    Rng child(std::uint64_t salt) {
        std::uint64_t s = seed_mix_ ^ (salt * 0x9e3779b97f4a7c15ull);
        s ^= s >> 30;
        s *= 0xbf58476d1ce4e5b9ull;
        s ^= s >> 27;
        return Rng(s);
    }

private:
    std::mt19937_64 engine_;
    std::uint64_t seed_mix_;
};

}  // namespace ndslab

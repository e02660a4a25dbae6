#pragma once

#include <cstdint>

#include "dsp/matrix.hpp"

namespace dsp {

/// Small deterministic generator (xorshift64*) for seed-driven constructions
/// and randomized tests.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : s_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next() {
        s_ ^= s_ >> 12;
        s_ ^= s_ << 25;
        s_ ^= s_ >> 27;
        return s_ * 0x2545F4914F6CDD1DULL;
    }

    /// Uniform-ish integer in [lo, hi].
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Rational rational(long max_num, long max_den) {
        long num = range(-max_num, max_num);
        long den = range(1, max_den);
        Rational r(num, den);
        r.canonicalize();
        return r;
    }

private:
    std::uint64_t s_;
};

/// Product of unit-triangular integer matrices: exactly invertible with
/// integer inverse.
ExactMatrix random_unimodular(int n, Rng& rng, long max_entry = 2);

}  // namespace dsp

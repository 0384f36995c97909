#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "qshuffle/laurent.hpp"

namespace qshuffle {

// Seeded random stream with a platform-independent integer draw, so a
// (config, seed) pair reproduces byte-identical runs everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [lo, hi] (inclusive), unbiased via rejection.
    int uniform(int lo, int hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return lo + static_cast<int>(x % span);
    }

    int nonzero_uniform(int lo, int hi) {
        int x;
        do {
            x = uniform(lo, hi);
        } while (x == 0);
        return x;
    }

    Rational rational(int lo, int hi, int den_hi = 4) {
        return Rational(nonzero_uniform(lo, hi), uniform(1, den_hi));
    }

private:
    std::mt19937_64 engine_;
};

// Random degree-1 numerator: Laurent polynomial in one variable with
// exponents in [lo_deg, hi_deg] and small integer coefficients, nonzero.
LaurentPoly random_univariate(Rng& rng, int lo_deg = -2, int hi_deg = 2);

// Random sparse symmetric Laurent polynomial: a sum of two symmetrized
// monomials with exponents in [-2, 3] (two or three distinct values each,
// keeping orbits small) and coefficients in [-9, 9].
LaurentPoly random_sparse_symmetric(int arity, Rng& rng);

}  // namespace qshuffle

#pragma once

#include <random>

#include "supersplit/bundle.hpp"

namespace supersplit {

/// Deterministic RNG wrapper (mt19937_64 is bit-exact across platforms;
/// distributions are hand-rolled to keep streams reproducible).
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(uint64_t seed) : eng(seed) {}
    uint64_t next() { return eng(); }
    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
    }
    Rational coeff(long bound = 3) {
        long v = range(-bound, bound);
        return Rational(v == 0 ? 1 : v);
    }
};

/// Random homogeneous element of the given Z-degree and parity; Laurent
/// exponents are kept at or above -max_pole.
SuperPoly random_homogeneous(Rng& rng, SuperSpaceSig sp, int degree, Parity parity,
                             int max_terms, int max_pole);

/// Random even endomorphism-shaped matrix (source = target) obeying the
/// degree/parity invariants. Roughly half the draws have an invertible
/// bosonic reduction.
SuperMatrix random_even_square(Rng& rng, SuperSpaceSig sp, int max_rank_even,
                               int max_rank_odd, int twist_lo, int twist_hi);

/// Gauge dressing of the split model: g'_ij = h_i g_ij h_j^{-1} with
/// h_i = 1 + nu_i, nu_i nilpotent (entries in the odd ideal) and regular on
/// D(x_i). The result is exactly isomorphic to the split bundle.
TransitionBundle dress_split(Rng& rng, SuperSpaceSig sp,
                             const std::vector<int>& even_twists,
                             const std::vector<int>& odd_twists, int max_terms,
                             int max_pole);

}  // namespace supersplit

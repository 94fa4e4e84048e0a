#pragma once

#include <optional>
#include <stdexcept>

#include "supersplit/bundle.hpp"
#include "supersplit/sparse_rank.hpp"

namespace supersplit {

/// Raised when the clipped Cech dimensions still differ between window W
/// and W+1; the caller must raise the window.
struct NotStabilized : std::runtime_error {
    int t, i, window;
    NotStabilized(int t_, int i_, int w)
        : std::runtime_error("cech cohomology not stabilized at window W=" +
                             std::to_string(w) + " (t=" + std::to_string(t_) +
                             ", i=" + std::to_string(i_) + ")"),
          t(t_), i(i_), window(w) {}
};

/// One finite slice of the Cech complex of E(t) on the standard cover:
/// level p holds degree-t Laurent monomial sections over the (p+1)-fold
/// chart intersections, poles clipped to exponent >= -W on the inverted
/// variables. Image monomials pushed below the clip by a transition are
/// kept as tracked out-of-window rows, so the boundary maps are exact
/// restrictions of the infinite complex and d.d = 0 holds on the nose.
struct CechSlice {
    int t = 0;
    int window = 0;
    int level_shift = 0;  // max transition exponent
    // basis sizes per level and parity
    std::vector<long> dim_even, dim_odd;
    // boundary matrices d_p : C^p -> C^{p+1}, stored column-wise (one sparse
    // image vector per domain basis element), per parity; row indices at or
    // beyond outside_*[p] address image monomials that left the window
    std::vector<std::vector<SparseVecQ>> d_even, d_odd;
    std::vector<long> outside_even, outside_odd;
};

/// Build levels lo..hi (inclusive) of the slice.
CechSlice build_cech_slice(const TransitionBundle& E, int t, int W, int lo, int hi);

/// Default base window max(|t|, max transition exponent) + n + m + 2.
int default_window(const TransitionBundle& E, int t);

/// Clipped Cech dimensions of H^i(E(t)) at base window W.
SuperDim cech_dims_at(const TransitionBundle& E, int t, int i, int W);

/// Dimensions with the stabilization certificate: W and W+1 must agree,
/// otherwise NotStabilized is thrown.
SuperDim cech_cohomology(const TransitionBundle& E, int t, int i, int W);

/// Escalating variant starting from the default window.
SuperDim cech_cohomology_auto(const TransitionBundle& E, int t, int i,
                              int max_raise = 16);

}  // namespace supersplit

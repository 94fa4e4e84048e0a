#pragma once

#include "supersplit/cech.hpp"

namespace supersplit {

/// h^i(P^n, O(a)): C(n+a, n) in degree 0 for a >= 0, C(-a-1, n) in degree n
/// for a <= -n-1, zero otherwise.
long bott_line(int n, int a, int i);

/// h^i(P^{n|m}, O(a)) via the pushforward decomposition: the level-k piece
/// contributes C(m,k) copies of h^i(P^n, O(a-k)) with parity k mod 2.
SuperDim super_line_cohomology(SuperSpaceSig space, int a, int i);

struct CechOptions {
    std::optional<int> window;  // strict W (checked against W+1) when set
    int max_raise = 16;         // escalation budget for the auto window
};

/// h^i(E(t)); closed form for split bundles, Cech for transition bundles.
SuperDim cohomology(const Bundle& E, int t, int i, const CechOptions& opt = {});

struct RaoTable {
    int i = 0;
    int t_min = 0, t_max = -1;
    std::vector<SuperDim> dims;

    const SuperDim& at(int t) const { return dims.at(t - t_min); }
    bool all_zero() const {
        for (const auto& d : dims)
            if (!d.is_zero()) return false;
        return true;
    }
};

RaoTable rao_table(const Bundle& E, int i, int t_min, int t_max,
                   const CechOptions& opt = {});

/// dim Hom-complex cohomology: h^i(E (x) F^dual) at twist 0. For split F
/// this is the direct sum of the h^i(E(-a)) over F's twists, with a parity
/// shift for the odd ones.
SuperDim hom_superdim(const Bundle& F, const Bundle& E, int i,
                      const CechOptions& opt = {});

}  // namespace supersplit

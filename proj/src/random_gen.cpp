#include "supersplit/random_gen.hpp"

#include <algorithm>

namespace supersplit {

namespace {

std::vector<uint8_t> random_theta_subset(Rng& rng, int m, Parity parity,
                                         bool nonempty) {
    std::vector<uint8_t> pick;
    if (m == 0 || (parity == Parity::Odd && m < 1)) return pick;
    for (int tries = 0; tries < 64; ++tries) {
        pick.clear();
        for (int j = 0; j < m; ++j)
            if (rng.next() & 1) pick.push_back(static_cast<uint8_t>(j + 1));
        if ((pick.size() & 1) == static_cast<size_t>(parity) &&
            (!nonempty || !pick.empty()))
            return pick;
    }
    pick.clear();
    if (parity == Parity::Odd) pick = {1};
    else if (nonempty && m >= 2) pick = {1, 2};
    return pick;
}

}  // namespace

SuperPoly random_homogeneous(Rng& rng, SuperSpaceSig sp, int degree, Parity parity,
                             int max_terms, int max_pole) {
    const int nv = sp.nvars();
    SuperPoly p(nv, sp.m);
    if (parity == Parity::Odd && sp.m == 0) return p;
    const long nterms = rng.range(1, std::max(1, max_terms));
    for (long q = 0; q < nterms; ++q) {
        std::vector<uint8_t> S = random_theta_subset(rng, sp.m, parity, false);
        if ((S.size() & 1) != static_cast<size_t>(parity)) continue;
        const int xdeg = degree - static_cast<int>(S.size());
        Monomial mono(nv);
        mono.odd = S;
        // random composition of xdeg with entries >= -max_pole
        int rem = xdeg;
        for (int k = 0; k < nv - 1; ++k) {
            int lo = -max_pole, hi = rem + max_pole * (nv - 1 - k);
            if (hi < lo) break;
            int v = static_cast<int>(rng.range(lo, std::min(hi, std::abs(xdeg) + 2)));
            v = std::max(lo, std::min(v, hi));
            mono.xexp[k] = v;
            rem -= v;
        }
        if (rem < -max_pole) continue;
        mono.xexp[nv - 1] = rem;
        p.add_term(mono, rng.coeff());
    }
    return p;
}

SuperMatrix random_even_square(Rng& rng, SuperSpaceSig sp, int max_rank_even,
                               int max_rank_odd, int twist_lo, int twist_hi) {
    const int pe = static_cast<int>(rng.range(0, max_rank_even));
    const int qo = static_cast<int>(rng.range(pe == 0 ? 1 : 0, max_rank_odd));
    // mostly uniform twists per parity so that the reduced blocks carry
    // constant entries and the invertible case is well represented
    const bool uniform = rng.range(0, 4) != 0;
    std::vector<int> evens(pe), odds(qo);
    const int ae = static_cast<int>(rng.range(twist_lo, twist_hi));
    const int bo = static_cast<int>(rng.range(twist_lo, twist_hi));
    for (int k = 0; k < pe; ++k)
        evens[k] = uniform ? ae : static_cast<int>(rng.range(twist_lo, twist_hi));
    for (int k = 0; k < qo; ++k)
        odds[k] = uniform ? bo : static_cast<int>(rng.range(twist_lo, twist_hi));
    FreeSupermodule mod(evens, odds);
    SuperMatrix f(sp, mod, mod);
    const int nv = sp.nvars();
    for (int r = 0; r < mod.rank(); ++r) {
        for (int c = 0; c < mod.rank(); ++c) {
            const int deg = mod.twist(c) - mod.twist(r);
            const Parity par = mod.parity(r) + mod.parity(c);
            SuperPoly entry(nv, sp.m);
            if (par == Parity::Even) {
                // theta-free part drives invertibility of the reduction
                if (deg == 0) {
                    entry += SuperPoly::constant(nv, sp.m,
                                                 Rational(rng.range(-3, 3)));
                } else if (rng.next() & 1) {
                    SuperPoly h = random_homogeneous(rng, sp, deg, par, 2, 2);
                    entry += h.bosonic_reduce();
                }
                if (sp.m >= 2 && rng.range(0, 2) == 0) {
                    SuperPoly nil = random_homogeneous(rng, sp, deg, par, 2, 2);
                    entry += nil - nil.bosonic_reduce();
                }
            } else if (rng.range(0, 3) != 0) {
                entry = random_homogeneous(rng, sp, deg, par, 2, 2);
            }
            f.at(r, c) = std::move(entry);
        }
    }
    // occasionally force a singular reduction by duplicating a row
    if (uniform && pe >= 2 && rng.range(0, 3) == 0) {
        for (int c = 0; c < mod.rank(); ++c) {
            SuperPoly copy = f.at(0, c);
            f.at(1, c) = (mod.parity(c) == Parity::Even)
                             ? copy.bosonic_reduce() +
                                   (f.at(1, c) - f.at(1, c).bosonic_reduce())
                             : f.at(1, c);
        }
    }
    return f;
}

TransitionBundle dress_split(Rng& rng, SuperSpaceSig sp,
                             const std::vector<int>& even_twists,
                             const std::vector<int>& odd_twists, int max_terms,
                             int max_pole) {
    TransitionBundle base = make_split(sp, even_twists, odd_twists);
    const int nv = sp.nvars();
    const FreeSupermodule frame0 = base.frame.zeroed();
    std::vector<SuperMatrix> h;
    for (int chart = 0; chart <= sp.n; ++chart) {
        SuperMatrix hi = SuperMatrix::identity(sp, frame0);
        for (int r = 0; r < frame0.rank(); ++r) {
            for (int c = 0; c < frame0.rank(); ++c) {
                const Parity par = frame0.parity(r) + frame0.parity(c);
                if (sp.m == 0) break;
                const long nterms = rng.range(0, max_terms);
                for (long q = 0; q < nterms; ++q) {
                    std::vector<uint8_t> S = random_theta_subset(rng, sp.m, par, true);
                    if (S.empty() || (S.size() & 1) != static_cast<size_t>(par))
                        continue;
                    // degree-0 term theta_S x^e with poles only at the chart
                    const int k = static_cast<int>(
                        rng.range(static_cast<long>(S.size()),
                                  std::max<long>(S.size(), max_pole)));
                    Monomial mono(nv);
                    mono.odd = S;
                    mono.xexp[chart] = -k;
                    int rem = k - static_cast<int>(S.size());
                    while (rem > 0) {
                        int v = static_cast<int>(rng.range(0, sp.n - 1));
                        int var = v >= chart ? v + 1 : v;
                        mono.xexp[var] += 1;
                        --rem;
                    }
                    hi.at(r, c).add_term(mono, rng.coeff());
                }
            }
        }
        h.push_back(std::move(hi));
    }
    TransitionBundle E;
    E.space = sp;
    E.frame = base.frame;
    for (const auto& [key, g] : base.transitions) {
        const auto [i, j] = key;
        SuperMatrix dressed =
            compose(compose(h[i], g), invert_local(h[j], {j}));
        E.transitions.emplace(key, std::move(dressed));
    }
    return E;
}

}  // namespace supersplit

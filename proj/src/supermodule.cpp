#include "supersplit/supermodule.hpp"

#include <algorithm>
#include <stdexcept>

namespace supersplit {

FreeSupermodule FreeSupermodule::direct_sum(const FreeSupermodule& o) const {
    FreeSupermodule r = *this;
    r.even.insert(r.even.end(), o.even.begin(), o.even.end());
    r.odd.insert(r.odd.end(), o.odd.begin(), o.odd.end());
    return r;
}

FreeSupermodule FreeSupermodule::tensor(const FreeSupermodule& o) const {
    FreeSupermodule r;
    for (int a : even)
        for (int b : o.even) r.even.push_back(a + b);
    for (int a : odd)
        for (int b : o.odd) r.even.push_back(a + b);
    for (int a : even)
        for (int b : o.odd) r.odd.push_back(a + b);
    for (int a : odd)
        for (int b : o.even) r.odd.push_back(a + b);
    return r;
}

int FreeSupermodule::max_abs_twist() const {
    int mx = 0;
    for (int a : even) mx = std::max(mx, std::abs(a));
    for (int b : odd) mx = std::max(mx, std::abs(b));
    return mx;
}

bool FreeSupermodule::same_type(const FreeSupermodule& o) const {
    auto se = even, so = odd, oe = o.even, oo = o.odd;
    std::sort(se.begin(), se.end());
    std::sort(so.begin(), so.end());
    std::sort(oe.begin(), oe.end());
    std::sort(oo.begin(), oo.end());
    return se == oe && so == oo;
}

// Index of e_{k1} (x) e_{k2} in the tensor generator order used by
// FreeSupermodule::tensor: even block [ee | oo], odd block [eo | oe],
// each sub-block ordered lexicographically by (k1, k2).
static int tensor_index(const FreeSupermodule& F, const FreeSupermodule& G, int k1,
                        int k2) {
    const int p1 = F.rank_even(), q1 = F.rank_odd();
    const int p2 = G.rank_even(), q2 = G.rank_odd();
    const bool o1 = k1 >= p1, o2 = k2 >= p2;
    if (!o1 && !o2) return k1 * p2 + k2;
    if (o1 && o2) return p1 * p2 + (k1 - p1) * q2 + (k2 - p2);
    const int even_rank = p1 * p2 + q1 * q2;
    if (!o1) return even_rank + k1 * q2 + (k2 - p2);
    return even_rank + p1 * q2 + (k1 - p1) * p2 + k2;
}

SuperMatrix::SuperMatrix(SuperSpaceSig sp, FreeSupermodule src, FreeSupermodule tgt,
                         Parity par)
    : space(sp), source(std::move(src)), target(std::move(tgt)), parity(par) {
    e.assign(static_cast<size_t>(source.rank()) * target.rank(),
             SuperPoly(space.nvars(), space.m));
}

SuperMatrix SuperMatrix::identity(SuperSpaceSig sp, const FreeSupermodule& mod) {
    SuperMatrix f(sp, mod, mod);
    for (int k = 0; k < mod.rank(); ++k)
        f.at(k, k) = SuperPoly::constant(sp.nvars(), sp.m, 1);
    return f;
}

bool SuperMatrix::is_zero() const {
    for (const auto& p : e)
        if (!p.is_zero()) return false;
    return true;
}

int SuperMatrix::max_abs_exponent() const {
    int mx = 0;
    for (const auto& p : e) mx = std::max(mx, p.max_abs_exponent());
    return mx;
}

SuperMatrix SuperMatrix::scaled(const Rational& c) const {
    SuperMatrix r = *this;
    for (auto& p : r.e) p = p.scaled(c);
    return r;
}

SuperMatrix operator+(const SuperMatrix& a, const SuperMatrix& b) {
    if (a.source != b.source || a.target != b.target || a.parity != b.parity)
        throw std::invalid_argument("shape mismatch in matrix +");
    SuperMatrix r = a;
    for (size_t k = 0; k < r.e.size(); ++k) r.e[k] += b.e[k];
    return r;
}

SuperMatrix operator-(const SuperMatrix& a, const SuperMatrix& b) {
    if (a.source != b.source || a.target != b.target || a.parity != b.parity)
        throw std::invalid_argument("shape mismatch in matrix -");
    SuperMatrix r = a;
    for (size_t k = 0; k < r.e.size(); ++k) r.e[k] -= b.e[k];
    return r;
}

SuperMatrix compose(const SuperMatrix& g, const SuperMatrix& f) {
    if (g.source != f.target) throw std::invalid_argument("compose: shape mismatch");
    SuperMatrix r(g.space, f.source, g.target, g.parity + f.parity);
    for (int i = 0; i < g.rows(); ++i) {
        for (int k = 0; k < g.cols(); ++k) {
            if (g.at(i, k).is_zero()) continue;
            for (int j = 0; j < f.cols(); ++j) {
                if (f.at(k, j).is_zero()) continue;
                r.at(i, j) += g.at(i, k) * f.at(k, j);
            }
        }
    }
    return r;
}

SuperMatrix bosonic_reduce_matrix(const SuperMatrix& f) {
    SuperMatrix r = f;
    for (auto& p : r.e) p = p.bosonic_reduce();
    return r;
}

SuperMatrix tensor(const SuperMatrix& f, const SuperMatrix& g) {
    if (f.space != g.space) throw std::invalid_argument("tensor: space mismatch");
    SuperMatrix r(f.space, f.source.tensor(g.source), f.target.tensor(g.target),
                  f.parity + g.parity);
    const int gp = static_cast<int>(g.parity);
    for (int rr = 0; rr < f.rows(); ++rr) {
        const int pr = static_cast<int>(f.target.parity(rr));
        for (int cc = 0; cc < f.cols(); ++cc) {
            if (f.at(rr, cc).is_zero()) continue;
            const int pc = static_cast<int>(f.source.parity(cc));
            for (int rr2 = 0; rr2 < g.rows(); ++rr2) {
                const int pr2 = static_cast<int>(g.target.parity(rr2));
                for (int cc2 = 0; cc2 < g.cols(); ++cc2) {
                    if (g.at(rr2, cc2).is_zero()) continue;
                    const int pc2 = static_cast<int>(g.source.parity(cc2));
                    // Koszul: g moves past the source generator of f, and the
                    // entry of g moves past the target generator of f.
                    const int sgn = gp * pc + (gp + pr2 + pc2) * pr;
                    SuperPoly prod = f.at(rr, cc) * g.at(rr2, cc2);
                    if (sgn & 1) prod = -prod;
                    r.at(tensor_index(f.target, g.target, rr, rr2),
                         tensor_index(f.source, g.source, cc, cc2)) = std::move(prod);
                }
            }
        }
    }
    return r;
}

SuperMatrix dual(const SuperMatrix& f) {
    if (f.parity != Parity::Even)
        throw std::invalid_argument("dual: implemented for even morphisms");
    SuperMatrix r(f.space, f.target.dual(), f.source.dual(), Parity::Even);
    for (int rr = 0; rr < f.rows(); ++rr) {
        const int pr = static_cast<int>(f.target.parity(rr));
        for (int cc = 0; cc < f.cols(); ++cc) {
            if (f.at(rr, cc).is_zero()) continue;
            const int pc = static_cast<int>(f.source.parity(cc));
            const bool neg = ((1 + pr) * pc) & 1;
            r.at(cc, rr) = neg ? -f.at(rr, cc) : f.at(rr, cc);
        }
    }
    return r;
}

SuperMatrix direct_sum(const SuperMatrix& f, const SuperMatrix& g) {
    if (f.space != g.space || f.parity != g.parity)
        throw std::invalid_argument("direct_sum: mismatch");
    SuperMatrix r(f.space, f.source.direct_sum(g.source),
                  f.target.direct_sum(g.target), f.parity);
    auto blkrow = [&](const FreeSupermodule& a, const FreeSupermodule& b, int k,
                      bool second) {
        // generator index of summand k inside the direct sum a (+) b
        const int pa = a.rank_even(), qa = a.rank_odd();
        const int pb = b.rank_even();
        if (!second) return k < pa ? k : k + pb;
        return k < pb ? pa + k : pa + pb + qa + (k - pb);
    };
    for (int rr = 0; rr < f.rows(); ++rr)
        for (int cc = 0; cc < f.cols(); ++cc)
            if (!f.at(rr, cc).is_zero())
                r.at(blkrow(f.target, g.target, rr, false),
                     blkrow(f.source, g.source, cc, false)) = f.at(rr, cc);
    for (int rr = 0; rr < g.rows(); ++rr)
        for (int cc = 0; cc < g.cols(); ++cc)
            if (!g.at(rr, cc).is_zero())
                r.at(blkrow(f.target, g.target, rr, true),
                     blkrow(f.source, g.source, cc, true)) = g.at(rr, cc);
    return r;
}

SuperMatrix parity_shift(const SuperMatrix& f) {
    SuperMatrix r(f.space, f.source.pi(), f.target.pi(), f.parity);
    auto perm = [](const FreeSupermodule& mod, int k) {
        // index in mod of the generator that sits at slot k of mod.pi()
        const int q = mod.rank_odd();
        return k < q ? mod.rank_even() + k : k - q;
    };
    for (int rr = 0; rr < r.rows(); ++rr)
        for (int cc = 0; cc < r.cols(); ++cc)
            r.at(rr, cc) = f.at(perm(f.target, rr), perm(f.source, cc));
    return r;
}

SuperMatrix twist(const SuperMatrix& f, int t) {
    SuperMatrix r = f;
    r.source = r.source.twisted(t);
    r.target = r.target.twisted(t);
    return r;
}

bool validate(const SuperMatrix& f) {
    if (static_cast<int>(f.e.size()) != f.rows() * f.cols()) return false;
    for (int rr = 0; rr < f.rows(); ++rr) {
        for (int cc = 0; cc < f.cols(); ++cc) {
            const SuperPoly& p = f.at(rr, cc);
            if (p.is_zero()) continue;
            if (!p.localize_check()) return false;
            auto d = p.degree();
            if (!d || *d != f.source.twist(cc) - f.target.twist(rr)) return false;
            auto par = p.parity();
            if (!par || *par != f.source.parity(cc) + f.target.parity(rr) + f.parity)
                return false;
        }
    }
    return true;
}

SuperPoly commutative_det(const SuperMatrix& f, const std::vector<int>& rowsel,
                          const std::vector<int>& colsel) {
    const int s = static_cast<int>(rowsel.size());
    if (s != static_cast<int>(colsel.size()))
        throw std::invalid_argument("det: non-square selection");
    const int nv = f.space.nvars(), mo = f.space.m;
    if (s == 0) return SuperPoly::constant(nv, mo, 1);
    // subset DP: dp[mask] = det of rows 0..popcount(mask)-1, columns in mask
    std::vector<SuperPoly> dp(static_cast<size_t>(1) << s, SuperPoly(nv, mo));
    dp[0] = SuperPoly::constant(nv, mo, 1);
    for (uint32_t mask = 1; mask < dp.size(); ++mask) {
        const int k = __builtin_popcount(mask) - 1;
        SuperPoly acc(nv, mo);
        int pos = 0;
        for (int j = 0; j < s; ++j) {
            if (!(mask & (1u << j))) continue;
            const SuperPoly& entry = f.at(rowsel[k], colsel[j]);
            if (!entry.is_zero()) {
                SuperPoly contrib = entry * dp[mask & ~(1u << j)];
                if ((k + pos) & 1) contrib = -contrib;
                acc += contrib;
            }
            ++pos;
        }
        dp[mask] = std::move(acc);
    }
    return dp[dp.size() - 1];
}

static void block_selectors(const SuperMatrix& f, std::vector<int>& er,
                            std::vector<int>& ec, std::vector<int>& orr,
                            std::vector<int>& oc) {
    er.clear(); ec.clear(); orr.clear(); oc.clear();
    for (int k = 0; k < f.target.rank(); ++k)
        (f.target.parity(k) == Parity::Even ? er : orr).push_back(k);
    for (int k = 0; k < f.source.rank(); ++k)
        (f.source.parity(k) == Parity::Even ? ec : oc).push_back(k);
}

bool is_invertible_local(const SuperMatrix& f, const std::vector<int>& allowed) {
    if (f.parity != Parity::Even)
        throw std::invalid_argument("is_invertible: odd morphism");
    if (f.source.rank_even() != f.target.rank_even() ||
        f.source.rank_odd() != f.target.rank_odd())
        throw std::invalid_argument("is_invertible: non-square input");
    if (!f.source.same_type(f.target)) return false;
    SuperMatrix red = bosonic_reduce_matrix(f);
    std::vector<int> er, ec, orr, oc;
    block_selectors(red, er, ec, orr, oc);
    return commutative_det(red, er, ec).is_monomial_unit(allowed) &&
           commutative_det(red, orr, oc).is_monomial_unit(allowed);
}

bool is_invertible(const SuperMatrix& f) { return is_invertible_local(f, {}); }

// Inverse of an invertible theta-free block via the adjugate; det must be a
// single-term unit so the division is an exact Laurent operation.
static void invert_block(const SuperMatrix& f0, const std::vector<int>& rowsel,
                         const std::vector<int>& colsel, SuperMatrix& out) {
    const int s = static_cast<int>(rowsel.size());
    SuperPoly det = commutative_det(f0, rowsel, colsel);
    const Monomial& dm = det.terms().begin()->first;
    Rational dc = det.terms().begin()->second;
    std::vector<int32_t> negexp(dm.xexp.size());
    for (size_t k = 0; k < negexp.size(); ++k) negexp[k] = -dm.xexp[k];
    for (int i = 0; i < s; ++i) {
        for (int j = 0; j < s; ++j) {
            // adjugate: cofactor of (j, i)
            std::vector<int> rs, cs;
            for (int k = 0; k < s; ++k)
                if (k != j) rs.push_back(rowsel[k]);
            for (int k = 0; k < s; ++k)
                if (k != i) cs.push_back(colsel[k]);
            SuperPoly minor = commutative_det(f0, rs, cs);
            if ((i + j) & 1) minor = -minor;
            out.at(colsel[i], rowsel[j]) = minor.scaled(1 / dc).xshifted(negexp);
        }
    }
}

SuperMatrix invert_local(const SuperMatrix& f, const std::vector<int>& allowed) {
    if (!is_invertible_local(f, allowed))
        throw std::domain_error("invert: matrix is not invertible");
    SuperMatrix f0 = bosonic_reduce_matrix(f);
    std::vector<int> er, ec, orr, oc;
    block_selectors(f0, er, ec, orr, oc);
    SuperMatrix f0inv(f.space, f.target, f.source, Parity::Even);
    invert_block(f0, er, ec, f0inv);
    invert_block(f0, orr, oc, f0inv);
    SuperMatrix nu = f - f0;
    if (nu.is_zero()) return f0inv;
    // f = f0 (I + f0^{-1} nu), so f^{-1} = sum_k (-f0^{-1} nu)^k f0^{-1};
    // the series stops at k = m because nu^{m+1} has theta-degree > m.
    SuperMatrix step = compose(f0inv, nu).scaled(-1);
    SuperMatrix power = SuperMatrix::identity(f.space, f.source);
    SuperMatrix result(f.space, f.target, f.source, Parity::Even);
    for (int k = 0; k <= f.space.m; ++k) {
        result = result + compose(power, f0inv);
        if (k == f.space.m) break;
        power = compose(step, power);
        if (power.is_zero()) break;
    }
    return result;
}

SuperMatrix invert(const SuperMatrix& f) { return invert_local(f, {}); }

}  // namespace supersplit

#pragma once

#include <utility>
#include <vector>

#include "supersplit/superpoly.hpp"

namespace supersplit {

/// Free Z-graded supermodule  (+)O(a_i) (+) Pi (+)O(b_j), recorded as the
/// two twist lists. Generator order is significant: generators are indexed
/// 0..p-1 (even block) then p..p+q-1 (odd block).
struct FreeSupermodule {
    std::vector<int> even;
    std::vector<int> odd;

    FreeSupermodule() = default;
    FreeSupermodule(std::vector<int> e, std::vector<int> o)
        : even(std::move(e)), odd(std::move(o)) {}

    int rank_even() const { return static_cast<int>(even.size()); }
    int rank_odd() const { return static_cast<int>(odd.size()); }
    int rank() const { return rank_even() + rank_odd(); }

    int twist(int k) const { return k < rank_even() ? even[k] : odd[k - rank_even()]; }
    Parity parity(int k) const { return k < rank_even() ? Parity::Even : Parity::Odd; }

    FreeSupermodule pi() const { return {odd, even}; }
    FreeSupermodule dual() const {
        FreeSupermodule d = *this;
        for (int& a : d.even) a = -a;
        for (int& b : d.odd) b = -b;
        return d;
    }
    FreeSupermodule twisted(int t) const {
        FreeSupermodule r = *this;
        for (int& a : r.even) a += t;
        for (int& b : r.odd) b += t;
        return r;
    }
    FreeSupermodule zeroed() const {
        return {std::vector<int>(even.size(), 0), std::vector<int>(odd.size(), 0)};
    }
    FreeSupermodule direct_sum(const FreeSupermodule& o) const;
    FreeSupermodule tensor(const FreeSupermodule& o) const;

    int max_abs_twist() const;

    /// Same twist multisets per parity (generator order ignored).
    bool same_type(const FreeSupermodule& o) const;

    friend bool operator==(const FreeSupermodule& a, const FreeSupermodule& b) {
        return a.even == b.even && a.odd == b.odd;
    }
    friend bool operator!=(const FreeSupermodule& a, const FreeSupermodule& b) {
        return !(a == b);
    }
};

/// Z-degree homogeneous morphism between free supermodules, stored as a
/// dense entry matrix over the superring (rows: target generators, cols:
/// source generators). For an even morphism the diagonal blocks have even
/// entries and the off-diagonal blocks odd entries; an odd morphism is the
/// complement. Entry (r,c) is homogeneous of Z-degree
/// twist(source,c) - twist(target,r).
struct SuperMatrix {
    SuperSpaceSig space;
    FreeSupermodule source;
    FreeSupermodule target;
    Parity parity = Parity::Even;
    std::vector<SuperPoly> e;  // row-major, target.rank() x source.rank()

    SuperMatrix() = default;
    SuperMatrix(SuperSpaceSig sp, FreeSupermodule src, FreeSupermodule tgt,
                Parity par = Parity::Even);

    int rows() const { return target.rank(); }
    int cols() const { return source.rank(); }
    SuperPoly& at(int r, int c) { return e[static_cast<size_t>(r) * cols() + c]; }
    const SuperPoly& at(int r, int c) const {
        return e[static_cast<size_t>(r) * cols() + c];
    }

    static SuperMatrix identity(SuperSpaceSig sp, const FreeSupermodule& mod);

    bool is_zero() const;
    int max_abs_exponent() const;
    SuperMatrix scaled(const Rational& c) const;
    friend SuperMatrix operator+(const SuperMatrix& a, const SuperMatrix& b);
    friend SuperMatrix operator-(const SuperMatrix& a, const SuperMatrix& b);
    friend bool operator==(const SuperMatrix& a, const SuperMatrix& b) {
        return a.source == b.source && a.target == b.target && a.parity == b.parity &&
               a.e == b.e;
    }
    friend bool operator!=(const SuperMatrix& a, const SuperMatrix& b) { return !(a == b); }
};

/// g after f; requires source(g) == target(f).
SuperMatrix compose(const SuperMatrix& g, const SuperMatrix& f);

/// Entrywise image in K[x]; kills the off-diagonal blocks of an even
/// morphism since their entries are odd.
SuperMatrix bosonic_reduce_matrix(const SuperMatrix& f);

SuperMatrix tensor(const SuperMatrix& f, const SuperMatrix& g);
SuperMatrix dual(const SuperMatrix& f);
SuperMatrix direct_sum(const SuperMatrix& f, const SuperMatrix& g);
SuperMatrix parity_shift(const SuperMatrix& f);
SuperMatrix twist(const SuperMatrix& f, int t);

/// Degree/parity homogeneity of every entry against the twist data.
bool validate(const SuperMatrix& f);

/// Determinant over the commutative (theta-free) Laurent subring.
SuperPoly commutative_det(const SuperMatrix& f, const std::vector<int>& rowsel,
                          const std::vector<int>& colsel);

/// Invertibility over the ring localized at the listed x-variables: the
/// reduced diagonal blocks must have unit determinants (monomials in the
/// allowed variables). The global notion passes allowed = {}.
bool is_invertible_local(const SuperMatrix& f, const std::vector<int>& allowed);

/// f even and square with matching twist multisets, and det(A~), det(D~)
/// nonzero constants. Twist-multiset mismatch yields false, not an error.
bool is_invertible(const SuperMatrix& f);

SuperMatrix invert_local(const SuperMatrix& f, const std::vector<int>& allowed);

/// Exact two-sided inverse; requires is_invertible(f). Built by inverting
/// the theta-free part blockwise and summing the terminating geometric
/// series of the nilpotent remainder.
SuperMatrix invert(const SuperMatrix& f);

}  // namespace supersplit

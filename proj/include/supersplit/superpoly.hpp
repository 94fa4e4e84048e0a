#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "supersplit/monomial.hpp"

namespace supersplit {

using Rational = mpq_class;

/// Element of K[x_0..x_n, theta_1..theta_m] with Laurent x-exponents,
/// K = exact rationals. Terms are kept sparse, keyed by normal-form
/// monomials under a deterministic total order; zero coefficients are
/// never stored.
class SuperPoly {
public:
    SuperPoly() = default;
    SuperPoly(int nvars, int modd) : nvars_(nvars), modd_(modd) {}

    static SuperPoly zero(int nvars, int modd) { return SuperPoly(nvars, modd); }
    static SuperPoly constant(int nvars, int modd, const Rational& c);
    static SuperPoly variable(int nvars, int modd, int k);        // x_k
    static SuperPoly theta(int nvars, int modd, int j);           // theta_j, 1-based
    static SuperPoly term(int nvars, int modd, Monomial mono, const Rational& c);

    int nvars() const { return nvars_; }
    int modd() const { return modd_; }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    bool is_constant() const;
    Rational constant_value() const;  // 0 when zero; requires is_constant()

    /// Single term c*x^e (no thetas) with poles supported in `allowed`?
    bool is_monomial_unit(const std::vector<int>& allowed) const;

    void add_term(const Monomial& mono, const Rational& c);

    SuperPoly& operator+=(const SuperPoly& o);
    SuperPoly& operator-=(const SuperPoly& o);
    friend SuperPoly operator+(SuperPoly a, const SuperPoly& b) { return a += b; }
    friend SuperPoly operator-(SuperPoly a, const SuperPoly& b) { return a -= b; }
    SuperPoly operator-() const;

    /// Product with the Koszul sign rule (a*b = (-1)^{|a||b|} b*a on
    /// homogeneous elements; theta_j^2 = 0).
    friend SuperPoly operator*(const SuperPoly& a, const SuperPoly& b);
    SuperPoly& operator*=(const SuperPoly& o) { return *this = *this * o; }

    SuperPoly scaled(const Rational& c) const;
    /// Multiply by the Laurent monomial x^shift.
    SuperPoly xshifted(const std::vector<int32_t>& shift) const;

    /// Image in K[x] = ring / (ideal generated by the odd elements).
    SuperPoly bosonic_reduce() const;

    /// theta-free part is zero, i.e. the element lies in the odd ideal J.
    bool in_odd_ideal() const;

    std::optional<int> degree() const;      // Z-degree when homogeneous
    std::optional<Parity> parity() const;   // Z_2-parity when homogeneous
    int max_abs_exponent() const;
    int min_theta_count() const;  // 0 for the zero poly

    bool regular_outside(const std::vector<int>& inverted) const;

    /// Structural validity of the stored representation (normal-form
    /// keys, no zero coefficients, exponent vectors of the right length).
    bool localize_check() const;

    std::string str() const;

    friend bool operator==(const SuperPoly& a, const SuperPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const SuperPoly& a, const SuperPoly& b) { return !(a == b); }

private:
    int nvars_ = 1;
    int modd_ = 0;
    std::map<Monomial, Rational> terms_;
};

}  // namespace supersplit

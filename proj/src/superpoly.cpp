#include "supersplit/superpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace supersplit {

SuperPoly SuperPoly::constant(int nvars, int modd, const Rational& c) {
    SuperPoly p(nvars, modd);
    if (c != 0) p.terms_.emplace(Monomial(nvars), c);
    return p;
}

SuperPoly SuperPoly::variable(int nvars, int modd, int k) {
    if (k < 0 || k >= nvars) throw std::invalid_argument("variable index out of range");
    Monomial mono(nvars);
    mono.xexp[k] = 1;
    return term(nvars, modd, mono, 1);
}

SuperPoly SuperPoly::theta(int nvars, int modd, int j) {
    if (j < 1 || j > modd) throw std::invalid_argument("theta index out of range");
    Monomial mono(nvars);
    mono.odd.push_back(static_cast<uint8_t>(j));
    return term(nvars, modd, mono, 1);
}

SuperPoly SuperPoly::term(int nvars, int modd, Monomial mono, const Rational& c) {
    SuperPoly p(nvars, modd);
    p.add_term(mono, c);
    return p;
}

bool SuperPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first.degree() == 0 &&
           terms_.begin()->first.theta_free() &&
           terms_.begin()->first.max_abs_exponent() == 0;
}

Rational SuperPoly::constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant()) throw std::logic_error("constant_value on non-constant");
    return terms_.begin()->second;
}

bool SuperPoly::is_monomial_unit(const std::vector<int>& allowed) const {
    if (terms_.size() != 1) return false;
    const Monomial& mono = terms_.begin()->first;
    if (!mono.theta_free()) return false;
    for (int k = 0; k < nvars_; ++k) {
        if (mono.xexp[k] != 0 &&
            std::find(allowed.begin(), allowed.end(), k) == allowed.end())
            return false;
    }
    return true;
}

void SuperPoly::add_term(const Monomial& mono, const Rational& c) {
    if (c == 0) return;
    if (static_cast<int>(mono.xexp.size()) != nvars_ || !mono.valid())
        throw std::invalid_argument("monomial does not fit the ring");
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
        terms_.emplace(mono, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SuperPoly& SuperPoly::operator+=(const SuperPoly& o) {
    if (!o.is_zero() && !is_zero() && (nvars_ != o.nvars_ || modd_ != o.modd_))
        throw std::invalid_argument("ring mismatch in +");
    if (is_zero()) {
        nvars_ = o.nvars_;
        modd_ = o.modd_;
    }
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
}

SuperPoly& SuperPoly::operator-=(const SuperPoly& o) {
    if (!o.is_zero() && !is_zero() && (nvars_ != o.nvars_ || modd_ != o.modd_))
        throw std::invalid_argument("ring mismatch in -");
    if (is_zero()) {
        nvars_ = o.nvars_;
        modd_ = o.modd_;
    }
    for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
    return *this;
}

SuperPoly SuperPoly::operator-() const {
    SuperPoly r(nvars_, modd_);
    for (const auto& [mono, c] : terms_) r.terms_.emplace(mono, -c);
    return r;
}

SuperPoly operator*(const SuperPoly& a, const SuperPoly& b) {
    if (!a.is_zero() && !b.is_zero() && (a.nvars_ != b.nvars_ || a.modd_ != b.modd_))
        throw std::invalid_argument("ring mismatch in *");
    SuperPoly r(a.nvars_, a.modd_);
    std::vector<uint8_t> merged;
    Monomial mono(a.nvars_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            int sign = merge_odd(ma.odd, mb.odd, merged);
            if (sign == 0) continue;
            for (int k = 0; k < a.nvars_; ++k) mono.xexp[k] = ma.xexp[k] + mb.xexp[k];
            mono.odd = merged;
            Rational prod = ca * cb;
            if (sign < 0) prod = -prod;
            r.add_term(mono, prod);
        }
    }
    return r;
}

SuperPoly SuperPoly::scaled(const Rational& c) const {
    SuperPoly r(nvars_, modd_);
    if (c == 0) return r;
    for (const auto& [mono, v] : terms_) r.terms_.emplace(mono, v * c);
    return r;
}

SuperPoly SuperPoly::xshifted(const std::vector<int32_t>& shift) const {
    SuperPoly r(nvars_, modd_);
    for (const auto& [mono, v] : terms_) {
        Monomial s = mono;
        for (int k = 0; k < nvars_; ++k) s.xexp[k] += shift[k];
        r.terms_.emplace(std::move(s), v);
    }
    return r;
}

SuperPoly SuperPoly::bosonic_reduce() const {
    SuperPoly r(nvars_, modd_);
    for (const auto& [mono, v] : terms_)
        if (mono.theta_free()) r.terms_.emplace(mono, v);
    return r;
}

bool SuperPoly::in_odd_ideal() const {
    for (const auto& [mono, v] : terms_)
        if (mono.theta_free()) return false;
    return true;
}

std::optional<int> SuperPoly::degree() const {
    std::optional<int> d;
    for (const auto& [mono, v] : terms_) {
        int md = mono.degree();
        if (!d)
            d = md;
        else if (*d != md)
            return std::nullopt;
    }
    return d ? d : std::optional<int>(0);
}

std::optional<Parity> SuperPoly::parity() const {
    std::optional<Parity> p;
    for (const auto& [mono, v] : terms_) {
        Parity mp = mono.parity();
        if (!p)
            p = mp;
        else if (*p != mp)
            return std::nullopt;
    }
    return p ? p : std::optional<Parity>(Parity::Even);
}

int SuperPoly::max_abs_exponent() const {
    int mx = 0;
    for (const auto& [mono, v] : terms_) mx = std::max(mx, mono.max_abs_exponent());
    return mx;
}

int SuperPoly::min_theta_count() const {
    int mn = 0;
    bool first = true;
    for (const auto& [mono, v] : terms_) {
        int k = static_cast<int>(mono.odd.size());
        mn = first ? k : std::min(mn, k);
        first = false;
    }
    return first ? 0 : mn;
}

bool SuperPoly::regular_outside(const std::vector<int>& inverted) const {
    for (const auto& [mono, v] : terms_)
        if (!mono.regular_outside(inverted)) return false;
    return true;
}

bool SuperPoly::localize_check() const {
    for (const auto& [mono, c] : terms_) {
        if (c == 0) return false;
        if (static_cast<int>(mono.xexp.size()) != nvars_) return false;
        if (!mono.valid()) return false;
        for (uint8_t j : mono.odd)
            if (j < 1 || j > modd_) return false;
    }
    return true;
}

std::string SuperPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str();
        for (int k = 0; k < nvars_; ++k)
            if (mono.xexp[k] != 0) os << "*x" << k << "^" << mono.xexp[k];
        for (uint8_t j : mono.odd) os << "*t" << static_cast<int>(j);
    }
    return os.str();
}

}  // namespace supersplit

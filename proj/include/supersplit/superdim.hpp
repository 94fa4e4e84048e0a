#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace supersplit {

enum class Parity : uint8_t { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b) {
    return static_cast<Parity>((static_cast<int>(a) + static_cast<int>(b)) & 1);
}

inline Parity flip(Parity p) { return p == Parity::Even ? Parity::Odd : Parity::Even; }

/// Dimension pair p|q of a Z_2-graded vector space.
struct SuperDim {
    long even = 0;
    long odd = 0;

    SuperDim() = default;
    SuperDim(long e, long o) : even(e), odd(o) {}

    SuperDim pi() const { return {odd, even}; }

    SuperDim& operator+=(const SuperDim& o) {
        even += o.even;
        odd += o.odd;
        return *this;
    }
    friend SuperDim operator+(SuperDim a, const SuperDim& b) { return a += b; }
    friend SuperDim operator*(long k, const SuperDim& d) { return {k * d.even, k * d.odd}; }
    friend bool operator==(const SuperDim& a, const SuperDim& b) {
        return a.even == b.even && a.odd == b.odd;
    }
    friend bool operator!=(const SuperDim& a, const SuperDim& b) { return !(a == b); }

    bool is_zero() const { return even == 0 && odd == 0; }

    std::string str() const { return std::to_string(even) + "|" + std::to_string(odd); }
};

/// Signature of the ambient projective superspace P^{n|m}.
struct SuperSpaceSig {
    int n = 1;  // even dimension: variables x_0..x_n
    int m = 0;  // odd dimension: variables theta_1..theta_m

    SuperSpaceSig() = default;
    SuperSpaceSig(int n_, int m_) : n(n_), m(m_) {
        if (n < 0 || m < 0 || m > 30 || n > 14)
            throw std::invalid_argument("SuperSpaceSig: unsupported (n,m)");
    }
    int nvars() const { return n + 1; }
    friend bool operator==(const SuperSpaceSig& a, const SuperSpaceSig& b) {
        return a.n == b.n && a.m == b.m;
    }
    friend bool operator!=(const SuperSpaceSig& a, const SuperSpaceSig& b) { return !(a == b); }
};

}  // namespace supersplit

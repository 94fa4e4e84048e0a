#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "supersplit/superdim.hpp"

namespace supersplit {

/// Normal-form monomial x^e * theta_{j_1}...theta_{j_k} with j_1 < ... < j_k.
/// x-exponents may be negative (Laurent); theta indices are 1-based and
/// strictly increasing, which encodes theta_j^2 = 0 at the type level.
struct Monomial {
    std::vector<int32_t> xexp;
    std::vector<uint8_t> odd;

    Monomial() = default;
    explicit Monomial(int nvars) : xexp(nvars, 0) {}
    Monomial(std::vector<int32_t> x, std::vector<uint8_t> o)
        : xexp(std::move(x)), odd(std::move(o)) {}

    int degree() const {
        int d = std::accumulate(xexp.begin(), xexp.end(), 0);
        return d + static_cast<int>(odd.size());
    }

    Parity parity() const { return static_cast<Parity>(odd.size() & 1); }

    bool theta_free() const { return odd.empty(); }

    /// Poles (negative exponents) allowed only at the listed variables.
    bool regular_outside(const std::vector<int>& inverted) const {
        for (int k = 0; k < static_cast<int>(xexp.size()); ++k) {
            if (xexp[k] < 0 &&
                std::find(inverted.begin(), inverted.end(), k) == inverted.end())
                return false;
        }
        return true;
    }

    int max_abs_exponent() const {
        int mx = 0;
        for (int32_t e : xexp) mx = std::max(mx, std::abs(static_cast<int>(e)));
        return mx;
    }

    bool valid() const {
        for (size_t i = 0; i + 1 < odd.size(); ++i)
            if (odd[i] >= odd[i + 1]) return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.xexp == b.xexp && a.odd == b.odd;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
    friend bool operator<(const Monomial& a, const Monomial& b) {
        if (a.xexp != b.xexp)
            return std::lexicographical_compare(a.xexp.begin(), a.xexp.end(),
                                                b.xexp.begin(), b.xexp.end());
        return std::lexicographical_compare(a.odd.begin(), a.odd.end(),
                                            b.odd.begin(), b.odd.end());
    }
};

/// Merge of strictly increasing theta index lists with the Koszul sign.
/// Returns sign in {-1, +1} and writes the merged list, or returns 0 when
/// the lists collide (some theta appears twice).
inline int merge_odd(const std::vector<uint8_t>& a, const std::vector<uint8_t>& b,
                     std::vector<uint8_t>& out) {
    out.clear();
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    long inversions = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return 0;
        if (a[i] < b[j]) {
            out.push_back(a[i++]);
        } else {
            // b[j] jumps over the remaining tail of a
            inversions += static_cast<long>(a.size() - i);
            out.push_back(b[j++]);
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back(b[j]);
    return (inversions & 1) ? -1 : 1;
}

}  // namespace supersplit

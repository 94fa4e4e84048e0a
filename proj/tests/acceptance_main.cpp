// Acceptance suite: runs each numbered criterion at its stated tolerance and
// prints one pass/fail line. Usage: acceptance [--criterion K]
#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <sstream>

#include "supersplit/random_gen.hpp"
#include "supersplit/splitting.hpp"

using namespace supersplit;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Check {
    Outcome& out;
    template <class T>
    void equal(const T& got, const T& want, const std::string& label) {
        if (got == want) return;
        out.pass = false;
        std::ostringstream os;
        if (!out.detail.empty()) os << out.detail << "; ";
        os << label << ": computed " << str(got) << ", required " << str(want);
        out.detail = os.str();
    }
    void require(bool cond, const std::string& label) {
        if (cond) return;
        out.pass = false;
        out.detail = out.detail.empty() ? label : out.detail + "; " + label;
    }
    static std::string str(const SuperDim& d) { return d.str(); }
    static std::string str(long v) { return std::to_string(v); }
    static std::string str(bool v) { return v ? "true" : "false"; }
};

// 1. End(T) on P^{1|1} has dimension 3|1, under 5 s.
Outcome criterion1() {
    Outcome out;
    Check ck{out};
    auto t0 = Clock::now();
    TransitionBundle T = euler_tangent(SuperSpaceSig(1, 1));
    SuperDim dims = hom_superdim(Bundle(T), Bundle(T), 0);
    double elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
    ck.equal(dims, SuperDim(3, 1), "hom_superdim(T,T,0)");
    ck.require(elapsed < 5.0, "runtime under 5 s");
    return out;
}

// 2. Cotangent cohomology on P^{1|1} through the Cech path with the
// stabilization certificate.
Outcome criterion2() {
    Outcome out;
    Check ck{out};
    TransitionBundle Om = euler_cotangent(SuperSpaceSig(1, 1));
    auto value = [&](int t, int i) {
        return cech_cohomology(Om, t, i, default_window(Om, t));
    };
    ck.equal(value(1, 0), SuperDim(0, 0), "H^0(Omega(1))");
    ck.equal(value(1, 1), SuperDim(0, 0), "H^1(Omega(1))");
    ck.equal(value(0, 0), SuperDim(0, 0), "H^0(Omega)");
    ck.equal(value(0, 1), SuperDim(3, 1), "H^1(Omega)");
    return out;
}

// 3. The split case table on P^{1|1}: dim End(O(a)+Pi O(b)) equals
// 2|(|a-b|+1) for a != b and 2|2 for a = b, for all |a|,|b| <= 4.
Outcome criterion3() {
    Outcome out;
    Check ck{out};
    const SuperSpaceSig sp(1, 1);
    long mismatches = 0;
    std::string first;
    for (int a = -4; a <= 4; ++a) {
        for (int b = -4; b <= 4; ++b) {
            Bundle F = SplitBundle{sp, FreeSupermodule({a}, {b})};
            SuperDim got = hom_superdim(F, F, 0);
            SuperDim want = a == b ? SuperDim(2, 2) : SuperDim(2, std::abs(a - b) + 1);
            if (got != want) {
                ++mismatches;
                if (first.empty()) {
                    std::ostringstream os;
                    os << "(a,b)=(" << a << "," << b << "): computed " << got.str()
                       << ", required " << want.str();
                    first = os.str();
                }
            }
        }
    }
    ck.require(mismatches == 0,
               "case table: " + std::to_string(mismatches) + "/81 mismatch, first " +
                   first);
    return out;
}

// 4. 50 seeded coboundary-dressed split bundles on P^{2|1} and P^{2|2},
// rank <= 2|2, twists in [-3,3]: SPLITS with an exact conjugating iso,
// total under 10 minutes.
Outcome criterion4() {
    Outcome out;
    Check ck{out};
    auto t0 = Clock::now();
    Rng rng(20240801);
    for (int trial = 0; trial < 50; ++trial) {
        SuperSpaceSig sp(2, trial % 2 ? 2 : 1);
        const int pe = (int)rng.range(0, 2);
        const int qo = (int)rng.range(pe == 0 ? 1 : 0, 2);
        std::vector<int> evens, odds;
        for (int k = 0; k < pe; ++k) evens.push_back((int)rng.range(-3, 3));
        for (int k = 0; k < qo; ++k) odds.push_back((int)rng.range(-3, 3));
        TransitionBundle E = dress_split(rng, sp, evens, odds, 2, 3);
        CertifyOptions opt;
        opt.seed = 1000 + trial;
        SplitCertificate cert = split_certify(E, opt);
        std::sort(evens.rbegin(), evens.rend());
        std::sort(odds.rbegin(), odds.rend());
        const bool good = cert.verdict == Verdict::Splits && cert.even == evens &&
                          cert.odd == odds && verify_certificate(E, cert);
        if (!good) {
            ck.require(false, "trial " + std::to_string(trial) + ": verdict " +
                                  verdict_name(cert.verdict));
            return out;
        }
    }
    double elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
    ck.require(elapsed < 600.0, "runtime under 10 min");
    return out;
}

// 5. The tangent bundle of P^{1|1} is certified NOT_SPLIT with a
// hom-dimension witness that recomputes exactly.
Outcome criterion5() {
    Outcome out;
    Check ck{out};
    TransitionBundle T = euler_tangent(SuperSpaceSig(1, 1));
    SplitCertificate cert = split_certify(T);
    ck.require(cert.verdict == Verdict::NotSplit, "verdict NOT_SPLIT");
    ck.require(cert.end_dims_mismatch.has_value(), "hom-dimension witness present");
    if (cert.end_dims_mismatch) {
        SuperDim endT = hom_superdim(Bundle(T), Bundle(T), 0);
        Bundle F = SplitBundle{T.space, FreeSupermodule(cert.even, cert.odd)};
        SuperDim endF = hom_superdim(F, F, 0);
        ck.equal(cert.end_dims_mismatch->first, endT, "witness End(E) recheck");
        ck.equal(cert.end_dims_mismatch->second, endF, "witness End(F) recheck");
        ck.require(endT != endF, "witness separates E from the split model");
    }
    return out;
}

// 6. Cech path vs closed form on split bundles, n <= 2, m <= 2, twists and
// window in [-6,6], all degrees; under 5 minutes.
Outcome criterion6() {
    Outcome out;
    Check ck{out};
    auto t0 = Clock::now();
    long checks = 0;
    for (int n = 1; n <= 2; ++n) {
        for (int m = 0; m <= 2; ++m) {
            SuperSpaceSig sp(n, m);
            std::vector<std::pair<std::vector<int>, std::vector<int>>> family;
            for (int a = -6; a <= 6; ++a) {
                family.push_back({{a}, {}});
                family.push_back({{}, {a}});
            }
            family.push_back({{2, -1}, {0}});
            family.push_back({{0}, {3, -2}});
            for (const auto& [ev, od] : family) {
                TransitionBundle E = make_split(sp, ev, od);
                Bundle S = SplitBundle{sp, FreeSupermodule(ev, od)};
                for (int t = -6; t <= 6; ++t) {
                    for (int i = 0; i <= n; ++i) {
                        ++checks;
                        SuperDim got = cech_cohomology_auto(E, t, i);
                        SuperDim want = cohomology(S, t, i);
                        if (got != want) {
                            std::ostringstream os;
                            os << "n=" << n << " m=" << m << " t=" << t << " i=" << i
                               << ": cech " << got.str() << " vs closed form "
                               << want.str();
                            ck.require(false, os.str());
                            return out;
                        }
                    }
                }
            }
        }
    }
    double elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
    ck.require(elapsed < 300.0, "runtime under 5 min");
    out.detail = std::to_string(checks) + " agreements";
    return out;
}

// 7. 200 seeded random even square supermatrices (up to 3|3, m <= 3):
// is_invertible matches the reduction, and the inverse is two-sided exact.
Outcome criterion7() {
    Outcome out;
    Check ck{out};
    Rng rng(424242);
    long invertible = 0;
    for (int trial = 0; trial < 200; ++trial) {
        SuperSpaceSig sp(1 + (int)rng.range(0, 1), 1 + (int)rng.range(0, 2));
        SuperMatrix f = random_even_square(rng, sp, 3, 3, -2, 2);
        if (!validate(f)) {
            ck.require(false, "generated matrix violates the invariants");
            return out;
        }
        const bool inv = is_invertible(f);
        const bool inv_red = is_invertible(bosonic_reduce_matrix(f));
        if (inv != inv_red) {
            ck.require(false, "is_invertible disagrees with the reduction at trial " +
                                  std::to_string(trial));
            return out;
        }
        if (!inv) continue;
        ++invertible;
        SuperMatrix g = invert(f);
        SuperMatrix id = SuperMatrix::identity(sp, f.source);
        if (compose(f, g) != id || compose(g, f) != id) {
            ck.require(false, "inverse identity fails at trial " +
                                  std::to_string(trial));
            return out;
        }
    }
    ck.require(invertible >= 40, "enough invertible samples (" +
                                     std::to_string(invertible) + "/200)");
    out.detail = std::to_string(invertible) + "/200 invertible";
    return out;
}

// 8. Peeling round-trip against the brute-force binomial oracle.
Outcome criterion8() {
    Outcome out;
    Check ck{out};
    Rng rng(31337);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + (int)rng.range(0, 1);
        std::vector<int> evens, odds;
        const int re = (int)rng.range(0, 3);
        const int ro = (int)rng.range(0, 3);
        for (int k = 0; k < re; ++k) evens.push_back((int)rng.range(-5, 5));
        for (int k = 0; k < ro; ++k) odds.push_back((int)rng.range(-5, 5));
        std::sort(evens.rbegin(), evens.rend());
        std::sort(odds.rbegin(), odds.rend());
        std::map<int, SuperDim> h0;
        for (int t = -9; t <= 9; ++t) {
            SuperDim d;
            for (int a : evens) d.even += bott_line(n, a + t, 0);
            for (int b : odds) d.odd += bott_line(n, b + t, 0);
            h0[t] = d;
        }
        PeelResult res = peel_splitting_type(h0, n);
        if (res.status != PeelStatus::Ok || res.even != evens || res.odd != odds) {
            ck.require(false, "round-trip fails at trial " + std::to_string(trial));
            return out;
        }
    }
    return out;
}

// 9. bott_line vs direct monomial enumeration for n <= 3, |a| <= 6.
Outcome criterion9() {
    Outcome out;
    Check ck{out};
    std::function<long(int, int, int, bool)> count = [&](int n, int a, int k,
                                                         bool top) -> long {
        // top: all exponents <= -1; otherwise all >= 0
        if (k == n) {
            if (top) return a <= -1 ? 1 : 0;
            return a >= 0 ? 1 : 0;
        }
        long total = 0;
        if (top) {
            for (int v = -1; v >= a + (n - k); --v) total += count(n, a - v, k + 1, true);
        } else {
            for (int v = 0; v <= std::max(0, a); ++v) total += count(n, a - v, k + 1, false);
        }
        return total;
    };
    for (int n = 1; n <= 3; ++n) {
        for (int a = -6; a <= 6; ++a) {
            if (bott_line(n, a, 0) != count(n, a, 0, false)) {
                ck.require(false, "h0 mismatch at n=" + std::to_string(n) +
                                      " a=" + std::to_string(a));
                return out;
            }
            if (bott_line(n, a, n) != count(n, a, 0, true)) {
                ck.require(false, "hn mismatch at n=" + std::to_string(n) +
                                      " a=" + std::to_string(a));
                return out;
            }
        }
    }
    return out;
}

// 10. Stabilization: the clipped dimensions agree at W and W+1 at the
// default window on every acceptance input.
Outcome criterion10() {
    Outcome out;
    Check ck{out};
    auto stable = [&](const TransitionBundle& E, int t, int i) {
        try {
            (void)cech_cohomology(E, t, i, default_window(E, t));
            return true;
        } catch (const NotStabilized&) {
            return false;
        }
    };
    TransitionBundle Om = euler_cotangent(SuperSpaceSig(1, 1));
    TransitionBundle T = euler_tangent(SuperSpaceSig(1, 1));
    TransitionBundle TOm = tensor_bundle(T, dual_bundle(T));
    for (int t : {0, 1})
        for (int i : {0, 1}) {
            ck.require(stable(Om, t, i), "cotangent slice stabilizes");
            ck.require(stable(TOm, t, i), "End(T) slice stabilizes");
        }
    Rng rng(20240801);
    for (int trial = 0; trial < 6; ++trial) {
        SuperSpaceSig sp(2, trial % 2 ? 2 : 1);
        TransitionBundle E =
            dress_split(rng, sp, {(int)rng.range(-3, 3)}, {(int)rng.range(-3, 3)}, 2, 3);
        for (int t : {-2, 0, 2})
            ck.require(stable(E, t, 1), "dressed slice stabilizes");
    }
    for (int n = 1; n <= 2; ++n)
        for (int m = 1; m <= 2; ++m)
            for (int a : {-6, -3, 0, 3, 6}) {
                TransitionBundle E = make_split(SuperSpaceSig(n, m), {a}, {});
                for (int t : {-6, 0, 6})
                    for (int i = 0; i <= n; ++i)
                        ck.require(stable(E, t, i), "split slice stabilizes");
            }
    return out;
}

struct Criterion {
    int id;
    const char* label;
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int k = 1; k + 1 < argc + 1; ++k) {
        if (std::strcmp(argv[k], "--criterion") == 0 && k + 1 < argc)
            only = std::atoi(argv[k + 1]);
    }
    std::vector<Criterion> criteria = {
        {1, "End(T_{P^{1|1}}) has dimension 3|1", criterion1},
        {2, "cotangent cohomology values on P^{1|1}", criterion2},
        {3, "split case table dim End(O(a)+PiO(b))", criterion3},
        {4, "50 dressed split bundles certify SPLITS", criterion4},
        {5, "tangent bundle certified NOT_SPLIT with witness", criterion5},
        {6, "cech path agrees with the closed form", criterion6},
        {7, "supermatrix invertibility and exact inverses", criterion7},
        {8, "peeling round-trip vs binomial oracle", criterion8},
        {9, "bott numbers vs direct enumeration", criterion9},
        {10, "window stabilization on acceptance inputs", criterion10},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        if (only != 0 && c.id != only) continue;
        auto t0 = Clock::now();
        Outcome out = c.run();
        double elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
        std::printf("[%2d] %-48s %s%s%s  [%.2fs]\n", c.id, c.label,
                    out.pass ? "PASS" : "FAIL", out.detail.empty() ? "" : " - ",
                    out.detail.c_str(), elapsed);
        failures += !out.pass;
    }
    return failures == 0 ? 0 : 1;
}

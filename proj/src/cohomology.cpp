#include "supersplit/cohomology.hpp"

#include "supersplit/parallel.hpp"

namespace supersplit {

long bott_line(int n, int a, int i) {
    if (i < 0 || i > n) throw std::invalid_argument("bott_line: degree out of range");
    if (i == 0 && a >= 0) return binomial(n + a, n);
    if (i == n && a <= -n - 1) return binomial(-a - 1, n);
    return 0;
}

SuperDim super_line_cohomology(SuperSpaceSig space, int a, int i) {
    SuperDim d;
    for (int k = 0; k <= space.m; ++k) {
        long c = binomial(space.m, k) * bott_line(space.n, a - k, i);
        if (k & 1)
            d.odd += c;
        else
            d.even += c;
    }
    return d;
}

static SuperDim split_cohomology(const SplitBundle& E, int t, int i) {
    SuperDim d;
    for (int a : E.module.even) d += super_line_cohomology(E.space, a + t, i);
    for (int b : E.module.odd) d += super_line_cohomology(E.space, b + t, i).pi();
    return d;
}

SuperDim cohomology(const Bundle& E, int t, int i, const CechOptions& opt) {
    if (std::holds_alternative<SplitBundle>(E))
        return split_cohomology(std::get<SplitBundle>(E), t, i);
    const auto& T = std::get<TransitionBundle>(E);
    if (i < 0 || i > T.space.n) return {0, 0};
    if (opt.window) return cech_cohomology(T, t, i, *opt.window);
    return cech_cohomology_auto(T, t, i, opt.max_raise);
}

RaoTable rao_table(const Bundle& E, int i, int t_min, int t_max,
                   const CechOptions& opt) {
    if (t_min > t_max) throw std::invalid_argument("rao_table: empty window");
    RaoTable table;
    table.i = i;
    table.t_min = t_min;
    table.t_max = t_max;
    table.dims.resize(t_max - t_min + 1);
    std::exception_ptr err;
    parallel_for(0, t_max - t_min + 1, [&](int k) {
        try {
            table.dims[k] = cohomology(E, t_min + k, i, opt);
        } catch (...) {
            if (!err) err = std::current_exception();
        }
    });
    if (err) std::rethrow_exception(err);
    return table;
}

SuperDim hom_superdim(const Bundle& F, const Bundle& E, int i, const CechOptions& opt) {
    if (bundle_space(F) != bundle_space(E))
        throw std::invalid_argument("hom_superdim: space mismatch");
    if (std::holds_alternative<SplitBundle>(F)) {
        const auto& mod = std::get<SplitBundle>(F).module;
        SuperDim d;
        for (int a : mod.even) d += cohomology(E, -a, i, opt);
        for (int b : mod.odd) d += cohomology(E, -b, i, opt).pi();
        return d;
    }
    const auto& Ft = std::get<TransitionBundle>(F);
    if (std::holds_alternative<SplitBundle>(E)) {
        const auto& mod = std::get<SplitBundle>(E).module;
        Bundle Fd = dual_bundle(Bundle(Ft));
        SuperDim d;
        for (int a : mod.even) d += cohomology(Fd, a, i, opt);
        for (int b : mod.odd) d += cohomology(Fd, b, i, opt).pi();
        return d;
    }
    TransitionBundle H = tensor_bundle(std::get<TransitionBundle>(E), dual_bundle(Ft));
    return cohomology(H, 0, i, opt);
}

}  // namespace supersplit

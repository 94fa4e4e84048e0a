#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "supersplit/builtins.hpp"
#include "supersplit/json_io.hpp"
#include "supersplit/random_gen.hpp"

namespace py = pybind11;
using namespace supersplit;

namespace {

Bundle parse_bundle(const std::string& s) {
    return bundle_from_json(ordered_json::parse(s));
}

py::tuple dim_pair(const SuperDim& d) { return py::make_tuple(d.even, d.odd); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact sheaf cohomology and splitting certification on P^{n|m}";

    py::register_exception<NotStabilized>(m, "NotStabilizedError");

    m.def("bott_line", &bott_line, py::arg("n"), py::arg("a"), py::arg("i"));

    m.def(
        "super_line_cohomology",
        [](int n, int mm, int a, int i) {
            return dim_pair(super_line_cohomology(SuperSpaceSig(n, mm), a, i));
        },
        py::arg("n"), py::arg("m"), py::arg("a"), py::arg("i"));

    m.def(
        "builtin_bundle",
        [](const std::string& name, int n, int mm) {
            return canonical_dump(
                bundle_to_json(builtin_bundle(name, SuperSpaceSig(n, mm))));
        },
        py::arg("name"), py::arg("n"), py::arg("m"));

    m.def(
        "normalize_bundle",
        [](const std::string& s) {
            return canonical_dump(bundle_to_json(parse_bundle(s)));
        },
        py::arg("bundle_json"));

    m.def(
        "cohomology",
        [](const std::string& s, int t, int i) {
            return dim_pair(cohomology(parse_bundle(s), t, i));
        },
        py::arg("bundle_json"), py::arg("t"), py::arg("i"));

    m.def(
        "rao_table",
        [](const std::string& s, int i, int t_min, int t_max) {
            return canonical_dump(
                rao_to_json(rao_table(parse_bundle(s), i, t_min, t_max)));
        },
        py::arg("bundle_json"), py::arg("i"), py::arg("t_min"), py::arg("t_max"));

    m.def(
        "hom_superdim",
        [](const std::string& f, const std::string& e, int i) {
            return dim_pair(hom_superdim(parse_bundle(f), parse_bundle(e), i));
        },
        py::arg("f_json"), py::arg("e_json"), py::arg("i"));

    m.def(
        "split_certify",
        [](const std::string& s, uint64_t seed) {
            Bundle b = parse_bundle(s);
            TransitionBundle E = std::holds_alternative<TransitionBundle>(b)
                                     ? std::get<TransitionBundle>(b)
                                     : make_split(std::get<SplitBundle>(b));
            CertifyOptions opt;
            opt.seed = seed;
            return canonical_dump(certificate_to_json(split_certify(E, opt)));
        },
        py::arg("bundle_json"), py::arg("seed") = 20240801);

    m.def(
        "dress_split",
        [](int n, int mm, const std::vector<int>& evens, const std::vector<int>& odds,
           uint64_t seed, int max_terms, int max_pole) {
            Rng rng(seed);
            return canonical_dump(bundle_to_json(
                dress_split(rng, SuperSpaceSig(n, mm), evens, odds, max_terms,
                            max_pole)));
        },
        py::arg("n"), py::arg("m"), py::arg("even_twists"), py::arg("odd_twists"),
        py::arg("seed") = 20240801, py::arg("max_terms") = 2, py::arg("max_pole") = 3);

    m.def(
        "poly_mul",
        [](const std::string& a, const std::string& b, int n, int mm) {
            const int nv = n + 1;
            SuperPoly pa = poly_from_json(ordered_json::parse(a), nv, mm);
            SuperPoly pb = poly_from_json(ordered_json::parse(b), nv, mm);
            return canonical_dump(poly_to_json(pa * pb));
        },
        py::arg("a_json"), py::arg("b_json"), py::arg("n"), py::arg("m"));

    m.def(
        "peel_splitting_type",
        [](const std::vector<std::tuple<int, long, long>>& table, int n) {
            std::map<int, SuperDim> h0;
            for (const auto& [t, e, o] : table) h0[t] = SuperDim(e, o);
            PeelResult res = peel_splitting_type(h0, n);
            if (res.status != PeelStatus::Ok)
                throw std::invalid_argument(
                    "NEGATIVE_RESIDUAL: table is not a sum of line bundles");
            return py::make_tuple(res.even, res.odd);
        },
        py::arg("h0_table"), py::arg("n"));
}

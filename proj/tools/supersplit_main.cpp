#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "supersplit/builtins.hpp"
#include "supersplit/json_io.hpp"
#include "supersplit/random_gen.hpp"

using namespace supersplit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;
constexpr int kExitNotStabilized = 3;
constexpr int kExitInconclusive = 4;

SuperSpaceSig parse_space(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("--space expects n,m");
    return SuperSpaceSig(std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1)));
}

Bundle resolve_bundle(const std::string& builtin, const std::string& input,
                      const std::string& space_s) {
    if (!input.empty()) {
        std::ifstream in(input);
        if (!in) throw std::invalid_argument("cannot open input file: " + input);
        ordered_json j = ordered_json::parse(in);
        return bundle_from_json(j);
    }
    if (builtin.empty())
        throw std::invalid_argument("one of --builtin or --input is required");
    return builtin_bundle(builtin, parse_space(space_s));
}

void print_table(const RaoTable& table, const std::string& format) {
    if (format == "json") {
        std::cout << canonical_dump(rao_to_json(table)) << "\n";
        return;
    }
    std::printf("   t  h^%d\n", table.i);
    for (int t = table.t_min; t <= table.t_max; ++t) {
        const SuperDim& d = table.at(t);
        std::printf("%4d  %ld|%ld\n", t, d.even, d.odd);
    }
}

int cmd_cohomology(const std::string& builtin, const std::string& input,
                   const std::string& space_s, int twist, int deg,
                   const std::string& window_s, const std::string& format) {
    Bundle b = resolve_bundle(builtin, input, space_s);
    try {
        if (!window_s.empty()) {
            auto comma = window_s.find(',');
            if (comma == std::string::npos)
                throw std::invalid_argument("--window expects A,B");
            int lo = std::stoi(window_s.substr(0, comma));
            int hi = std::stoi(window_s.substr(comma + 1));
            print_table(rao_table(b, deg, lo, hi), format);
        } else {
            SuperDim d = cohomology(b, twist, deg);
            if (format == "json")
                std::cout << ordered_json{{"t", twist},
                                          {"i", deg},
                                          {"even", d.even},
                                          {"odd", d.odd}}
                                 .dump()
                          << "\n";
            else
                std::cout << d.str() << "\n";
        }
    } catch (const NotStabilized& e) {
        if (format == "json")
            std::cout << canonical_dump(not_stabilized_to_json(e)) << "\n";
        else
            std::cerr << e.what() << "\n";
        return kExitNotStabilized;
    }
    return kExitOk;
}

int cmd_split_check(const std::string& builtin, const std::string& input,
                    const std::string& space_s, const std::string& format,
                    uint64_t seed) {
    Bundle b = resolve_bundle(builtin, input, space_s);
    TransitionBundle E = std::holds_alternative<TransitionBundle>(b)
                             ? std::get<TransitionBundle>(b)
                             : make_split(std::get<SplitBundle>(b));
    CertifyOptions opt;
    opt.seed = seed;
    try {
        SplitCertificate cert = split_certify(E, opt);
        if (format == "json") {
            std::cout << canonical_dump(certificate_to_json(cert)) << "\n";
        } else {
            std::cout << verdict_name(cert.verdict);
            if (cert.verdict == Verdict::Splits) {
                std::cout << "  even:[";
                for (size_t k = 0; k < cert.even.size(); ++k)
                    std::cout << (k ? "," : "") << cert.even[k];
                std::cout << "] odd:[";
                for (size_t k = 0; k < cert.odd.size(); ++k)
                    std::cout << (k ? "," : "") << cert.odd[k];
                std::cout << "]";
            }
            if (!cert.detail.empty()) std::cout << "  (" << cert.detail << ")";
            std::cout << "\n";
        }
        return cert.verdict == Verdict::Inconclusive ? kExitInconclusive : kExitOk;
    } catch (const NotStabilized& e) {
        if (format == "json")
            std::cout << canonical_dump(not_stabilized_to_json(e)) << "\n";
        else
            std::cerr << e.what() << "\n";
        return kExitNotStabilized;
    }
}

struct ExampleCheck {
    std::string label;
    SuperDim computed;
    SuperDim reference;
};

int cmd_examples(uint64_t seed, bool inject_fault) {
    const SuperSpaceSig sp(1, 1);
    TransitionBundle T = euler_tangent(sp);
    if (inject_fault) {
        SuperMatrix& g = T.transitions.at({0, 1});
        g.at(1, 1) = g.at(1, 1).scaled(-1);
    }
    TransitionBundle Om = dual_bundle(T);

    std::vector<ExampleCheck> checks;
    auto coh = [&](const TransitionBundle& B, int t, int i) {
        return cech_cohomology_auto(B, t, i);
    };
    checks.push_back({"h^0(P^{1|1}, O(1))",
                      super_line_cohomology(sp, 1, 0), SuperDim(2, 1)});
    checks.push_back({"H^0(Omega)", coh(Om, 0, 0), SuperDim(0, 0)});
    checks.push_back({"H^0(Omega(1))", coh(Om, 1, 0), SuperDim(0, 0)});
    checks.push_back({"H^1(Omega(1))", coh(Om, 1, 1), SuperDim(0, 0)});
    checks.push_back({"H^1(Omega)", coh(Om, 0, 1), SuperDim(3, 1)});
    checks.push_back(
        {"dim Hom(T,T)", hom_superdim(Bundle(T), Bundle(T), 0), SuperDim(3, 1)});
    for (int d = 0; d <= 3; ++d) {
        Bundle F = Bundle(SplitBundle{sp, FreeSupermodule({d}, {0})});
        SuperDim ref = d == 0 ? SuperDim(2, 2) : SuperDim(2, d + 1);
        checks.push_back({"dim End(O(" + std::to_string(d) + ")+Pi O(0))",
                          hom_superdim(F, F, 0), ref});
    }

    int matched = 0;
    for (const auto& c : checks) {
        const bool ok = c.computed == c.reference;
        matched += ok;
        std::printf("%-34s computed %-6s reference %-6s %s\n", c.label.c_str(),
                    c.computed.str().c_str(), c.reference.str().c_str(),
                    ok ? "ok" : "MISMATCH");
    }

    CertifyOptions copts;
    copts.seed = seed;
    SplitCertificate cert = split_certify(T, copts);
    const bool notsplit_ok = cert.verdict == Verdict::NotSplit;
    std::printf("%-34s computed %-6s reference %-6s %s\n", "split_certify(T)",
                verdict_name(cert.verdict).c_str(), "NOT_SPLIT",
                notsplit_ok ? "ok" : "MISMATCH");
    matched += notsplit_ok;
    const int total = static_cast<int>(checks.size()) + 1;
    std::printf("matched %d/%d\n", matched, total);
    return matched == total ? kExitOk : kExitMismatch;
}

int cmd_normalize(const std::string& input) {
    std::ifstream in(input);
    if (!in) throw std::invalid_argument("cannot open input file: " + input);
    ordered_json j = ordered_json::parse(in);
    std::cout << canonical_dump(bundle_to_json(bundle_from_json(j))) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cohomology and splitting certification on P^{n|m}"};
    app.require_subcommand(1);

    std::string space_s = "1,1", builtin, input, window_s, format = "table";
    int twist = 0, deg = 0;
    uint64_t seed = 20240801;
    bool inject_fault = false;

    auto add_bundle_flags = [&](CLI::App* sub) {
        sub->add_option("--space", space_s, "ambient space n,m");
        sub->add_option("--builtin", builtin, "builtin bundle name");
        sub->add_option("--input", input, "bundle JSON file");
        sub->add_option("--format", format, "table|json");
        sub->add_option("--seed", seed, "deterministic seed");
    };

    CLI::App* coh = app.add_subcommand("cohomology", "compute h^i(E(t)) or a table");
    add_bundle_flags(coh);
    coh->add_option("--twist", twist, "twist t");
    coh->add_option("--i", deg, "cohomology degree");
    coh->add_option("--window", window_s, "twist window A,B for a table");

    CLI::App* split = app.add_subcommand("split-check", "splitting certification");
    add_bundle_flags(split);

    CLI::App* ex = app.add_subcommand("examples",
                                      "reproduce the P^{1|1} tangent bundle "
                                      "computations against reference values");
    ex->add_option("--seed", seed, "deterministic seed");
    ex->add_flag("--inject-fault", inject_fault)->group("");

    CLI::App* norm = app.add_subcommand("normalize", "canonicalize a bundle JSON file");
    norm->add_option("--input", input, "bundle JSON file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (coh->parsed())
            return cmd_cohomology(builtin, input, space_s, twist, deg, window_s, format);
        if (split->parsed())
            return cmd_split_check(builtin, input, space_s, format, seed);
        if (ex->parsed()) return cmd_examples(seed, inject_fault);
        if (norm->parsed()) return cmd_normalize(input);
    } catch (const NotStabilized& e) {
        std::cerr << e.what() << "\n";
        return kExitNotStabilized;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}

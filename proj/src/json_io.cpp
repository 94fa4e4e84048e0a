#include "supersplit/json_io.hpp"

namespace supersplit {

namespace {

void require(bool cond, const std::string& what) {
    if (!cond) throw std::invalid_argument("bundle json: " + what);
}

std::vector<int> int_list(const ordered_json& j, const std::string& what) {
    require(j.is_array(), what + " must be an array");
    std::vector<int> v;
    for (const auto& x : j) {
        require(x.is_number_integer(), what + " entries must be integers");
        v.push_back(x.get<int>());
    }
    return v;
}

}  // namespace

ordered_json poly_to_json(const SuperPoly& p) {
    ordered_json terms = ordered_json::array();
    for (const auto& [mono, c] : p.terms()) {
        ordered_json t;
        t["c"] = c.get_str();
        t["x"] = mono.xexp;
        ordered_json th = ordered_json::array();
        for (uint8_t j : mono.odd) th.push_back(static_cast<int>(j));
        t["theta"] = th;
        terms.push_back(std::move(t));
    }
    return terms;
}

SuperPoly poly_from_json(const ordered_json& j, int nvars, int modd) {
    require(j.is_array(), "polynomial must be an array of terms");
    SuperPoly p(nvars, modd);
    for (const auto& t : j) {
        require(t.is_object() && t.contains("c") && t.contains("x"),
                "term must carry c and x");
        Rational c;
        try {
            c = Rational(t.at("c").get<std::string>());
            c.canonicalize();
        } catch (...) {
            throw std::invalid_argument("bundle json: bad rational coefficient");
        }
        Monomial mono(nvars);
        auto xs = int_list(t.at("x"), "x");
        require(static_cast<int>(xs.size()) == nvars, "x has wrong length");
        for (int k = 0; k < nvars; ++k) mono.xexp[k] = xs[k];
        if (t.contains("theta")) {
            for (const auto& v : t.at("theta")) {
                int idx = v.get<int>();
                require(idx >= 1 && idx <= modd, "theta index out of range");
                mono.odd.push_back(static_cast<uint8_t>(idx));
            }
        }
        require(mono.valid(), "theta list must be strictly increasing");
        p.add_term(mono, c);
    }
    require(p.localize_check(), "polynomial fails normal-form validation");
    return p;
}

ordered_json module_to_json(const FreeSupermodule& m) {
    ordered_json j;
    j["even"] = m.even;
    j["odd"] = m.odd;
    return j;
}

FreeSupermodule module_from_json(const ordered_json& j) {
    require(j.is_object(), "module must be an object");
    return FreeSupermodule(int_list(j.value("even", ordered_json::array()), "even"),
                           int_list(j.value("odd", ordered_json::array()), "odd"));
}

ordered_json matrix_to_json(const SuperMatrix& f) {
    ordered_json j;
    j["source"] = module_to_json(f.source);
    j["target"] = module_to_json(f.target);
    j["parity"] = f.parity == Parity::Even ? "even" : "odd";
    ordered_json rows = ordered_json::array();
    for (int r = 0; r < f.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (int c = 0; c < f.cols(); ++c) row.push_back(poly_to_json(f.at(r, c)));
        rows.push_back(std::move(row));
    }
    j["entries"] = rows;
    return j;
}

SuperMatrix matrix_from_json(const ordered_json& j, SuperSpaceSig sp) {
    require(j.is_object() && j.contains("source") && j.contains("target") &&
                j.contains("entries"),
            "matrix must carry source, target and entries");
    SuperMatrix f(sp, module_from_json(j.at("source")),
                  module_from_json(j.at("target")),
                  j.value("parity", "even") == std::string("odd") ? Parity::Odd
                                                                  : Parity::Even);
    const auto& rows = j.at("entries");
    require(rows.is_array() && static_cast<int>(rows.size()) == f.rows(),
            "entry row count mismatch");
    for (int r = 0; r < f.rows(); ++r) {
        require(static_cast<int>(rows[r].size()) == f.cols(),
                "entry column count mismatch");
        for (int c = 0; c < f.cols(); ++c)
            f.at(r, c) = poly_from_json(rows[r][c], sp.nvars(), sp.m);
    }
    return f;
}

ordered_json bundle_to_json(const Bundle& b) {
    ordered_json j;
    const SuperSpaceSig sp = bundle_space(b);
    j["space"] = {{"n", sp.n}, {"m", sp.m}};
    if (std::holds_alternative<SplitBundle>(b)) {
        const auto& s = std::get<SplitBundle>(b);
        j["kind"] = "split";
        j["even"] = s.module.even;
        j["odd"] = s.module.odd;
        return j;
    }
    const auto& t = std::get<TransitionBundle>(b);
    j["kind"] = "transition";
    j["even"] = t.frame.even;
    j["odd"] = t.frame.odd;
    j["frame"] = module_to_json(t.frame);
    ordered_json trans;
    for (const auto& [key, g] : t.transitions)
        trans[std::to_string(key.first) + "," + std::to_string(key.second)] =
            matrix_to_json(g);
    j["transitions"] = std::move(trans);
    return j;
}

Bundle bundle_from_json(const ordered_json& j) {
    require(j.is_object() && j.contains("space") && j.contains("kind"),
            "bundle must carry space and kind");
    const auto& spj = j.at("space");
    require(spj.contains("n") && spj.contains("m"), "space must carry n and m");
    SuperSpaceSig sp;
    try {
        sp = SuperSpaceSig(spj.at("n").get<int>(), spj.at("m").get<int>());
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("bundle json: ") + e.what());
    }
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "split") {
        return SplitBundle{
            sp, FreeSupermodule(int_list(j.value("even", ordered_json::array()), "even"),
                                int_list(j.value("odd", ordered_json::array()), "odd"))};
    }
    require(kind == "transition", "kind must be split or transition");
    TransitionBundle t;
    t.space = sp;
    require(j.contains("frame"), "transition bundle must carry a frame");
    t.frame = module_from_json(j.at("frame"));
    require(j.contains("transitions"), "transition bundle must carry transitions");
    for (const auto& [key, mj] : j.at("transitions").items()) {
        auto comma = key.find(',');
        require(comma != std::string::npos, "transition key must be 'i,j'");
        int i = std::stoi(key.substr(0, comma));
        int jj = std::stoi(key.substr(comma + 1));
        require(0 <= i && i < jj && jj <= sp.n, "transition key out of range");
        t.transitions.emplace(std::make_pair(i, jj), matrix_from_json(mj, sp));
    }
    CocycleReport rep = cocycle_check(t);
    if (!rep.ok)
        throw std::invalid_argument("bundle json: cocycle check failed (" + rep.reason +
                                    ")");
    return t;
}

ordered_json rao_to_json(const RaoTable& table) {
    ordered_json j;
    j["i"] = table.i;
    ordered_json rows = ordered_json::array();
    for (int t = table.t_min; t <= table.t_max; ++t) {
        const SuperDim& d = table.at(t);
        rows.push_back(ordered_json{{"t", t}, {"even", d.even}, {"odd", d.odd}});
    }
    j["rows"] = std::move(rows);
    return j;
}

ordered_json certificate_to_json(const SplitCertificate& cert) {
    ordered_json j;
    j["verdict"] = verdict_name(cert.verdict);
    j["even"] = cert.even;
    j["odd"] = cert.odd;
    if (cert.verdict == Verdict::Splits && !cert.iso.empty()) {
        ordered_json iso;
        for (const auto& [chart, mat] : cert.iso)
            iso[std::to_string(chart)] = matrix_to_json(mat);
        j["iso"] = std::move(iso);
    } else {
        j["iso"] = nullptr;
    }
    ordered_json w;
    if (cert.rao_witness) {
        w["kind"] = "rao";
        w["i"] = cert.rao_witness->i;
        w["t"] = cert.rao_witness->t;
        w["even"] = cert.rao_witness->dim.even;
        w["odd"] = cert.rao_witness->dim.odd;
        w["reduced"] = cert.rao_witness->reduced;
    } else if (cert.end_dims_mismatch) {
        w["kind"] = "end_dims";
        w["computed"] = {{"even", cert.end_dims_mismatch->first.even},
                         {"odd", cert.end_dims_mismatch->first.odd}};
        w["split_model"] = {{"even", cert.end_dims_mismatch->second.even},
                            {"odd", cert.end_dims_mismatch->second.odd}};
    } else if (cert.obstruction) {
        w["kind"] = "obstruction";
    }
    if (cert.obstruction) {
        w["hom_dims"] = {{"even", cert.obstruction->hom_dims.even},
                         {"odd", cert.obstruction->hom_dims.odd}};
        w["reduced_hom_dims"] = {{"even", cert.obstruction->reduced_hom_dims.even},
                                 {"odd", cert.obstruction->reduced_hom_dims.odd}};
        w["attempts"] = cert.obstruction->attempts;
        w["note"] = cert.obstruction->note;
    }
    j["witness"] = w.empty() ? ordered_json(nullptr) : w;
    if (!cert.detail.empty()) j["detail"] = cert.detail;
    return j;
}

ordered_json not_stabilized_to_json(const NotStabilized& err) {
    return ordered_json{
        {"error", "NOT_STABILIZED"}, {"t", err.t}, {"i", err.i}, {"window", err.window}};
}

std::string canonical_dump(const ordered_json& j) { return j.dump(); }

}  // namespace supersplit

#include "dehnfill/report_json.hpp"

#include <fstream>
#include <sstream>

namespace dehnfill {

Json poly_to_json(const MultiPoly& p) {
    Json terms = Json::array();
    const auto& m = p.terms();
    for (auto it = m.rbegin(); it != m.rend(); ++it) {
        Json term = Json::array();
        term.push_back(it->second.to_string());
        for (int i = 0; i < kNumVars; ++i) term.push_back(it->first[static_cast<size_t>(i)]);
        terms.push_back(std::move(term));
    }
    return Json{{"text", p.to_string()}, {"terms", std::move(terms)}};
}

Json rational_to_json(const Rational& r) { return Json(r.to_string()); }

namespace {

Json slope_to_json(const Slope& s) { return Json::array({s.p, s.q}); }

Slope slope_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw SpecParseError("slope must be a [p, q] pair");
    return Slope{j[0].get<long>(), j[1].get<long>()};
}

Json slopes_to_json(const std::vector<Slope>& v) {
    Json out = Json::array();
    for (const auto& s : v) out.push_back(slope_to_json(s));
    return out;
}

Rational parse_rational_field(const Json& j, const char* key) {
    try {
        if (j.at(key).is_number_integer()) return Rational(j.at(key).get<long>());
        return Rational::parse(j.at(key).get<std::string>());
    } catch (const std::exception& e) {
        throw SpecParseError(std::string(key) + ": " + e.what());
    }
}

}  // namespace

Json link_spec_to_json(const LinkSpec& spec) {
    Json j;
    j["name"] = spec.name;
    j["linking_number"] = spec.linking_number;
    j["volume"] = spec.volume.to_string();
    j["cusp_shape"] = {
        {"re_num", spec.cusp_shape.re.num().to_string()},
        {"re_den", spec.cusp_shape.re.den().to_string()},
        {"im_sq_num", spec.cusp_shape.im_sq.num().to_string()},
        {"im_sq_den", spec.cusp_shape.im_sq.den().to_string()},
    };
    j["length_bound"] = spec.length_bound.to_string();
    j["gcd_allowed"] = spec.gcd_allowed;
    if (!spec.expected_manifold.empty()) j["expected_manifold_slopes"] = slopes_to_json(spec.expected_manifold);
    if (!spec.expected_orbifold.empty()) j["expected_orbifold_slopes"] = slopes_to_json(spec.expected_orbifold);
    if (!spec.provenance.empty()) j["provenance"] = spec.provenance;
    return j;
}

LinkSpec link_spec_from_json(const Json& j) {
    LinkSpec spec;
    try {
        spec.name = j.at("name").get<std::string>();
        spec.linking_number = j.at("linking_number").get<long>();
        if (j.contains("volume")) spec.volume = parse_rational_field(j, "volume");
        const Json& cs = j.at("cusp_shape");
        spec.cusp_shape.re = Rational(BigInt(cs.at("re_num").get<std::string>()),
                                      BigInt(cs.at("re_den").get<std::string>()));
        spec.cusp_shape.im_sq = Rational(BigInt(cs.at("im_sq_num").get<std::string>()),
                                         BigInt(cs.at("im_sq_den").get<std::string>()));
        spec.length_bound = parse_rational_field(j, "length_bound");
        spec.gcd_allowed = j.at("gcd_allowed").get<std::vector<long>>();
        if (j.contains("expected_manifold_slopes"))
            for (const auto& s : j.at("expected_manifold_slopes")) spec.expected_manifold.push_back(slope_from_json(s));
        if (j.contains("expected_orbifold_slopes"))
            for (const auto& s : j.at("expected_orbifold_slopes")) spec.expected_orbifold.push_back(slope_from_json(s));
        if (j.contains("provenance"))
            spec.provenance = j.at("provenance").get<std::map<std::string, std::string>>();
    } catch (const SpecParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw SpecParseError(e.what());
    }
    return spec;
}

LinkSpec load_link_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecParseError("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw SpecParseError(e.what());
    }
    return link_spec_from_json(j);
}

namespace {

std::string nl_decimal(const NormalizedLengthSq& nl, int digits) {
    // num / sqrt(im_sq) to the requested digits
    BigFloat num(nl.num);
    BigFloat root = BigFloat(nl.im_sq).sqrt();
    return (num / root).to_decimal(digits);
}

Json entry_to_json(const ScreenEntry& e) {
    Json j;
    j["slope"] = slope_to_json(e.slope);
    j["d"] = e.d;
    j["nl_sq"] = {{"num", e.nl.num.to_string()},
                  {"im_sq", e.nl.im_sq.to_string()},
                  {"approx", nl_decimal(e.nl, 12)}};
    j["verdict"] = e.pass ? "pass" : "fail";
    Json reasons = Json::array();
    for (auto r : e.reasons) reasons.push_back(fail_reason_name(r));
    j["reasons"] = std::move(reasons);
    if (e.covering_components) j["covering_link_components"] = e.covering_components;
    if (e.pass) {
        j["in_expected_list"] = e.in_expected_list;
        if (e.discrepancy) j["flag"] = "paper-list discrepancy";
    }
    return j;
}

}  // namespace

Json screen_report_to_json(const ScreenReport& rep) {
    Json j;
    j["spec"] = link_spec_to_json(rep.spec);
    j["search_box"] = {{"p_max", rep.p_cap}, {"q_max", rep.q_cap}};
    Json entries = Json::array();
    for (const auto& e : rep.entries) entries.push_back(entry_to_json(e));
    j["entries"] = std::move(entries);
    j["manifold_pass"] = slopes_to_json(rep.manifold_pass);
    j["orbifold_pass"] = slopes_to_json(rep.orbifold_pass);
    j["manifold_extras"] = slopes_to_json(rep.manifold_extras);
    j["orbifold_extras"] = slopes_to_json(rep.orbifold_extras);
    return j;
}

std::string screen_report_to_csv(const ScreenReport& rep) {
    std::ostringstream out;
    out << "p,q,d,nl_sq,verdict,reasons\n";
    for (const auto& e : rep.entries) {
        out << e.slope.p << "," << e.slope.q << "," << e.d << "," << nl_decimal(e.nl, 12) << ","
            << (e.pass ? "pass" : "fail") << ",";
        for (size_t i = 0; i < e.reasons.size(); ++i) {
            if (i) out << ";";
            out << fail_reason_name(e.reasons[i]);
        }
        out << "\n";
    }
    return out.str();
}

Json field_report_to_json(const FieldReport& rep, int approx_digits) {
    Json j;
    j["poly"] = poly_to_json(rep.poly);
    j["variable"] = var_name(rep.var);
    j["degree"] = rep.degree;
    Json factors = Json::array();
    for (const auto& f : rep.factors) {
        Json fj;
        fj["factor"] = f.factor.to_string();
        fj["multiplicity"] = f.multiplicity;
        fj["degree"] = f.degree;
        fj["real_roots"] = f.real_roots;
        fj["verdict"] = verdict_name(f.verdict);
        if (f.verdict == Verdict::QuadImag) fj["field_d"] = f.disc_squarefree.to_string();
        if (f.is_residual) fj["residual_no_factor_up_to_degree"] = rep.residual_checked_bound;
        factors.push_back(std::move(fj));
    }
    j["factors"] = std::move(factors);
    j["real_roots"] = rep.real_root_count;
    j["verdict"] = verdict_name(rep.verdict);
    if (!rep.quad_imag_fields.empty()) {
        Json ds = Json::array();
        for (const auto& d : rep.quad_imag_fields) ds.push_back(d.to_string());
        j["quad_imag_fields"] = std::move(ds);
    }
    j["filtered"] = rep.filtered.to_string();
    j["filtered_empty"] = rep.filtered_empty;
    if (!rep.degenerate_dropped.is_constant())
        j["degenerate_dropped"] = rep.degenerate_dropped.to_string();
    if (approx_digits > 0 && rep.degree > 0 && !rep.poly.is_constant()) {
        Json roots = Json::array();
        BigFloat tiny(Rational(BigInt(1), BigInt(10).pow(static_cast<unsigned long>(approx_digits))));
        for (const auto& r : approx_roots(rep.poly, rep.var, approx_digits)) {
            std::string rad = r.rad < tiny ? "<1e-" + std::to_string(approx_digits)
                                           : r.rad.to_decimal(approx_digits);
            roots.push_back(Json{{"re", r.re.to_decimal(approx_digits)},
                                 {"im", r.im.to_decimal(approx_digits)},
                                 {"rad", rad},
                                 {"nonreal", r.certified_nonreal}});
        }
        j["approx_roots"] = std::move(roots);
    }
    return j;
}

Json axis_analysis_to_json(const AxisAnalysis& a) {
    Json j;
    j["sigma2_poly"] = a.sigma2_poly.to_string();
    j["other_branch"] = a.other_branch.to_string();
    j["classification"] = verdict_name(a.classification);
    if (!a.quad_imag_fields.empty()) {
        Json ds = Json::array();
        for (const auto& d : a.quad_imag_fields) ds.push_back(d.to_string());
        j["quad_imag_fields"] = std::move(ds);
    }
    j["report"] = field_report_to_json(a.report);
    return j;
}

Json sweep_to_json(const SweepResult& s) {
    Json j;
    Json hits = Json::array();
    for (const auto& e : s.quad_imag_hits) {
        Json h;
        h["slope"] = Json::array({e.p, e.q});
        Json ds = Json::array();
        for (const auto& d : e.quad_imag_fields) ds.push_back(d.to_string());
        h["fields"] = std::move(ds);
        hits.push_back(std::move(h));
    }
    j["quad_imag_hits"] = std::move(hits);
    Json entries = Json::array();
    for (const auto& e : s.entries) {
        Json ej;
        ej["slope"] = Json::array({e.p, e.q});
        ej["route"] = route_name(e.route);
        ej["classification"] = verdict_name(e.classification);
        ej["non_hyperbolic_certificate"] = e.non_hyperbolic_certificate;
        ej["candidate_poly"] = e.report.filtered.to_string();
        entries.push_back(std::move(ej));
    }
    j["entries"] = std::move(entries);
    return j;
}

Json count_bound_to_json(const CountBound& c) {
    return Json{{"primitive", c.primitive},
                {"gcd2", c.gcd2},
                {"gcd4", c.gcd4},
                {"total", c.total},
                {"verified_inequalities", c.verified}};
}

Json constraints_to_json() {
    Json j;
    Json rows = Json::array();
    for (const auto& r : rigid_constraints())
        rows.push_back(Json{{"group", isotropy_name(r.group)}, {"torsion", r.torsion}, {"degree", r.degree}});
    j["rigid_cover_table"] = std::move(rows);
    VolumeFloor vf = volume_floor();
    Json entries = Json::array();
    for (const auto& e : vf.entries) {
        entries.push_back(Json{{"cusp", cusp_type_name(e.type)},
                               {"min_degree", e.min_degree},
                               {"orb_vol_lower_v0", e.orb_vol_lower.to_string()},
                               {"strict", e.strict},
                               {"product_v0", e.product.to_string()}});
    }
    j["volume_floor"] = {{"entries", std::move(entries)},
                         {"minimum_v0", vf.minimum.to_string()},
                         {"minimum_approx", vf.minimum_approx}};
    Json attained = Json::array();
    for (auto t : vf.attained_by) attained.push_back(cusp_type_name(t));
    j["volume_floor"]["attained_by"] = std::move(attained);
    return j;
}

Json bundle_to_json(const SlopePolyBundle& b) {
    Json j;
    j["slope"] = Json::array({b.p, b.q});
    j["g"] = b.g.to_string();
    j["h"] = b.h.to_string();
    j["hprime"] = b.hprime.to_string();
    j["T_sigma1"] = b.T_sigma1.to_string();
    j["T_sigma2"] = b.T_sigma2.to_string();
    return j;
}

}  // namespace dehnfill

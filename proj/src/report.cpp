#include "fatlas/report.hpp"

#include <charconv>
#include <cmath>

namespace fatlas {

using nlohmann::ordered_json;

namespace {

std::string csv_num(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    (void)ec;
    return std::string(buf, ptr);
}

ordered_json jet1_json(const Jet1& j, int max_terms = 6) {
    ordered_json arr = ordered_json::array();
    for (int k = 0; k <= std::min(j.order(), max_terms); ++k) arr.push_back(j.coeff(k));
    return arr;
}

const char* ridge_label(const RidgeResult& r) {
    switch (r.status) {
        case RidgeResult::Status::not_ridge: return "not-ridge";
        case RidgeResult::Status::ridge: return "ridge";
        case RidgeResult::Status::exceeded: return "exceeded";
    }
    return "?";
}

} // namespace

ordered_json tolerances_json(const Tolerances& tol, int order) {
    return ordered_json{{"order", order},
                        {"classify", tol.classify},
                        {"divide", tol.divide},
                        {"frame", tol.frame},
                        {"ridge", tol.ridge},
                        {"trace", tol.trace},
                        {"identifier", tol.identifier},
                        {"closed_form", tol.closed_form},
                        {"branch_delta", tol.branch_delta},
                        {"max_ridge_order", tol.max_ridge_order}};
}

Report run_report(const SurfaceDef& def, Point2 p, const ReportOptions& opts) {
    Report rep;
    int order = opts.order > 0 ? opts.order : default_order();
    const Tolerances& tol = opts.tol;
    ordered_json& doc = rep.data;
    doc["schema"] = kReportSchema;
    doc["tool_version"] = kToolVersion;
    doc["surface"] = {{"name", def.name},
                      {"kind_declared",
                       def.declared_kind == SurfaceKind::first_kind_adapted    ? "first"
                       : def.declared_kind == SurfaceKind::second_kind_adapted ? "second"
                       : def.declared_kind == SurfaceKind::regular             ? "regular"
                                                                               : "unknown"}};
    doc["point"] = {p.u, p.v};
    doc["tolerances"] = tolerances_json(tol, order);

    FrameData fr;
    try {
        fr = (p.v == 0.0) ? build_frame(def, p, order, tol) : extend_frame_off_axis(def, p, order, tol);
    } catch (const Error& e) {
        doc["frame"] = {{"error", e.what()}};
        rep.fatal = true;
        return rep;
    }
    doc["frame"] = {{"kind", to_string(fr.kind)},
                    {"is_front", fr.is_front},
                    {"lambda", fr.lambda.value()},
                    {"rank_sigma_min", fr.rank_sigma_min},
                    {"nu", {fr.nu[0].value(), fr.nu[1].value(), fr.nu[2].value()}}};

    bool singular_frame = fr.kind == Kind::first_kind || fr.kind == Kind::second_kind;
    PlaneGermClass gauss_tag = PlaneGermClass::regular;
    bool have_gauss = false;

    try {
        ClassifyResult cls = classify_front_point(fr, tol);
        doc["classification"] = {{"class", to_string(cls.cls)},
                                 {"eta_lambda", cls.eta_lambda},
                                 {"eta_eta_lambda", cls.eta_eta_lambda},
                                 {"dlambda", {cls.dlambda_u, cls.dlambda_v}},
                                 {"is_front", cls.is_front}};
    } catch (const Error& e) {
        doc["classification"] = {{"error", e.what()}};
    }

    Fundamentals fund;
    bool have_fund = false;
    if (fr.style != Kind::regular) {
        try {
            fund = fundamentals(fr, tol);
            have_fund = true;
            doc["fundamentals"] = {{"variant", to_string(fund.kind)},
                                   {"E", fund.E.value()},
                                   {"F", fund.F.value()},
                                   {"G", fund.G.value()},
                                   {"L", fund.L.value()},
                                   {"M", fund.M.value()},
                                   {"N", fund.N.value()}};
        } catch (const Error& e) {
            doc["fundamentals"] = {{"error", e.what()}};
        }
    }

    InvariantSet inv;
    bool have_inv = false;
    if (have_fund && singular_frame) {
        try {
            inv = edge_invariants(fr, fund, tol);
            have_inv = true;
            ordered_json j;
            if (inv.kind == Kind::first_kind) {
                j["kappa_s"] = inv.kappa_s;
                j["kappa_nu"] = jet1_json(inv.kappa_nu);
                j["kappa_c"] = inv.kappa_c;
                j["kappa_t"] = jet1_json(inv.kappa_t);
                j["kappa_i"] = jet1_json(inv.kappa_i);
            } else {
                j["mu_c"] = *inv.mu_c;
            }
            doc["invariants"] = j;
        } catch (const Error& e) {
            doc["invariants"] = {{"error", e.what()}};
        }
        if (fr.kind == Kind::first_kind) {
            try {
                ModifiedChristoffel mc = christoffel_decompose(fr, fund);
                doc["christoffel"] = {{"max_residual_value", mc.max_residual_value},
                                      {"max_residual_coeff", mc.max_residual_coeff}};
            } catch (const Error& e) {
                doc["christoffel"] = {{"error", e.what()}};
            }
        }
    }

    PrincipalData pd;
    bool have_pd = false;
    if (have_fund && fr.is_front) {
        try {
            pd = principal_data(fr, fund, tol);
            have_pd = true;
            doc["principal"] = {{"kappa", pd.kappa.value()},
                                {"kappa_hat", pd.kappa_hat.value()},
                                {"branch_sign", pd.branch_sign},
                                {"V", {pd.V1.value(), pd.V2.value()}}};
        } catch (const Error& e) {
            doc["principal"] = {{"error", e.what()}};
        }
    }

    if (have_pd) {
        try {
            GaussClassifyResult gc = gauss_classify(fr, fund, pd, tol);
            gauss_tag = gc.cls;
            have_gauss = true;
            ordered_json j{{"class", to_string(gc.cls)},
                           {"dkappa", {gc.dkappa_u, gc.dkappa_v}},
                           {"ridge", ridge_label(gc.ridge)},
                           {"ridge_order", gc.ridge.order},
                           {"ridge_derivatives", gc.ridge.derivatives},
                           {"hess_det", gc.hess_det},
                           {"second_null_derivative", gc.second_null_derivative},
                           {"whitney_class", to_string(gc.whitney.cls)},
                           {"whitney_witnesses",
                            {{"eta_L", gc.whitney.w.eta1},
                             {"eta2_L", gc.whitney.w.eta2},
                             {"eta3_L", gc.whitney.w.eta3},
                             {"dL", {gc.whitney.w.dL_u, gc.whitney.w.dL_v}},
                             {"hess_det", gc.whitney.w.hess_det}}}};
            doc["gauss"] = j;
        } catch (const Error& e) {
            doc["gauss"] = {{"error", e.what()}};
        }
    } else if (fr.kind == Kind::regular && !have_fund) {
        // declared-regular surfaces: the identifier det(nu_u, nu_v, nu)
        Jet2 Lam = det3(du(fr.nu), dv(fr.nu), fr.nu);
        if (Lam.max_abs_coeff() <= tol.classify)
            doc["gauss"] = {{"class", "not-applicable"},
                            {"note", "identifier vanishes identically (flat Gauss map)"}};
        else
            doc["gauss"] = {{"Lambda", Lam.value()},
                            {"class", std::abs(Lam.value()) > tol.classify * Lam.max_abs_coeff()
                                          ? "Regular"
                                          : "Singular-unclassified"}};
    }

    if (have_inv && inv.kind == Kind::first_kind) {
        try {
            ContactReport cr = contact_order(fr, fund, inv, opts.maxk, tol);
            doc["contact"] = {{"parabolic_regular", cr.parabolic_regular},
                              {"order_label", std::to_string(cr.order_label) + "-point"},
                              {"first_nonzero_derivative", cr.first_nonzero_derivative},
                              {"precondition_4kt2", cr.precondition_4kt2},
                              {"derivatives", cr.derivatives}};
        } catch (const Error& e) {
            doc["contact"] = {{"error", e.what()}};
        }
        try {
            doc["rational_K"] = to_string(rational_K_status(inv, tol));
        } catch (const Error& e) {
            doc["rational_K"] = nullptr;
            doc["rational_K_error"] = e.what();
        }
        if (opts.run_special_rules && have_gauss) {
            ordered_json rules;
            const std::pair<SpecialRule, const char*> all[] = {
                {SpecialRule::godron, "godron"},
                {SpecialRule::curvature_line, "curvature-line"},
                {SpecialRule::bounded_K, "bounded-K"}};
            for (auto [rule, name] : all) {
                try {
                    SpecialRuleResult sr =
                        special_rule_classify(fr, fund, inv, pd, rule, gauss_tag, tol);
                    rules[name] = {{"class", to_string(sr.cls)}, {"detail", sr.detail}};
                } catch (const Error& e) {
                    rules[name] = {{"error", e.what()}};
                }
            }
            doc["special_rules"] = rules;
        }
    }

    if (fr.kind == Kind::second_kind && have_fund && have_pd) {
        try {
            HeightContext hc = extended_height(fr, tol);
            HeightReport hr = d4_classify(hc, fr, fund, pd, gauss_tag, tol);
            ordered_json j{{"direction", {hc.direction[0], hc.direction[1], hc.direction[2]}},
                           {"offset", hc.offset},
                           {"strongly_adapted", hc.strongly_adapted},
                           {"corank", hr.corank},
                           {"hessian", {hr.hessian[0][0], hr.hessian[0][1], hr.hessian[1][1]}},
                           {"delta_phi", hr.delta_phi},
                           {"d4", to_string(hr.d4_tag)},
                           {"fold_link", hr.fold_link},
                           {"v_kappa", hr.v_kappa},
                           {"kappa_via_hessian", hr.kappa_via_hessian},
                           {"kappa_via_principal", hr.kappa_via_principal}};
            if (hr.delta_phi_closed_form) j["delta_phi_closed_form"] = *hr.delta_phi_closed_form;
            doc["height"] = j;
        } catch (const Error& e) {
            doc["height"] = {{"error", e.what()}};
        }
    }
    return rep;
}

std::string polyline_csv(const Polyline& line) {
    std::string out = "u,v,residual\n";
    for (std::size_t i = 0; i < line.points.size(); ++i) {
        out += csv_num(line.points[i].u);
        out += ',';
        out += csv_num(line.points[i].v);
        out += ',';
        out += csv_num(line.residuals[i]);
        out += '\n';
    }
    return out;
}

} // namespace fatlas

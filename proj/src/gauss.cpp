#include "fatlas/gauss.hpp"

#include <cmath>

namespace fatlas {

std::string to_string(PlaneGermClass c) {
    switch (c) {
        case PlaneGermClass::fold: return "Fold";
        case PlaneGermClass::cusp: return "Cusp";
        case PlaneGermClass::swallowtail: return "Swallowtail";
        case PlaneGermClass::lips: return "Lips";
        case PlaneGermClass::beaks: return "Beaks";
        case PlaneGermClass::degenerate: return "Degenerate";
        case PlaneGermClass::regular: return "Regular";
    }
    return "?";
}

std::string to_string(RationalKStatus s) {
    switch (s) {
        case RationalKStatus::not_rationally_bounded: return "not-rationally-bounded";
        case RationalKStatus::rationally_bounded: return "rationally-bounded";
        case RationalKStatus::rationally_continuous: return "rationally-continuous";
        case RationalKStatus::bounded: return "bounded";
    }
    return "?";
}

namespace {

bool nonzero(double x, double scale, double tol) { return std::abs(x) > tol * std::max(scale, 1e-300); }

double hess_det_at(const Jet2& g) {
    double guu = g.partial(2, 0), gvv = g.partial(0, 2), guv = g.partial(1, 1);
    return guu * gvv - guv * guv;
}

double hess_scale(const Jet2& g) {
    double m = std::max({std::abs(g.partial(2, 0)), std::abs(g.partial(0, 2)),
                         std::abs(g.partial(1, 1)), 1e-300});
    return m * m;
}

} // namespace

GaussIdentifier gauss_identifier(const FrameData& fr, const PrincipalData& pd,
                                 const Tolerances& tol) {
    if (!fr.is_front) throw PreconditionNotMet("Gauss identifier needs a front point");
    GaussIdentifier gi;
    gi.Lambda = det3(du(fr.nu), dv(fr.nu), fr.nu);
    gi.LambdaTilde = pd.kappa;
    gi.V1 = pd.V1;
    gi.V2 = pd.V2;

    Jet2 prod = cmul(pd.kappa, pd.kappa_hat);
    Jet2 res = csub(gi.Lambda, prod);
    double scale = std::max({gi.Lambda.max_abs_coeff(), prod.max_abs_coeff(), 1e-300});
    gi.consistency_residual = res.max_abs_coeff() / scale;
    if (gi.consistency_residual > tol.identifier)
        throw InconsistentIdentifier(
            "det(nu_u, nu_v, nu) and kappa * kappa_hat disagree (relative residual " +
            std::to_string(gi.consistency_residual) + "); branch selection is suspect");
    return gi;
}

PlaneClassifyResult plane_map_classify(const Jet2& identifier, const Jet2& eta1, const Jet2& eta2,
                                       const Tolerances& tol) {
    const Jet2& L = identifier;
    double scale = L.max_abs_coeff();
    if (nonzero(L.value(), scale, tol.classify))
        throw NotSingular("identifier does not vanish at the point");

    auto eta = [&](const Jet2& g) { return cadd(cmul(eta1, g.du()), cmul(eta2, g.dv())); };
    Jet2 L1 = eta(L);
    Jet2 L2 = eta(L1);
    Jet2 L3 = eta(L2);

    PlaneClassifyResult r;
    r.w.eta1 = L1.value();
    r.w.eta2 = L2.value();
    r.w.eta3 = L3.value();
    r.w.dL_u = L.partial(1, 0);
    r.w.dL_v = L.partial(0, 1);
    r.w.hess_det = hess_det_at(L);

    bool d_nonzero = nonzero(std::max(std::abs(r.w.dL_u), std::abs(r.w.dL_v)), scale, tol.classify);
    bool e1 = nonzero(r.w.eta1, L1.max_abs_coeff(), tol.classify);
    bool e2 = nonzero(r.w.eta2, L2.max_abs_coeff(), tol.classify);
    bool e3 = nonzero(r.w.eta3, L3.max_abs_coeff(), tol.classify);

    if (e1) {
        r.cls = PlaneGermClass::fold;
    } else if (d_nonzero) {
        if (e2) r.cls = PlaneGermClass::cusp;
        else if (e3) r.cls = PlaneGermClass::swallowtail;
        else r.cls = PlaneGermClass::degenerate;
    } else {
        double hs = hess_scale(L);
        if (r.w.hess_det > tol.classify * hs) r.cls = PlaneGermClass::lips;
        else if (r.w.hess_det < -tol.classify * hs && e2) r.cls = PlaneGermClass::beaks;
        else r.cls = PlaneGermClass::degenerate;
    }
    return r;
}

GaussClassifyResult gauss_classify(const FrameData& fr, const Fundamentals& fund,
                                   const PrincipalData& pd, const Tolerances& tol) {
    GaussClassifyResult res;
    double kscale = std::max(pd.kappa.max_abs_coeff(), 1e-300);
    if (nonzero(pd.kappa.value(), kscale, tol.classify)) {
        res.cls = PlaneGermClass::regular;
        return res;
    }

    res.dkappa_u = pd.kappa.partial(1, 0);
    res.dkappa_v = pd.kappa.partial(0, 1);
    bool d_nonzero =
        nonzero(std::max(std::abs(res.dkappa_u), std::abs(res.dkappa_v)), kscale, tol.classify);

    if (d_nonzero) {
        res.ridge = ridge_order(fr, fund, pd, 2, tol);
        switch (res.ridge.status) {
            case RidgeResult::Status::not_ridge: res.cls = PlaneGermClass::fold; break;
            case RidgeResult::Status::ridge:
                res.cls = res.ridge.order == 1 ? PlaneGermClass::cusp
                                               : PlaneGermClass::swallowtail;
                break;
            case RidgeResult::Status::exceeded: res.cls = PlaneGermClass::degenerate; break;
        }
        if (!res.ridge.derivatives.empty() && res.ridge.derivatives.size() >= 2)
            res.second_null_derivative = res.ridge.derivatives[1];
    } else {
        res.hess_det = hess_det_at(pd.kappa);
        // V kappa(p) vanishes identically here; the beaks witness is the
        // second derivative along the null direction, matching eta eta L != 0.
        Jet2 vk = cadd(cmul(pd.V1, pd.kappa.du()), cmul(pd.V2, pd.kappa.dv()));
        Jet2 vvk = cadd(cmul(pd.V1, vk.du()), cmul(pd.V2, vk.dv()));
        res.second_null_derivative = vvk.value();
        double hs = hess_scale(pd.kappa);
        if (res.hess_det > tol.classify * hs) {
            res.cls = PlaneGermClass::lips;
        } else if (res.hess_det < -tol.classify * hs &&
                   nonzero(res.second_null_derivative, vvk.max_abs_coeff(), tol.classify)) {
            res.cls = PlaneGermClass::beaks;
        } else {
            res.cls = PlaneGermClass::degenerate;
        }
    }

    GaussIdentifier gi = gauss_identifier(fr, pd, tol);
    res.whitney = plane_map_classify(gi.Lambda, pd.V1, pd.V2, tol);
    if (res.whitney.cls != res.cls)
        throw ClassifierDisagreement("ridge route says " + to_string(res.cls) +
                                     " but Whitney criteria on det(nu_u,nu_v,nu) say " +
                                     to_string(res.whitney.cls));
    return res;
}

ContactReport contact_order(const FrameData& fr, const Fundamentals& fund, const InvariantSet& inv,
                            int maxk, const Tolerances& tol) {
    (void)fr;
    (void)fund;
    if (inv.kind != Kind::first_kind)
        throw KindMismatch("contact order is computed at first-kind singular points");
    const Jet1& kn = inv.kappa_nu;
    double scale = std::max(kn.max_abs_coeff(), 1e-300);
    if (std::abs(kn.value()) > tol.classify * scale)
        throw NotParabolic("kappa_nu(p) != 0: the parabolic curve does not pass through p");

    ContactReport rep;
    double kt = inv.kappa_t.value();
    double kc = inv.kappa_c;
    double ks = inv.kappa_s;
    rep.precondition_4kt2 = 4.0 * kt * kt + ks * kc * kc;
    double reg_scale = 4.0 * kt * kt + std::abs(ks) * kc * kc;
    bool transversal = kn.order() >= 1 && std::abs(kn.coeff(1)) > tol.classify * scale;
    rep.parabolic_regular =
        transversal || std::abs(rep.precondition_4kt2) > tol.classify * std::max(reg_scale, 1e-300);

    rep.derivatives.push_back(kn.value());
    for (int k = 1; k <= maxk + 1; ++k) {
        if (k > kn.order())
            throw ContactExceeded("kappa_nu jet order exhausted at derivative " + std::to_string(k));
        rep.derivatives.push_back(kn.derivative(k));
        if (std::abs(kn.coeff(k)) > tol.classify * scale) {
            rep.first_nonzero_derivative = k;
            rep.order_label = k;
            return rep;
        }
    }
    throw ContactExceeded("kappa_nu vanishes through derivative " + std::to_string(maxk + 1) +
                          "; contact order exceeds maxk");
}

RationalKStatus rational_K_status(const InvariantSet& inv, const Tolerances& tol) {
    if (inv.kind != Kind::first_kind)
        throw KindMismatch("rational boundedness is decided at first-kind singular points");
    const Jet1& kn = inv.kappa_nu;
    // an external magnitude floor so that "identically zero" is decidable
    double floor_scale = std::max(1.0, std::abs(inv.kappa_c));
    if (kn.max_abs_coeff() <= tol.classify * floor_scale) return RationalKStatus::bounded;
    double scale = kn.max_abs_coeff();
    if (std::abs(kn.value()) > tol.classify * scale) return RationalKStatus::not_rationally_bounded;
    if (kn.order() >= 1 && std::abs(kn.coeff(1)) > tol.classify * scale)
        return RationalKStatus::rationally_bounded;
    return RationalKStatus::rationally_continuous;
}

SpecialRuleResult special_rule_classify(const FrameData& fr, const Fundamentals& fund,
                                        const InvariantSet& inv, const PrincipalData& pd,
                                        SpecialRule rule, PlaneGermClass gauss_tag,
                                        const Tolerances& tol) {
    (void)fr;
    (void)fund;
    (void)pd;
    if (inv.kind != Kind::first_kind)
        throw KindMismatch("special rules apply to first-kind singular points");

    SpecialRuleResult r;
    double ks = inv.kappa_s;
    double kc = inv.kappa_c;
    double kt0 = inv.kappa_t.value();
    double kt_scale = std::max(inv.kappa_t.max_abs_coeff(), 1e-300);
    double kn_scale = std::max(inv.kappa_nu.max_abs_coeff(), 1e-300);
    double ks_scale = std::max(std::abs(inv.kappa_s_axis.max_abs_coeff()), 1e-300);
    auto kn_deriv_zero = [&](int k) {
        return std::abs(inv.kappa_nu.coeff(k)) <= tol.classify * kn_scale;
    };

    switch (rule) {
        case SpecialRule::godron: {
            RationalKStatus st = rational_K_status(inv, tol);
            if (st != RationalKStatus::rationally_continuous && st != RationalKStatus::bounded)
                throw PreconditionNotMet("godron rule needs a rationally continuous Gaussian "
                                         "curvature (kappa_nu = kappa_nu' = 0 at p)");
            double ki1 = inv.kappa_i.derivative(1);
            double ki_scale = std::max(inv.kappa_i.max_abs_coeff(), 1e-300);
            bool kt_zero = std::abs(kt0) <= tol.classify * kt_scale;
            bool ks_ki = std::abs(ks) > tol.classify * ks_scale &&
                         std::abs(ki1) > tol.classify * ki_scale;
            r.cls = (kt_zero && ks_ki) ? PlaneGermClass::cusp : PlaneGermClass::degenerate;
            r.detail = "kappa_t(p) = " + std::to_string(kt0) + ", kappa_s(p) = " +
                       std::to_string(ks) + ", kappa_i'(p) = " + std::to_string(ki1);
            break;
        }
        case SpecialRule::curvature_line: {
            if (inv.kappa_t.max_abs_coeff() > 1e-10 * std::max(1.0, std::abs(kc)))
                throw PreconditionNotMet(
                    "curvature-line rule needs kappa_t = 0 along the axis (singular locus a "
                    "line of curvature); max |kappa_t| coefficient is " +
                    std::to_string(inv.kappa_t.max_abs_coeff()));
            if (std::abs(inv.kappa_nu.value()) > tol.classify * kn_scale)
                throw NotParabolic("kappa_nu(p) != 0");
            bool ks_nonzero = std::abs(ks) > tol.classify * ks_scale;
            if (!kn_deriv_zero(1)) r.cls = PlaneGermClass::fold;
            else if (!kn_deriv_zero(2) && ks_nonzero) r.cls = PlaneGermClass::cusp;
            else if (kn_deriv_zero(2) && inv.kappa_nu.order() >= 3 && !kn_deriv_zero(3) && ks_nonzero)
                r.cls = PlaneGermClass::swallowtail;
            else r.cls = PlaneGermClass::degenerate;
            r.detail = "kappa_nu'(p) = " + std::to_string(inv.kappa_nu.derivative(1)) +
                       ", kappa_nu''(p) = " +
                       (inv.kappa_nu.order() >= 2 ? std::to_string(inv.kappa_nu.derivative(2)) : "?") +
                       ", kappa_s(p) = " + std::to_string(ks);
            break;
        }
        case SpecialRule::bounded_K: {
            if (inv.kappa_nu.max_abs_coeff() > 1e-10 * std::max(1.0, std::abs(kc)))
                throw PreconditionNotMet("bounded-K rule needs kappa_nu = 0 along the axis");
            double fourkt2 = 4.0 * kt0 * kt0 + ks * kc * kc;
            double reg_scale = std::max(4.0 * kt0 * kt0 + std::abs(ks) * kc * kc, 1e-300);
            bool kt_nonzero = std::abs(kt0) > tol.classify * kt_scale;
            bool kt1_nonzero = inv.kappa_t.order() >= 1 &&
                               std::abs(inv.kappa_t.coeff(1)) > tol.classify * kt_scale;
            bool ks_nonzero = std::abs(ks) > tol.classify * ks_scale;
            if (kt_nonzero && std::abs(fourkt2) > tol.classify * reg_scale)
                r.cls = PlaneGermClass::fold;
            else if (!kt_nonzero && kt1_nonzero && ks_nonzero)
                r.cls = PlaneGermClass::cusp;
            else
                r.cls = PlaneGermClass::degenerate;
            r.detail = "kappa_t(p) = " + std::to_string(kt0) + ", kappa_t'(p) = " +
                       (inv.kappa_t.order() >= 1 ? std::to_string(inv.kappa_t.derivative(1)) : "?") +
                       ", 4kt^2 + ks kc^2 = " + std::to_string(fourkt2);
            break;
        }
    }

    if (r.cls != PlaneGermClass::degenerate && r.cls != gauss_tag)
        throw ClassifierDisagreement("special rule says " + to_string(r.cls) +
                                     " but the Gauss-map classifier says " + to_string(gauss_tag));
    return r;
}

} // namespace fatlas

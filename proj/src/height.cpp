#include "fatlas/height.hpp"

#include <cmath>

namespace fatlas {

std::string to_string(D4Tag t) {
    switch (t) {
        case D4Tag::d4_plus: return "D4plus";
        case D4Tag::d4_minus: return "D4minus";
        case D4Tag::not_d4_degenerate: return "NotD4-degenerate";
        case D4Tag::not_applicable: return "NotApplicable";
    }
    return "?";
}

HeightContext extended_height(const FrameData& fr, const Tolerances& tol) {
    if (fr.kind != Kind::second_kind)
        throw KindMismatch("extended height analysis targets second-kind singular points");

    HeightContext hc;
    hc.direction = value(fr.nu);
    hc.offset = dot(value(fr.f), hc.direction);
    hc.phi = cadd(cadd(hc.direction[0] * fr.f[0], hc.direction[1] * fr.f[1]),
                  hc.direction[2] * fr.f[2]) -
             hc.offset;

    double scale = std::max(hc.phi.max_abs_coeff(), 1e-300);
    if (std::abs(hc.phi.value()) > tol.frame * scale ||
        std::abs(hc.phi.partial(1, 0)) > tol.frame * scale ||
        std::abs(hc.phi.partial(0, 1)) > tol.frame * scale)
        throw ConsistencyViolation("phi does not vanish to first order at p in the direction nu(p)");

    Vec3 fuv = {fr.f_u[0].partial(0, 1), fr.f_u[1].partial(0, 1), fr.f_u[2].partial(0, 1)};
    Vec3 fv0 = value(fr.f_v);
    hc.fuv_dot_fv = dot(fuv, fv0);
    double sscale = std::max(norm(fuv) * norm(fv0), 1e-300);
    hc.strongly_adapted = std::abs(hc.fuv_dot_fv) <= tol.frame * sscale;
    return hc;
}

HeightReport height_corank(const HeightContext& hc, const FrameData& fr, const Fundamentals& fund,
                           const PrincipalData& pd, const Tolerances& tol) {
    (void)fr;
    HeightReport rep;
    rep.strongly_adapted = hc.strongly_adapted;
    double huu = hc.phi.partial(2, 0);
    double huv = hc.phi.partial(1, 1);
    double hvv = hc.phi.partial(0, 2);
    rep.hessian = {{{huu, huv}, {huv, hvv}}};

    double hs = std::max({std::abs(huu), std::abs(huv), std::abs(hvv),
                          tol.classify * hc.phi.max_abs_coeff(), 1e-300});
    // eigenvalues of the symmetric 2x2
    double tr = huu + hvv;
    double disc = std::sqrt(std::max(0.0, (huu - hvv) * (huu - hvv) + 4.0 * huv * huv));
    int rank = 0;
    for (double ev : {0.5 * (tr + disc), 0.5 * (tr - disc)})
        if (std::abs(ev) > tol.classify * hs) ++rank;
    rep.corank = 2 - rank;

    rep.kappa_via_hessian = hvv / fund.G.value();
    rep.kappa_via_principal = pd.kappa.value();
    bool parabolic = std::abs(pd.kappa.value()) <=
                     tol.classify * std::max(pd.kappa.max_abs_coeff(), 1e-300);
    if ((rep.corank == 2) != parabolic)
        throw CorankPropositionViolated(
            "hess(phi) rank and the parabolic test disagree: corank = " +
            std::to_string(rep.corank) + ", kappa(p) = " + std::to_string(pd.kappa.value()));
    return rep;
}

double delta_phi_raw(const Jet2& phi, const Tolerances& tol) {
    if (phi.order() < 3) throw OrderExceeded("delta_phi needs a jet of order >= 3");
    double scale = std::max(phi.max_abs_coeff(), 1e-300);
    for (int d = 0; d <= 2; ++d)
        for (int j = 0; j <= d; ++j)
            if (std::abs(phi.coeff(d - j, j)) > tol.classify * scale)
                throw NotCorank2("the 2-jet of phi does not vanish; discriminant undefined");

    double a = phi.partial(3, 0);
    double b = phi.partial(2, 1);
    double c = phi.partial(1, 2);
    double d = phi.partial(0, 3);
    return a * a * d * d - 6.0 * a * b * c * d - 3.0 * b * b * c * c + 4.0 * b * b * b * d +
           4.0 * a * c * c * c;
}

std::pair<double, std::optional<double>> delta_phi(const HeightContext& hc,
                                                   const Fundamentals* fund,
                                                   const Tolerances& tol) {
    double raw = delta_phi_raw(hc.phi, tol);
    std::optional<double> closed;
    if (hc.strongly_adapted && fund) {
        double l = fund->L.value();
        double m = fund->M.value();
        double nu_ = fund->N.partial(1, 0);
        double nv = fund->N.partial(0, 1);
        closed = 4.0 * l * l * (l * nv - m * (nu_ + m));
        double third = std::max({std::abs(hc.phi.partial(3, 0)), std::abs(hc.phi.partial(2, 1)),
                                 std::abs(hc.phi.partial(1, 2)), std::abs(hc.phi.partial(0, 3)),
                                 1e-300});
        double floor = third * third * third * third;
        if (std::abs(raw - *closed) > tol.closed_form * std::max({std::abs(raw), std::abs(*closed), floor * tol.closed_form}))
            throw ClosedFormMismatch("raw discriminant " + std::to_string(raw) +
                                     " vs closed form " + std::to_string(*closed));
    }
    return {raw, closed};
}

HeightReport d4_classify(const HeightContext& hc, const FrameData& fr, const Fundamentals& fund,
                         const PrincipalData& pd, PlaneGermClass gauss_tag, const Tolerances& tol) {
    if (fr.kind != Kind::second_kind || !fr.is_front)
        throw KindMismatch("D4 classification targets second-kind front points");

    HeightReport rep = height_corank(hc, fr, fund, pd, tol);
    Jet2 vk = cadd(cmul(pd.V1, pd.kappa.du()), cmul(pd.V2, pd.kappa.dv()));
    rep.v_kappa = vk.value();

    if (rep.corank != 2) {
        rep.d4_tag = D4Tag::not_applicable;
        rep.fold_link = gauss_tag == PlaneGermClass::fold;
        return rep;
    }

    auto [raw, closed] = delta_phi(hc, &fund, tol);
    rep.delta_phi = raw;
    rep.delta_phi_closed_form = closed;

    double third = std::max({std::abs(hc.phi.partial(3, 0)), std::abs(hc.phi.partial(2, 1)),
                             std::abs(hc.phi.partial(1, 2)), std::abs(hc.phi.partial(0, 3)),
                             1e-300});
    double delta_tol = tol.classify * third * third * third * third;
    bool delta_nonzero = std::abs(raw) > delta_tol;
    bool not_ridge =
        std::abs(rep.v_kappa) > tol.ridge * std::max(vk.max_abs_coeff(), 1e-300);

    // (i) Delta != 0 <=> parabolic and not a ridge point
    if (delta_nonzero != not_ridge)
        throw ConsistencyViolation("Delta_phi = " + std::to_string(raw) + " vs V kappa(p) = " +
                                   std::to_string(rep.v_kappa) + ": ridge equivalence violated");
    // (ii) Delta = 4 L^2 G * V kappa(p) at strongly adapted points
    if (hc.strongly_adapted) {
        double l = fund.L.value();
        double viaridge = 4.0 * l * l * fund.G.value() * rep.v_kappa;
        if (std::abs(raw - viaridge) >
            tol.closed_form * std::max({std::abs(raw), std::abs(viaridge), delta_tol}))
            throw ConsistencyViolation("Delta_phi = " + std::to_string(raw) +
                                       " vs 4 L^2 G V kappa = " + std::to_string(viaridge));
    }
    // (iii) D4 <=> the Gauss map has a fold
    bool is_fold = gauss_tag == PlaneGermClass::fold;
    if (delta_nonzero != is_fold)
        throw ConsistencyViolation("D4 discriminant and Gauss fold classification disagree");

    rep.d4_tag = !delta_nonzero ? D4Tag::not_d4_degenerate
                 : raw > 0.0    ? D4Tag::d4_plus
                                : D4Tag::d4_minus;
    rep.fold_link = is_fold;
    return rep;
}

} // namespace fatlas

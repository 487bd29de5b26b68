#include "fatlas/fundamentals.hpp"

#include <cmath>

namespace fatlas {

Fundamentals fundamentals(const FrameData& fr, const Tolerances& tol) {
    if (fr.style != Kind::first_kind && fr.style != Kind::second_kind)
        throw KindMismatch("fundamentals need an adapted singular frame (or its off-axis extension)");

    Fundamentals fd;
    fd.kind = fr.style;
    Vec3J nu_u = du(fr.nu), nu_v = dv(fr.nu);
    int n = nu_u[0].order();

    if (fr.style == Kind::second_kind) {
        fd.E = dot(fr.h, fr.h).truncated(n);
        fd.F = dot(fr.h, fr.f_v).truncated(n);
        fd.G = dot(fr.f_v, fr.f_v).truncated(n);
        fd.L = -dot(fr.h, nu_u);
        fd.M = -dot(fr.h, nu_v);
        fd.N = -dot(fr.f_v, nu_v);
    } else {
        // first kind, or the off-axis extension of a first-kind surface
        fd.E = dot(fr.f_u, fr.f_u).truncated(n);
        fd.F = dot(fr.f_u, fr.h).truncated(n);
        fd.G = dot(fr.h, fr.h).truncated(n);
        fd.L = -dot(fr.f_u, nu_u);
        fd.M = -dot(fr.h, nu_u);
        fd.N = -dot(fr.h, nu_v);
    }
    fd.W = csub(cmul(fd.E, fd.G), cmul(fd.F, fd.F));
    double scale = std::max({fd.E.value() * fd.G.value(), fd.F.value() * fd.F.value(), 1e-300});
    if (fd.W.value() <= tol.frame * scale)
        throw DegenerateFrame("E G - F^2 is not positive at the base point");
    return fd;
}

ModifiedChristoffel christoffel_decompose(const FrameData& fr, const Fundamentals& fund) {
    bool first_kind_like = fund.kind == Kind::first_kind;
    if (!first_kind_like) throw KindMismatch("modified Christoffel symbols exist for the first kind");

    const Jet2 &E = fund.E, &F = fund.F, &G = fund.G;
    Vec3J h_u = du(fr.h);
    Jet2 fu_hu = dot(fr.f_u, h_u);
    Jet2 E_u = E.du(), G_u = G.du(), G_v = G.dv(), F_u = F.du(), F_v = F.dv();
    Jet2 two_w = 2.0 * fund.W;
    Point2 p = fr.p;
    int n = E_u.order();
    Jet2 vj = Jet2::variable_v(n, p);

    ModifiedChristoffel mc;
    mc.G111 = cdiv(cadd(csub(cmul(G, E_u), 2.0 * cmul(F, F_u)), 2.0 * cmul(F, fu_hu)), two_w);
    mc.G211 = cdiv(csub(csub(2.0 * cmul(E, F_u), 2.0 * cmul(E, fu_hu)), cmul(F, E_u)), two_w);
    mc.G112 = cdiv(csub(2.0 * cmul(G, fu_hu), cmul(F, G_u)), two_w);
    mc.G212 = cdiv(csub(cmul(E, G_u), 2.0 * cmul(F, fu_hu)), two_w);
    mc.G122 = cdiv(csub(csub(2.0 * cmul(G, F_v), cmul(vj, cmul(G, G_u))), cmul(F, G_v)), two_w);
    mc.G222 = cdiv(cadd(csub(cmul(E, G_v), 2.0 * cmul(F, F_v)), cmul(vj, cmul(F, G_u))), two_w);

    Vec3J f_uu = du(fr.f_u), f_uv = dv(fr.f_u), f_vv = dv(fr.f_v);
    Vec3J t1 = (mc.G111 * fr.f_u) + (mc.G211 * fr.h) + (fund.L * fr.nu);
    mc.r1 = truncated(f_uu, t1[0].order()) - t1;
    Vec3J t2 = vj * ((mc.G112 * fr.f_u) + (mc.G212 * fr.h) + (fund.M * fr.nu));
    mc.r2 = truncated(f_uv, t2[0].order()) - t2;
    Jet2 one = Jet2::constant(n, p, 1.0);
    Vec3J t3 = (cmul(vj, mc.G122) * fr.f_u) + (cadd(one, cmul(vj, mc.G222)) * fr.h) +
               (cmul(vj, fund.N) * fr.nu);
    mc.r3 = truncated(f_vv, t3[0].order()) - t3;

    for (const Vec3J* r : {&mc.r1, &mc.r2, &mc.r3}) {
        mc.max_residual_value = std::max(mc.max_residual_value, norm(value(*r)));
        mc.max_residual_coeff = std::max(mc.max_residual_coeff, max_abs_coeff(*r));
    }
    return mc;
}

InvariantSet edge_invariants(const FrameData& fr, const Fundamentals& fund, const Tolerances& tol) {
    InvariantSet inv;
    inv.kind = fr.kind;

    if (fr.kind == Kind::second_kind) {
        // mu_c = 2 (vH)(p); with f_u + eps f_v = vh the product vH extends
        // smoothly as A / (2W), A = G(L + eps M) - 2vFM + vEN.
        int n = fund.L.order();
        Jet2 eps2 = jet2_from_axis(fr.eps, n, fr.p);
        Jet2 vj = Jet2::variable_v(n, fr.p);
        Jet2 A = csub(cadd(cmul(fund.G, cadd(fund.L, cmul(eps2, fund.M))),
                           cmul(vj, cmul(fund.E, fund.N))),
                      2.0 * cmul(vj, cmul(fund.F, fund.M)));
        inv.mu_c = A.value() / fund.W.value();
        bool front_by_mu =
            std::abs(*inv.mu_c) > tol.classify * std::max(1.0, A.max_abs_coeff() / fund.W.value());
        if (front_by_mu != fr.is_front)
            throw ConsistencyViolation("mu_c = " + std::to_string(*inv.mu_c) +
                                       " contradicts the rank-based front flag");
        return inv;
    }
    if (fr.kind != Kind::first_kind) throw KindMismatch("edge invariants need a singular frame");

    const Jet2 &E = fund.E, &F = fund.F, &G = fund.G, &L = fund.L, &M = fund.M, &N = fund.N;
    Jet2 sqrtE = sqrt(E), sqrtW = sqrt(fund.W);
    Jet2 E_u = E.du(), E_vv = E.dv().dv(), F_u = F.du(), L_u = L.du();

    // kappa_s = (2 F_u E - E E_vv - E_u F) / (2 E^{3/2} sqrt(W))
    Jet2 num_s = csub(csub(2.0 * cmul(F_u, E), cmul(E, E_vv)), cmul(E_u, F));
    Jet2 den_s = 2.0 * cmul(cmul(E, sqrtE), sqrtW);
    inv.kappa_s_axis = restrict_to_axis(cdiv(num_s, den_s));
    inv.kappa_s = inv.kappa_s_axis.value();

    inv.kappa_nu = restrict_to_axis(cdiv(L, E));

    // kappa_c = 2 N (E / W)^{3/4}
    Jet2 kc = 2.0 * cmul(N, pow_dyadic(cdiv(E, fund.W), 3, 2));
    inv.kappa_c_axis = restrict_to_axis(kc);
    inv.kappa_c = inv.kappa_c_axis.value();

    inv.kappa_t = restrict_to_axis(cdiv(csub(cmul(E, M), cmul(F, L)), cmul(E, sqrtW)));

    // kappa_i = (EM - FL)(2 F_u E - E E_vv - E_u F) / (2 E^{5/2} W)
    //           + (E L_u - E_u L) / E^{5/2}
    Jet2 e52 = cmul(cmul(E, E), sqrtE);
    Jet2 term1 = cdiv(cmul(csub(cmul(E, M), cmul(F, L)), num_s), 2.0 * cmul(e52, fund.W));
    Jet2 term2 = cdiv(csub(cmul(E, L_u), cmul(E_u, L)), e52);
    inv.kappa_i = restrict_to_axis(cadd(term1, term2));

    bool front_by_kc =
        std::abs(N.value()) > tol.classify * std::max(N.max_abs_coeff(), 1e-300);
    if (front_by_kc != fr.is_front)
        throw ConsistencyViolation("kappa_c = " + std::to_string(inv.kappa_c) +
                                   " contradicts the rank-based front flag");
    return inv;
}

} // namespace fatlas

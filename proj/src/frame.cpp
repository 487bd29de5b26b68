#include "fatlas/frame.hpp"

#include <cmath>

namespace fatlas {

std::string to_string(Kind k) {
    switch (k) {
        case Kind::regular: return "regular";
        case Kind::first_kind: return "first-kind";
        case Kind::second_kind: return "second-kind";
        case Kind::degenerate: return "degenerate";
    }
    return "?";
}

std::string to_string(SingularityClass c) {
    switch (c) {
        case SingularityClass::regular: return "Regular";
        case SingularityClass::cuspidal_edge: return "CuspidalEdge";
        case SingularityClass::swallowtail: return "Swallowtail";
        case SingularityClass::nondeg_first_kind: return "NonDegFirstKind";
        case SingularityClass::nondeg_second_kind: return "NonDegSecondKind";
        case SingularityClass::degenerate_singularity: return "DegenerateSingularity";
    }
    return "?";
}

Jet2 jet2_from_axis(const Jet1& g, int order, Point2 base) {
    Jet2 r(order, base);
    for (int i = 0; i <= std::min(order, g.order()); ++i) r.coeff(i, 0) = g.coeff(i);
    return r;
}

namespace {

Vec3J normalize(const Vec3J& a) {
    Jet2 n = sqrt(dot(a, a));
    return {cdiv(a[0], n), cdiv(a[1], n), cdiv(a[2], n)};
}

Vec3J divide_out_v_vec(const Vec3J& a, double tol_rel) {
    return {divide_out_v(a[0], tol_rel), divide_out_v(a[1], tol_rel), divide_out_v(a[2], tol_rel)};
}

/// Smallest and largest singular values of the 6x2 differential of (f, nu)
/// at the base point, via the 2x2 Gram matrix.
std::pair<double, double> dfnu_singular_values(const Vec3J& f_u, const Vec3J& f_v,
                                               const Vec3J& nu_u, const Vec3J& nu_v) {
    Vec3 a1 = value(f_u), a2 = value(nu_u), b1 = value(f_v), b2 = value(nu_v);
    double g11 = dot(a1, a1) + dot(a2, a2);
    double g12 = dot(a1, b1) + dot(a2, b2);
    double g22 = dot(b1, b1) + dot(b2, b2);
    double tr = g11 + g22;
    double disc = std::sqrt(std::max(0.0, (g11 - g22) * (g11 - g22) + 4.0 * g12 * g12));
    double lo = std::max(0.0, 0.5 * (tr - disc));
    double hi = 0.5 * (tr + disc);
    return {std::sqrt(lo), std::sqrt(hi)};
}

Jet1 solve_eps(const Vec3J& f_u, const Vec3J& f_v) {
    Jet1 num = restrict_to_axis(dot(f_u, f_v));
    Jet1 den = restrict_to_axis(dot(f_v, f_v));
    return -(num / den);
}

void check_axis_singular(const FrameData& fr, const Tolerances& tol) {
    Jet1 on_axis = restrict_to_axis(fr.lambda);
    double scale = std::max(fr.lambda.max_abs_coeff(), 1e-300);
    if (on_axis.max_abs_coeff() > tol.frame * scale)
        throw AdaptedCoordinateViolation(
            "signed area density does not vanish along the u-axis (max residual " +
            std::to_string(on_axis.max_abs_coeff()) + "); coordinates are not adapted");
}

void finish_front_flag(FrameData& fr, const Tolerances& tol) {
    auto [lo, hi] = dfnu_singular_values(fr.f_u, fr.f_v, du(fr.nu), dv(fr.nu));
    fr.rank_sigma_min = lo;
    fr.is_front = lo > tol.frame * std::max(hi, 1e-300);
}

} // namespace

FrameData build_frame(const SurfaceDef& def, Point2 p, int order, const Tolerances& tol) {
    FrameData fr;
    fr.p = p;
    fr.order = order;
    fr.domain_scale = def.domain.scale();
    fr.f = eval_jets(def, p, order);
    fr.f_u = du(fr.f);
    fr.f_v = dv(fr.f);

    Vec3 fu0 = value(fr.f_u), fv0 = value(fr.f_v);
    double scale = std::max({norm(fu0), norm(fv0), 1e-300});
    bool singular = norm(cross(fu0, fv0)) <= tol.frame * scale * scale;

    bool declared_adapted = def.declared_kind == SurfaceKind::first_kind_adapted ||
                            def.declared_kind == SurfaceKind::second_kind_adapted;

    if (!singular) {
        if (declared_adapted)
            throw NotSingular("surface '" + def.name +
                              "' is regular at the requested point; singular analysis "
                              "needs a point on the singular curve");
        fr.kind = Kind::regular;
        fr.style = Kind::regular;
        fr.h = fr.f_v;
        fr.nu = normalize(cross(fr.f_u, fr.f_v));
        fr.lambda = det3(fr.f_u, fr.f_v, fr.nu);
        fr.eps = Jet1(order - 1, p.u);
        finish_front_flag(fr, tol);
        return fr;
    }

    if (norm(fu0) <= tol.frame * scale && norm(fv0) <= tol.frame * scale)
        throw DegenerateFrame("df vanishes at the point (corank 2); out of scope");
    if (p.v != 0.0)
        throw AdaptedCoordinateViolation(
            "singular point lies off the u-axis; evaluate in adapted coordinates");

    if (norm(fv0) <= tol.frame * scale) {
        // first kind: f_v = v h, null field is d/dv
        if (def.declared_kind == SurfaceKind::second_kind_adapted)
            throw AdaptedCoordinateViolation(
                "declared second kind but f_v vanishes at the point (first-kind data)");
        fr.kind = Kind::first_kind;
        fr.style = Kind::first_kind;
        try {
            fr.h = divide_out_v_vec(fr.f_v, tol.divide);
        } catch (const NotDivisibleByV& e) {
            throw AdaptedCoordinateViolation(std::string("f_v is not divisible by v: ") + e.what());
        }
        Vec3J cr = cross(fr.f_u, fr.h);
        if (norm(value(cr)) <= tol.frame * scale)
            throw DegenerateFrame("f_u x h vanishes at the point");
        fr.nu = normalize(cr);
        fr.eps = Jet1(order - 1, p.u);
    } else {
        // second kind: null field d/du + eps(u) d/dv with eps(0) = 0
        if (def.declared_kind == SurfaceKind::first_kind_adapted)
            throw AdaptedCoordinateViolation(
                "declared first kind but f_v does not vanish at the point");
        if (norm(fu0) > tol.frame * scale)
            throw AdaptedCoordinateViolation(
                "singular point with f_u(p) != 0: null direction is not d/du (eps(0) != 0)");
        fr.kind = Kind::second_kind;
        fr.style = Kind::second_kind;
        fr.eps = solve_eps(fr.f_u, fr.f_v);
        if (std::abs(fr.eps.value()) > tol.frame * std::max(1.0, fr.eps.max_abs_coeff()))
            throw AdaptedCoordinateViolation("eps(0) = " + std::to_string(fr.eps.value()) +
                                             " is not zero");
        fr.eps.coeff(0) = 0.0;
        Jet2 eps2 = jet2_from_axis(fr.eps, order - 1, p);
        Vec3J w = fr.f_u + eps2 * fr.f_v;
        try {
            fr.h = divide_out_v_vec(w, tol.divide);
        } catch (const NotDivisibleByV& e) {
            throw AdaptedCoordinateViolation(
                std::string("f_u + eps(u) f_v is not divisible by v: ") + e.what());
        }
        Vec3J cr = cross(fr.h, fr.f_v);
        if (norm(value(cr)) <= tol.frame * scale * std::max(1.0, norm(value(fr.h))))
            throw DegenerateFrame("h x f_v vanishes at the point");
        fr.nu = normalize(cr);
    }

    fr.lambda = det3(fr.f_u, fr.f_v, fr.nu);
    check_axis_singular(fr, tol);
    finish_front_flag(fr, tol);
    return fr;
}

FrameData extend_frame_off_axis(const SurfaceDef& def, Point2 p, int order, const Tolerances& tol) {
    if (p.v == 0.0) return build_frame(def, p, order, tol);
    FrameData fr;
    fr.p = p;
    fr.order = order;
    fr.domain_scale = def.domain.scale();
    fr.f = eval_jets(def, p, order);
    fr.f_u = du(fr.f);
    fr.f_v = dv(fr.f);
    fr.kind = Kind::regular;

    Jet2 vj = Jet2::variable_v(order - 1, p);
    switch (def.declared_kind) {
        case SurfaceKind::first_kind_adapted: {
            fr.style = Kind::first_kind;
            fr.h = {cdiv(fr.f_v[0], vj), cdiv(fr.f_v[1], vj), cdiv(fr.f_v[2], vj)};
            fr.nu = normalize(cross(fr.f_u, fr.h));
            fr.eps = Jet1(order - 1, p.u);
            break;
        }
        case SurfaceKind::second_kind_adapted: {
            fr.style = Kind::second_kind;
            FrameData axis = build_frame(def, {p.u, 0.0}, order, tol);
            fr.eps = axis.eps;
            Jet2 eps2 = jet2_from_axis(fr.eps, order - 1, p);
            Vec3J w = fr.f_u + eps2 * fr.f_v;
            fr.h = {cdiv(w[0], vj), cdiv(w[1], vj), cdiv(w[2], vj)};
            fr.nu = normalize(cross(fr.h, fr.f_v));
            break;
        }
        default: {
            Vec3 fu0 = value(fr.f_u), fv0 = value(fr.f_v);
            double scale = std::max({norm(fu0), norm(fv0), 1e-300});
            if (norm(cross(fu0, fv0)) <= tol.frame * scale * scale)
                throw AdaptedCoordinateViolation(
                    "singular point off the u-axis on a surface without declared adapted kind");
            fr.h = fr.f_v;
            fr.nu = normalize(cross(fr.f_u, fr.f_v));
            fr.eps = Jet1(order - 1, p.u);
            break;
        }
    }
    fr.lambda = det3(fr.f_u, fr.f_v, fr.nu);
    finish_front_flag(fr, tol);
    return fr;
}

ClassifyResult classify_front_point(const FrameData& fr, const Tolerances& tol) {
    ClassifyResult res;
    res.is_front = fr.is_front;
    double scale = std::max(fr.lambda.max_abs_coeff(), 1e-300);

    if (fr.kind == Kind::regular) {
        if (std::abs(fr.lambda.value()) <= tol.classify * scale)
            throw NotSingular("frame is marked regular but lambda vanishes at the point");
        res.cls = SingularityClass::regular;
        return res;
    }
    if (std::abs(fr.lambda.value()) > tol.classify * scale)
        throw NotSingular("lambda(p) != 0: not a singular point");

    res.dlambda_u = fr.lambda.partial(1, 0);
    res.dlambda_v = fr.lambda.partial(0, 1);
    bool nondegenerate =
        std::max(std::abs(res.dlambda_u), std::abs(res.dlambda_v)) > tol.classify * scale;

    if (fr.kind == Kind::first_kind) {
        res.eta_lambda = res.dlambda_v;  // eta = d/dv
        if (!nondegenerate || std::abs(res.eta_lambda) <= tol.classify * scale) {
            res.cls = SingularityClass::degenerate_singularity;
            return res;
        }
        res.cls = fr.is_front ? SingularityClass::cuspidal_edge
                              : SingularityClass::nondeg_first_kind;
        return res;
    }

    // second kind: eta = d/du + eps(u) d/dv
    Jet2 eps2 = jet2_from_axis(fr.eps, fr.lambda.order(), fr.p);
    Jet2 eta_l = cadd(fr.lambda.du(), cmul(eps2, fr.lambda.dv()));
    Jet2 eta_eta_l = cadd(eta_l.du(), cmul(eps2, eta_l.dv()));
    res.eta_lambda = eta_l.value();
    res.eta_eta_lambda = eta_eta_l.value();
    if (!nondegenerate) {
        res.cls = SingularityClass::degenerate_singularity;
        return res;
    }
    if (fr.is_front && std::abs(res.eta_lambda) <= tol.classify * scale &&
        std::abs(res.eta_eta_lambda) > tol.classify * scale) {
        res.cls = SingularityClass::swallowtail;
    } else {
        res.cls = SingularityClass::nondeg_second_kind;
    }
    return res;
}

} // namespace fatlas

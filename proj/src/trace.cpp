#include "fatlas/trace.hpp"

#include <cmath>

#include "fatlas/frame.hpp"

namespace fatlas {

namespace {

constexpr int kFieldOrder = 6;

FrameData frame_at(const SurfaceDef& def, Point2 p, const Tolerances& tol) {
    if (p.v == 0.0 && (def.declared_kind == SurfaceKind::first_kind_adapted ||
                       def.declared_kind == SurfaceKind::second_kind_adapted))
        return build_frame(def, p, kFieldOrder, tol);
    return extend_frame_off_axis(def, p, kFieldOrder, tol);
}

} // namespace

FieldEval make_lambda_field(const SurfaceDef& def, const Tolerances& tol) {
    return [def, tol](Point2 p) {
        FrameData fr = frame_at(def, p, tol);
        return fr.lambda;
    };
}

FieldEval make_kappa_field(const SurfaceDef& def, const Tolerances& tol) {
    bool adapted = def.declared_kind == SurfaceKind::first_kind_adapted ||
                   def.declared_kind == SurfaceKind::second_kind_adapted;
    if (!adapted) {
        return [def, tol](Point2 p) {
            FrameData fr = frame_at(def, p, tol);
            return det3(du(fr.nu), dv(fr.nu), fr.nu);
        };
    }
    return [def, tol](Point2 p) {
        FrameData fr = frame_at(def, p, tol);
        Fundamentals fund = fundamentals(fr, tol);
        return principal_data(fr, fund, tol).kappa;
    };
}

Polyline trace_zero_curve(const FieldEval& field, FieldTag tag, Point2 seed, double step, int count,
                          const Tolerances& tol) {
    if (count < 1) throw UsageError("trace needs count >= 1");
    Polyline line;
    line.field = tag;

    auto correct = [&](Point2 x, bool at_seed) -> std::pair<Point2, double> {
        double fval = 0.0;
        for (int it = 0; it < 30; ++it) {
            Jet2 j = field(x);
            fval = j.value();
            double scale = std::max(j.max_abs_coeff(), 1e-300);
            if (std::abs(fval) <= tol.trace * scale) return {x, std::abs(fval)};
            double gu = j.partial(1, 0), gv = j.partial(0, 1);
            double g2 = gu * gu + gv * gv;
            if (g2 <= (tol.frame * scale) * (tol.frame * scale)) {
                if (at_seed)
                    throw SeedNotOnCurve("field gradient vanishes at the seed; no regular zero "
                                         "curve passes through it");
                throw SingularGradient("field gradient vanishes near (" + std::to_string(x.u) +
                                       ", " + std::to_string(x.v) + "); curve is not regular there");
            }
            x.u -= fval * gu / g2;
            x.v -= fval * gv / g2;
        }
        Jet2 j = field(x);
        double scale = std::max(j.max_abs_coeff(), 1e-300);
        if (std::abs(j.value()) > 10.0 * tol.trace * scale) {
            if (at_seed)
                throw SeedNotOnCurve("|field| = " + std::to_string(std::abs(j.value())) +
                                     " at the corrected seed exceeds 10x the trace tolerance");
            throw SingularGradient("corrector failed to converge while marching");
        }
        return {x, std::abs(j.value())};
    };

    auto [x0, r0] = correct(seed, true);
    line.points.push_back(x0);
    line.residuals.push_back(r0);

    double dir = step >= 0.0 ? 1.0 : -1.0;
    double h = std::abs(step);
    double tprev_u = 0.0, tprev_v = 0.0;
    bool have_prev = false;
    Point2 x = x0;
    for (int i = 1; i < count; ++i) {
        Jet2 j = field(x);
        double gu = j.partial(1, 0), gv = j.partial(0, 1);
        double gn = std::hypot(gu, gv);
        double scale = std::max(j.max_abs_coeff(), 1e-300);
        if (gn <= tol.frame * scale)
            throw SingularGradient("field gradient vanishes at (" + std::to_string(x.u) + ", " +
                                   std::to_string(x.v) + ")");
        double tu = gv / gn, tv = -gu / gn;
        if (!have_prev) {
            tu *= dir;
            tv *= dir;
            have_prev = true;
        } else if (tu * tprev_u + tv * tprev_v < 0.0) {
            tu = -tu;
            tv = -tv;
        }
        tprev_u = tu;
        tprev_v = tv;
        Point2 pred{x.u + h * tu, x.v + h * tv};
        try {
            auto [xc, rc] = correct(pred, false);
            x = xc;
            line.points.push_back(xc);
            line.residuals.push_back(rc);
        } catch (const PointOutsideDomain&) {
            break;  // curve left the surface domain
        }
    }
    return line;
}

} // namespace fatlas

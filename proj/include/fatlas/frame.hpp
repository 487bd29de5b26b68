#pragma once

#include <string>

#include "fatlas/config.hpp"
#include "fatlas/expr.hpp"
#include "fatlas/jet.hpp"
#include "fatlas/vec3.hpp"

namespace fatlas {

enum class Kind { regular, first_kind, second_kind, degenerate };

std::string to_string(Kind k);

/// Per-point geometric frame. For adapted singular points (base on the u-axis)
/// h carries the factored differential: f_v = v h for the first kind,
/// f_u + eps(u) f_v = v h for the second. nu is the unit normal built from the
/// frame cross product, so it stays smooth across the singular curve, oriented
/// by det(f_u, h, nu) > 0 (first kind) resp. det(h, f_v, nu) > 0 (second).
struct FrameData {
    Point2 p;
    int order = 0;
    Kind kind = Kind::regular;
    // Adaptation style of the h-frame: equals `kind` on the axis; for
    // off-axis extensions it records which factorization produced h.
    Kind style = Kind::regular;
    bool is_front = false;
    int orientation_sign = +1;
    double domain_scale = 1.0;

    Vec3J f;       // component jets, full order
    Vec3J f_u;     // order - 1
    Vec3J f_v;     // order - 1
    Vec3J h;       // order - 2 (adapted kinds; f_v copy for regular frames)
    Vec3J nu;      // unit normal jets
    Jet2 lambda;   // det(f_u, f_v, nu)
    Jet1 eps;      // second kind: eps(u) with eps(0) = 0; zero jet otherwise

    double rank_sigma_min = 0.0;  // smallest singular value of d(f,nu) at p
};

/// Builds the frame at p and validates adapted coordinates against the
/// declared kind. For declared first/second kind the base point must lie on
/// the u-axis (p.v == 0).
FrameData build_frame(const SurfaceDef& def, Point2 p, int order, const Tolerances& tol = {});

/// Frame at a regular point of an adapted surface, off the singular axis.
/// h is recovered by the regular jet division f_v / v (first kind) or
/// (f_u + eps(u) f_v) / v (second kind, eps taken from the on-axis frame at
/// (p.u, 0)), which keeps nu and the principal branch smooth across the axis.
FrameData extend_frame_off_axis(const SurfaceDef& def, Point2 p, int order,
                                const Tolerances& tol = {});

enum class SingularityClass {
    regular,
    cuspidal_edge,
    swallowtail,
    nondeg_first_kind,
    nondeg_second_kind,
    degenerate_singularity,
};

std::string to_string(SingularityClass c);

struct ClassifyResult {
    SingularityClass cls = SingularityClass::regular;
    // witnesses
    double eta_lambda = 0.0;
    double eta_eta_lambda = 0.0;
    double dlambda_u = 0.0;
    double dlambda_v = 0.0;
    bool is_front = false;
};

/// Criteria on the signed area density: cuspidal edge iff eta lambda != 0;
/// swallowtail iff d lambda != 0, eta lambda = 0, eta eta lambda != 0 (front
/// germs only; frontal non-fronts map to the non-degenerate kinds).
ClassifyResult classify_front_point(const FrameData& fr, const Tolerances& tol = {});

/// Extends an on-axis scalar jet g(u) to a Jet2 constant in v.
Jet2 jet2_from_axis(const Jet1& g, int order, Point2 base);

} // namespace fatlas

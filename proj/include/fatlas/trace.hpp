#pragma once

#include <functional>
#include <vector>

#include "fatlas/principal.hpp"

namespace fatlas {

enum class FieldTag { lambda_zero, kappa_zero };

struct Polyline {
    FieldTag field = FieldTag::lambda_zero;
    std::vector<Point2> points;
    std::vector<double> residuals;
};

/// Evaluates a scalar field as a low-order jet (value + gradient) at a point.
using FieldEval = std::function<Jet2(Point2)>;

/// Signed area density lambda as a traceable field.
FieldEval make_lambda_field(const SurfaceDef& def, const Tolerances& tol = {});

/// The parabolic-curve field: the bounded principal curvature for adapted
/// surfaces, det(nu_u, nu_v, nu) for declared-regular ones.
FieldEval make_kappa_field(const SurfaceDef& def, const Tolerances& tol = {});

/// Predictor-corrector marching along the zero level set of the field,
/// starting from a corrected seed. `count` points are emitted (including the
/// seed); a negative step traces the opposite direction. The polyline is cut
/// short if the curve leaves the surface domain.
Polyline trace_zero_curve(const FieldEval& field, FieldTag tag, Point2 seed, double step, int count,
                          const Tolerances& tol = {});

} // namespace fatlas

#pragma once

#include <cstdint>
#include <vector>

#include "fatlas/expr.hpp"

namespace fatlas {

/// Deterministic families of validated test surfaces.
///
/// First kind: f(u,v) = alpha(u) + (v^2/2) beta(u) + (v^3/3) gamma(u)
/// + v^4 delta, with random dyadic polynomial coefficients filtered so that
/// alpha' x beta stays away from zero (the frame exists) and det(alpha',
/// beta, gamma) stays away from zero (the point is a cuspidal edge).
///
/// Second kind: the swallowtail substitution family
/// (v - 6u^2, u^2 v - 3u^4 + a v^3 + b v^4, 2uv - 8u^3), which keeps the
/// singular curve on the axis with eps(u) = 12u; every instance is validated
/// as a second-kind front before inclusion.
std::vector<SurfaceDef> generate_corpus(std::uint64_t seed, int count, SurfaceKind kind);

/// The a/b parameters used for a generated second-kind surface (index-aligned
/// with generate_corpus output; used by tests and reports).
struct SwallowtailParams {
    double a = 0.0;
    double b = 0.0;
};

SurfaceDef make_swallowtail_family(double a, double b);

} // namespace fatlas

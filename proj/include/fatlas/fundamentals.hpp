#pragma once

#include <optional>

#include "fatlas/frame.hpp"

namespace fatlas {

/// Fundamental quantities in the singular-adapted frame. First kind:
/// E = |f_u|^2, F = <f_u,h>, G = |h|^2, L = -<f_u,nu_u>, M = -<h,nu_u>,
/// N = -<h,nu_v>. Second kind: E = |h|^2, F = <h,f_v>, G = |f_v|^2,
/// L = -<h,nu_u>, M = -<h,nu_v>, N = -<f_v,nu_v>.
struct Fundamentals {
    Kind kind = Kind::regular;
    Jet2 E, F, G, L, M, N;
    Jet2 W;  // E G - F^2, positive at the base point
};

Fundamentals fundamentals(const FrameData& fr, const Tolerances& tol = {});

/// Modified Christoffel symbols of the first-kind frame {f_u, h, nu} together
/// with the residuals of the second-derivative decomposition
///   f_uu = G111 f_u + G211 h + L nu
///   f_uv = v (G112 f_u + G212 h + M nu)
///   f_vv = v G122 f_u + (1 + v G222) h + v N nu.
struct ModifiedChristoffel {
    Jet2 G111, G211, G112, G212, G122, G222;
    Vec3J r1, r2, r3;
    double max_residual_value = 0.0;  // at the base point
    double max_residual_coeff = 0.0;  // over the residual jets
};

ModifiedChristoffel christoffel_decompose(const FrameData& fr, const Fundamentals& fund);

/// Differential-geometric invariants along the singular curve. For the first
/// kind: singular curvature kappa_s, limiting normal curvature kappa_nu(u),
/// cuspidal curvature kappa_c, cusp-directional torsion kappa_t(u) and edge
/// inflectional curvature kappa_i(u). For the second kind: the normalized
/// cuspidal curvature mu_c = 2 (vH)(p), nonzero exactly when f is a front.
struct InvariantSet {
    Kind kind = Kind::regular;
    double kappa_s = 0.0;
    Jet1 kappa_nu;
    double kappa_c = 0.0;
    Jet1 kappa_t;
    Jet1 kappa_i;
    std::optional<double> mu_c;
    Jet1 kappa_s_axis;  // kappa_s as a function of u (value at 0 is kappa_s)
    Jet1 kappa_c_axis;
};

InvariantSet edge_invariants(const FrameData& fr, const Fundamentals& fund,
                             const Tolerances& tol = {});

} // namespace fatlas

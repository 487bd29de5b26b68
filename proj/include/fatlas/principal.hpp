#pragma once

#include <vector>

#include "fatlas/fundamentals.hpp"

namespace fatlas {

/// Principal-curvature data near a non-degenerate singular point. Exactly one
/// principal curvature extends smoothly across the singular curve; kappa is
/// that bounded branch, and kappa_hat = lambda * (unbounded branch) is smooth
/// and nonzero at non-degenerate front points. Both are assembled from
///   A = G(L + eps M) - 2vFM + vEN   (second kind; E N - 2vFM + vGL first),
///   B = sqrt(A^2 - 4 v W ((L + eps M)N - v M^2)),
/// with the branch sign fixed so the chosen root stays bounded.
struct PrincipalData {
    Jet2 kappa;      // bounded principal curvature
    Jet2 kappa_hat;  // lambda * unbounded principal curvature
    Jet2 A, B;       // closed-form building blocks
    Jet2 q;          // Gaussian curvature numerator: K = q / (vW)
    Jet2 H_hat;      // vH = A / (2W)
    Jet2 V1, V2;     // principal vector field for kappa
    int branch_sign = +1;
};

PrincipalData principal_data(const FrameData& fr, const Fundamentals& fund,
                             const Tolerances& tol = {});

struct RidgeResult {
    enum class Status { not_ridge, ridge, exceeded };
    Status status = Status::not_ridge;
    int order = 0;                    // k for a k-th order ridge point
    std::vector<double> derivatives;  // V kappa, V^(2) kappa, ... at p
};

/// Iterated directional derivatives of the bounded principal curvature along
/// the principal vector. Requires kappa(p) = 0; maxk limits the search depth.
RidgeResult ridge_order(const FrameData& fr, const Fundamentals& fund, const PrincipalData& pd,
                        int maxk, const Tolerances& tol = {});

} // namespace fatlas

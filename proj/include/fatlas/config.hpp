#pragma once

#include <cstdlib>

namespace fatlas {

/// Tolerance policy shared by the geometric pipeline. All "is this zero"
/// decisions are relative to a locally computed magnitude scale; raw witness
/// values are always reported alongside the verdicts so borderline calls can
/// be audited.
struct Tolerances {
    double classify = 1e-8;      // != 0 tests in classifiers
    double divide = 1e-12;       // divide_out_v residual, relative to max |coeff|
    double frame = 1e-9;         // rank / orthogonality checks in frames
    double ridge = 1e-8;         // ridge-derivative zero tests
    double trace = 1e-10;        // corrector target for zero-curve marching
    double identifier = 1e-7;    // | det(nu_u,nu_v,nu) - kappa*kappa_hat | bound
    double closed_form = 1e-7;   // raw vs closed-form Delta_phi agreement
    double branch_delta = 1e-3;  // offset (times domain scale) for branch probing
    int max_ridge_order = 3;
};

/// Jet order used when the caller does not request one. FRONT_ATLAS_ORDER
/// overrides the built-in default of 6.
inline int default_order() {
    if (const char* env = std::getenv("FRONT_ATLAS_ORDER")) {
        int n = std::atoi(env);
        if (n >= 4) return n;
    }
    return 6;
}

} // namespace fatlas

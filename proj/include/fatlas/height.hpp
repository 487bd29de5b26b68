#pragma once

#include <array>
#include <optional>

#include "fatlas/gauss.hpp"

namespace fatlas {

/// Height function in the limiting normal direction at a second-kind singular
/// point: phi(u,v) = <f(u,v), nu(p)> - <f(p), nu(p)>. It vanishes to second
/// order at p exactly when p is parabolic.
struct HeightContext {
    Vec3 direction{};
    double offset = 0.0;
    Jet2 phi;
    bool strongly_adapted = false;
    double fuv_dot_fv = 0.0;  // <f_uv(p), f_v(p)>, zero iff strongly adapted
};

HeightContext extended_height(const FrameData& fr, const Tolerances& tol = {});

enum class D4Tag { d4_plus, d4_minus, not_d4_degenerate, not_applicable };

std::string to_string(D4Tag t);

struct HeightReport {
    int corank = 0;
    std::array<std::array<double, 2>, 2> hessian{};
    double delta_phi = 0.0;
    std::optional<double> delta_phi_closed_form;
    D4Tag d4_tag = D4Tag::not_applicable;
    bool fold_link = false;
    double v_kappa = 0.0;               // ridge witness V kappa(p)
    double kappa_via_hessian = 0.0;     // phi_vv(p) / G(p)
    double kappa_via_principal = 0.0;   // kappa(p) from the principal branch
    bool strongly_adapted = false;
};

/// Corank of phi at p with the cross-check corank 2 <=> parabolic point.
HeightReport height_corank(const HeightContext& hc, const FrameData& fr, const Fundamentals& fund,
                           const PrincipalData& pd, const Tolerances& tol = {});

/// Discriminant of the cubic part of a function jet with vanishing 2-jet:
/// phi_uuu^2 phi_vvv^2 - 6 phi_uuu phi_uuv phi_uvv phi_vvv
/// - 3 phi_uuv^2 phi_uvv^2 + 4 phi_uuv^3 phi_vvv + 4 phi_uuu phi_uvv^3.
/// Its sign is invariant under linear changes of parameters.
double delta_phi_raw(const Jet2& phi, const Tolerances& tol = {});

/// Raw discriminant plus, at strongly adapted parabolic points, the closed
/// form 4 L^2 (L N_v - M (N_u + M)); the two must agree.
std::pair<double, std::optional<double>> delta_phi(const HeightContext& hc,
                                                   const Fundamentals* fund,
                                                   const Tolerances& tol = {});

/// Full D4 classification with three-way consistency: the discriminant sign,
/// the ridge condition of the bounded principal curvature, and the fold
/// classification of the Gauss map must tell the same story.
HeightReport d4_classify(const HeightContext& hc, const FrameData& fr, const Fundamentals& fund,
                         const PrincipalData& pd, PlaneGermClass gauss_tag,
                         const Tolerances& tol = {});

} // namespace fatlas

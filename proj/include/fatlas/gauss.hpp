#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fatlas/principal.hpp"

namespace fatlas {

enum class PlaneGermClass { fold, cusp, swallowtail, lips, beaks, degenerate, regular };

std::string to_string(PlaneGermClass c);

/// Identifier data for the Gauss map: Lambda = det(nu_u, nu_v, nu) computed
/// directly from the normal jets, the reduced identifier kappa, and the null
/// field (the principal vector). Lambda = kappa * kappa_hat is asserted.
struct GaussIdentifier {
    Jet2 Lambda;
    Jet2 LambdaTilde;  // = kappa
    Jet2 V1, V2;
    double consistency_residual = 0.0;
};

GaussIdentifier gauss_identifier(const FrameData& fr, const PrincipalData& pd,
                                 const Tolerances& tol = {});

struct PlaneWitness {
    double eta1 = 0.0, eta2 = 0.0, eta3 = 0.0;  // eta L, eta eta L, eta eta eta L at p
    double dL_u = 0.0, dL_v = 0.0;
    double hess_det = 0.0;
};

struct PlaneClassifyResult {
    PlaneGermClass cls = PlaneGermClass::degenerate;
    PlaneWitness w;
};

/// Criteria for corank-1 plane-to-plane germs on an identifier with null field
/// eta: fold iff eta L != 0; cusp iff dL != 0, eta L = 0, eta eta L != 0;
/// swallowtail iff dL != 0, eta L = eta eta L = 0, eta eta eta L != 0;
/// lips iff dL = 0 and det hess L > 0; beaks iff dL = 0, det hess L < 0 and
/// eta eta L != 0.
PlaneClassifyResult plane_map_classify(const Jet2& identifier, const Jet2& eta1, const Jet2& eta2,
                                       const Tolerances& tol = {});

struct GaussClassifyResult {
    PlaneGermClass cls = PlaneGermClass::regular;
    // ridge-route witnesses
    double dkappa_u = 0.0, dkappa_v = 0.0;
    double hess_det = 0.0;
    double second_null_derivative = 0.0;  // V^(2) kappa at p (beaks witness)
    RidgeResult ridge;
    // Whitney-route result on Lambda = det(nu_u, nu_v, nu)
    PlaneClassifyResult whitney;
};

/// Classifies the Gauss map singularity at a parabolic point two ways: by
/// ridge order of the bounded principal curvature and by the Whitney-style
/// criteria on the raw identifier; disagreement is an error.
GaussClassifyResult gauss_classify(const FrameData& fr, const Fundamentals& fund,
                                   const PrincipalData& pd, const Tolerances& tol = {});

struct ContactReport {
    bool parabolic_regular = false;
    int order_label = 0;                // (k+1)-point contact
    int first_nonzero_derivative = 0;   // = order_label
    double precondition_4kt2 = 0.0;     // 4 kappa_t^2 + kappa_s kappa_c^2 at p
    std::vector<double> derivatives;    // kappa_nu^(k)(p), k = 0..
};

/// Contact order of the singular curve with the parabolic curve, read off the
/// derivatives of kappa_nu(u) at p.
ContactReport contact_order(const FrameData& fr, const Fundamentals& fund, const InvariantSet& inv,
                            int maxk, const Tolerances& tol = {});

enum class RationalKStatus {
    not_rationally_bounded,
    rationally_bounded,
    rationally_continuous,
    bounded,
};

std::string to_string(RationalKStatus s);

/// Boundedness of the Gaussian curvature near a first-kind singular point:
/// rationally bounded iff kappa_nu(p) = 0, rationally continuous iff
/// additionally kappa_nu'(p) = 0, bounded iff kappa_nu vanishes identically
/// along the singular curve.
RationalKStatus rational_K_status(const InvariantSet& inv, const Tolerances& tol = {});

enum class SpecialRule { godron, curvature_line, bounded_K };

struct SpecialRuleResult {
    PlaneGermClass cls = PlaneGermClass::degenerate;
    std::string detail;
};

/// Special-case classification rules for cuspidal edges, each valid under its
/// own precondition (godron: rationally continuous K; curvature-line: the
/// singular locus is a line of curvature, kappa_t = 0 along the axis;
/// bounded-K: kappa_nu = 0 along the axis). The result must agree with
/// gauss_classify whenever the rule pins down a class.
SpecialRuleResult special_rule_classify(const FrameData& fr, const Fundamentals& fund,
                                        const InvariantSet& inv, const PrincipalData& pd,
                                        SpecialRule rule, PlaneGermClass gauss_tag,
                                        const Tolerances& tol = {});

} // namespace fatlas

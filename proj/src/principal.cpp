#include "fatlas/principal.hpp"

#include <cmath>
#include <string>

namespace fatlas {

namespace {

int sign_of(double x) { return x >= 0.0 ? +1 : -1; }

/// Numeric branch selection for the first kind: the bounded branch is the one
/// whose limit along v -> 0 matches kappa_nu(p); probed at v = +/- delta.
int select_branch_first_kind(const FrameData& fr, const Fundamentals& fund, const Jet2& A,
                             const Jet2& B, const Tolerances& tol) {
    double kappa_nu_p = fund.L.value() / fund.E.value();
    double delta = tol.branch_delta * fr.domain_scale;
    double dev[2] = {0.0, 0.0};  // index 0: s = +1, index 1: s = -1
    for (double off : {delta, -delta}) {
        double a = A.eval_offset(0.0, off);
        double b = B.eval_offset(0.0, off);
        double w = fund.W.eval_offset(0.0, off);
        dev[0] = std::max(dev[0], std::abs((a - b) / (2.0 * off * w) - kappa_nu_p));
        dev[1] = std::max(dev[1], std::abs((a + b) / (2.0 * off * w) - kappa_nu_p));
    }
    int s = dev[0] <= dev[1] ? +1 : -1;
    double win = std::min(dev[0], dev[1]), lose = std::max(dev[0], dev[1]);
    if (!(win < 0.25 * lose))
        throw BranchAmbiguity("bounded/unbounded principal branches are indistinguishable at "
                              "offset " + std::to_string(delta));
    if (s != sign_of(fund.N.value()))
        throw BranchAmbiguity("numeric branch selection contradicts sign(N) = " +
                              std::to_string(fund.N.value()));
    return s;
}

} // namespace

PrincipalData principal_data(const FrameData& fr, const Fundamentals& fund, const Tolerances& tol) {
    if (fund.kind != Kind::first_kind && fund.kind != Kind::second_kind)
        throw KindMismatch("principal data needs first- or second-kind fundamentals");
    if (!fr.is_front)
        throw PreconditionNotMet("principal-curvature branches need a front point");

    const Jet2 &E = fund.E, &F = fund.F, &G = fund.G, &L = fund.L, &M = fund.M, &N = fund.N;
    int n = L.order();
    Jet2 vj = Jet2::variable_v(n, fr.p);
    Jet2 sqrtW = sqrt(fund.W);
    bool on_axis = fr.p.v == 0.0;

    PrincipalData pd;
    if (fund.kind == Kind::second_kind) {
        Jet2 eps2 = jet2_from_axis(fr.eps, n, fr.p);
        Jet2 LeM = cadd(L, cmul(eps2, M));
        pd.A = cadd(csub(cmul(G, LeM), 2.0 * cmul(vj, cmul(F, M))), cmul(vj, cmul(E, N)));
        pd.q = csub(cmul(LeM, N), cmul(vj, cmul(M, M)));
        if (std::abs(L.value()) <= tol.classify * std::max(L.max_abs_coeff(), 1e-300))
            throw BranchAmbiguity("L(p) vanishes at a second-kind point (not a front)");
        pd.branch_sign = sign_of(L.value());
    } else {
        pd.A = cadd(csub(cmul(E, N), 2.0 * cmul(vj, cmul(F, M))), cmul(vj, cmul(G, L)));
        pd.q = csub(cmul(L, N), cmul(vj, cmul(M, M)));
    }
    pd.B = sqrt(csub(cmul(pd.A, pd.A), 4.0 * cmul(vj, cmul(fund.W, pd.q))));
    if (fund.kind == Kind::first_kind)
        pd.branch_sign = on_axis ? select_branch_first_kind(fr, fund, pd.A, pd.B, tol)
                                 : sign_of(N.value());
    double s = pd.branch_sign;

    if (fund.kind == Kind::second_kind) {
        pd.kappa = cdiv(2.0 * pd.q, cadd(pd.A, s * pd.B));
    } else if (on_axis) {
        // bounded root (A - sB) / (2vW): the numerator vanishes on the axis
        pd.kappa = cdiv(divide_out_v(csub(pd.A, s * pd.B), 1e-9), 2.0 * fund.W);
    } else {
        pd.kappa = cdiv(csub(pd.A, s * pd.B), 2.0 * cmul(vj, fund.W));
    }
    pd.kappa_hat = cdiv(cadd(pd.A, s * pd.B), 2.0 * sqrtW);
    pd.H_hat = cdiv(pd.A, 2.0 * fund.W);

    if (fund.kind == Kind::second_kind) {
        Jet2 eps2 = jet2_from_axis(fr.eps, n, fr.p);
        pd.V1 = csub(cmul(pd.kappa, F), M);
        pd.V2 = csub(L, cmul(pd.kappa, csub(cmul(vj, E), cmul(eps2, F))));
    } else {
        // kernel row of (shape operator - kappa id) in the {f_u, h} frame,
        // normalized so V1 = N and V2 = -kappa_t sqrt(W) on the axis
        Jet2 num1 = csub(csub(cmul(E, N), cmul(vj, cmul(F, M))),
                         cmul(pd.kappa, cmul(vj, fund.W)));
        pd.V1 = cdiv(num1, E);
        pd.V2 = cdiv(csub(cmul(F, L), cmul(E, M)), E);
    }
    return pd;
}

RidgeResult ridge_order(const FrameData& fr, const Fundamentals& fund, const PrincipalData& pd,
                        int maxk, const Tolerances& tol) {
    (void)fr;
    (void)fund;
    double kscale = std::max(pd.kappa.max_abs_coeff(), 1e-300);
    if (std::abs(pd.kappa.value()) > tol.classify * kscale)
        throw NotParabolic("kappa(p) != 0: ridge order is defined at parabolic points");

    RidgeResult res;
    Jet2 g = pd.kappa;
    for (int m = 1; m <= maxk + 1; ++m) {
        if (g.order() < 1)
            throw OrderExceeded("jet order exhausted before ridge derivative " + std::to_string(m) +
                                "; re-run with a higher jet order");
        Jet2 gu = g.du(), gv = g.dv();
        g = cadd(cmul(pd.V1, gu), cmul(pd.V2, gv));
        double w = g.value();
        res.derivatives.push_back(w);
        if (std::abs(w) > tol.ridge * std::max(g.max_abs_coeff(), 1e-300)) {
            if (m == 1) {
                res.status = RidgeResult::Status::not_ridge;
            } else {
                res.status = RidgeResult::Status::ridge;
                res.order = m - 1;
            }
            return res;
        }
    }
    res.status = RidgeResult::Status::exceeded;
    res.order = maxk;
    return res;
}

} // namespace fatlas

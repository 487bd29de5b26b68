#pragma once

// Test-only oracles, independent of the jet implementation paths they check:
// dense bivariate polynomials with exact coefficient arithmetic, central
// finite differences of pointwise evaluation, and deterministic random
// expression/rotation generators.

#include <array>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "fatlas/expr.hpp"
#include "fatlas/jet.hpp"

namespace oracle {

/// Dense bivariate polynomial, coefficient of u^i v^j at c[i][j].
struct Poly2 {
    std::vector<std::vector<double>> c;

    explicit Poly2(int max_deg = 0)
        : c(static_cast<std::size_t>(max_deg) + 1,
            std::vector<double>(static_cast<std::size_t>(max_deg) + 1, 0.0)) {}

    int max_deg() const { return static_cast<int>(c.size()) - 1; }

    double& at(int i, int j) { return c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    double at(int i, int j) const {
        if (i >= static_cast<int>(c.size()) || j >= static_cast<int>(c.size())) return 0.0;
        return c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }

    double eval(double u, double v) const {
        double s = 0.0;
        for (int i = 0; i <= max_deg(); ++i)
            for (int j = 0; j <= max_deg(); ++j)
                if (at(i, j) != 0.0) s += at(i, j) * std::pow(u, i) * std::pow(v, j);
        return s;
    }

    friend Poly2 operator*(const Poly2& a, const Poly2& b) {
        Poly2 r(a.max_deg() + b.max_deg());
        for (int i = 0; i <= a.max_deg(); ++i)
            for (int j = 0; j <= a.max_deg(); ++j) {
                if (a.at(i, j) == 0.0) continue;
                for (int k = 0; k <= b.max_deg(); ++k)
                    for (int l = 0; l <= b.max_deg(); ++l)
                        r.at(i + k, j + l) += a.at(i, j) * b.at(k, l);
            }
        return r;
    }

    friend Poly2 operator+(const Poly2& a, const Poly2& b) {
        Poly2 r(std::max(a.max_deg(), b.max_deg()));
        for (int i = 0; i <= r.max_deg(); ++i)
            for (int j = 0; j <= r.max_deg(); ++j) r.at(i, j) = a.at(i, j) + b.at(i, j);
        return r;
    }

    /// Taylor coefficient of (u-u0)^i (v-v0)^j at (u0, v0): recentred
    /// polynomial via binomial expansion (exact for polynomials).
    double taylor_coeff(int i, int j, double u0, double v0) const {
        double s = 0.0;
        for (int a = i; a <= max_deg(); ++a)
            for (int b = j; b <= max_deg(); ++b) {
                if (at(a, b) == 0.0) continue;
                s += at(a, b) * binom(a, i) * std::pow(u0, a - i) * binom(b, j) * std::pow(v0, b - j);
            }
        return s;
    }

    static double binom(int n, int k) {
        double r = 1.0;
        for (int m = 1; m <= k; ++m) r = r * (n - k + m) / m;
        return r;
    }
};

/// Jet of a polynomial at a base point, built from the recentring oracle.
inline fatlas::Jet2 poly_jet(const Poly2& p, int order, fatlas::Point2 base) {
    fatlas::Jet2 j(order, base);
    for (int i = 0; i <= order; ++i)
        for (int k = 0; i + k <= order; ++k) j.coeff(i, k) = p.taylor_coeff(i, k, base.u, base.v);
    return j;
}

inline Poly2 random_poly(std::mt19937_64& rng, int deg) {
    Poly2 p(deg);
    for (int i = 0; i <= deg; ++i)
        for (int j = 0; i + j <= deg; ++j)
            p.at(i, j) = static_cast<double>(static_cast<int>(rng() % 17) - 8) / 4.0;
    return p;
}

/// Central finite difference of order (i, j), Richardson-extrapolated twice:
/// the first-derivative stencil is exact for polynomials through degree 6,
/// and nesting keeps mixed partials exact up to roundoff.
inline double finite_difference(const std::function<double(double, double)>& f, double u, double v,
                                int i, int j, double step = 1.0 / 16.0) {
    auto d1 = [](const std::function<double(double)>& g, double x, double h) {
        auto central = [&](double hh) { return (g(x + hh) - g(x - hh)) / (2.0 * hh); };
        auto r1 = [&](double hh) { return (4.0 * central(hh / 2.0) - central(hh)) / 3.0; };
        return (16.0 * r1(h / 2.0) - r1(h)) / 15.0;
    };
    if (i > 0) {
        auto g = [&](double uu, double vv) {
            return d1([&](double x) { return f(x, vv); }, uu, step);
        };
        return finite_difference(g, u, v, i - 1, j, step);
    }
    if (j > 0) {
        auto g = [&](double uu, double vv) {
            return d1([&](double x) { return f(uu, x); }, vv, step);
        };
        return finite_difference(g, u, v, i, j - 1, step);
    }
    return f(u, v);
}

/// Random expression trees for round-trip checks. Constants are nonnegative
/// (negation is an explicit node), so printing parses back structurally.
inline fatlas::Expr::Ptr random_expr(std::mt19937_64& rng, int depth) {
    using E = fatlas::Expr;
    if (depth <= 0) {
        switch (rng() % 3) {
            case 0: return E::var_u();
            case 1: return E::var_v();
            default: return E::constant(static_cast<double>(rng() % 16) / 4.0);
        }
    }
    switch (rng() % 9) {
        case 0: return E::add(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
        case 1: return E::sub(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
        case 2: return E::mul(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
        case 3: return E::div(random_expr(rng, depth - 1),
                              E::add(E::constant(1.0 + static_cast<double>(rng() % 4)),
                                     E::mul(random_expr(rng, depth - 2 > 0 ? depth - 2 : 0),
                                            E::constant(0.125))));
        case 4: return E::neg(random_expr(rng, depth - 1));
        case 5: return E::call(E::Tag::sin_fn, random_expr(rng, depth - 1));
        case 6: return E::call(E::Tag::cos_fn, random_expr(rng, depth - 1));
        case 7: return E::pow(random_expr(rng, depth - 1), static_cast<int>(rng() % 4) + 1);
        default:
            return E::call(E::Tag::exp_fn, E::mul(E::constant(0.25), random_expr(rng, depth - 1)));
    }
}

/// Uniform random rotation (Marsaglia quaternion) as a 3x3 matrix.
inline std::array<std::array<double, 3>, 3> random_rotation(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    double q[4];
    double n2 = 0.0;
    do {
        n2 = 0.0;
        for (double& x : q) {
            x = unif(rng);
            n2 += x * x;
        }
    } while (n2 < 1e-4 || n2 > 1.0);
    double n = std::sqrt(n2);
    for (double& x : q) x /= n;
    double w = q[0], x = q[1], y = q[2], z = q[3];
    return {{{1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)},
             {2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)},
             {2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)}}};
}

/// Applies a rigid motion R f + t to a surface definition at the AST level.
inline fatlas::SurfaceDef rigid_motion(const fatlas::SurfaceDef& def,
                                       const std::array<std::array<double, 3>, 3>& R,
                                       const std::array<double, 3>& t) {
    using E = fatlas::Expr;
    fatlas::SurfaceDef out = def;
    for (int i = 0; i < 3; ++i) {
        E::Ptr comp = E::literal(t[static_cast<std::size_t>(i)]);
        for (int j = 0; j < 3; ++j) {
            double rij = R[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (rij == 0.0) continue;
            comp = E::add(comp, E::mul(E::literal(rij), def.components[static_cast<std::size_t>(j)]));
        }
        out.components[static_cast<std::size_t>(i)] = comp;
    }
    out.name = def.name + "_moved";
    return out;
}

/// Linear reparametrization f(au + bv, cu + dv) at the AST level.
inline fatlas::SurfaceDef linear_reparam(const fatlas::SurfaceDef& def, double a, double b, double c,
                                         double d) {
    using E = fatlas::Expr;
    auto lin = [](double s, double t) {
        return E::add(E::mul(E::literal(s), E::var_u()), E::mul(E::literal(t), E::var_v()));
    };
    fatlas::SurfaceDef out = def;
    out.declared_kind = fatlas::SurfaceKind::unknown;
    for (int i = 0; i < 3; ++i)
        out.components[static_cast<std::size_t>(i)] =
            substitute(def.components[static_cast<std::size_t>(i)], lin(a, b), lin(c, d));
    out.name = def.name + "_reparam";
    return out;
}

} // namespace oracle

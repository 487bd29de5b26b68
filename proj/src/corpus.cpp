#include "fatlas/corpus.hpp"

#include <cmath>
#include <random>
#include <string>

#include "fatlas/frame.hpp"

namespace fatlas {

namespace {

/// Dyadic coefficient in [-1, 1] with step 1/8: exact in binary and printable
/// through a round trip without loss.
double dyadic(std::mt19937_64& rng) { return static_cast<double>(static_cast<int>(rng() % 17) - 8) / 8.0; }

using Poly = std::vector<double>;  // coefficients, low degree first

double eval(const Poly& p, double u) {
    double r = 0.0;
    for (std::size_t k = p.size(); k-- > 0;) r = r * u + p[k];
    return r;
}

Poly derive(const Poly& p) {
    Poly d;
    for (std::size_t k = 1; k < p.size(); ++k) d.push_back(static_cast<double>(k) * p[k]);
    if (d.empty()) d.push_back(0.0);
    return d;
}

Expr::Ptr poly_ast(const Poly& p, const Expr::Ptr& var) {
    Expr::Ptr sum;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k] == 0.0) continue;
        Expr::Ptr term;
        if (k == 0) term = Expr::literal(p[k]);
        else {
            Expr::Ptr mono = (k == 1) ? var : Expr::pow(var, static_cast<int>(k));
            term = (p[k] == 1.0) ? mono : Expr::mul(Expr::literal(p[k]), mono);
        }
        sum = sum ? Expr::add(sum, term) : term;
    }
    return sum ? sum : Expr::constant(0.0);
}

struct VecPoly {
    Poly x, y, z;
    std::array<double, 3> at(double u) const { return {eval(x, u), eval(y, u), eval(z, u)}; }
};

SurfaceDef assemble_first_kind(const VecPoly& alpha, const VecPoly& beta, const VecPoly& gamma,
                               const Vec3& delta, const std::string& name) {
    SurfaceDef def;
    def.name = name;
    def.declared_kind = SurfaceKind::first_kind_adapted;
    def.domain = {-0.5, 0.5, -0.5, 0.5};
    def.order = 12;
    auto u = Expr::var_u();
    auto v = Expr::var_v();
    auto v2 = Expr::div(Expr::pow(v, 2), Expr::constant(2.0));
    auto v3 = Expr::div(Expr::pow(v, 3), Expr::constant(3.0));
    auto v4 = Expr::pow(v, 4);
    const Poly* as[3] = {&alpha.x, &alpha.y, &alpha.z};
    const Poly* bs[3] = {&beta.x, &beta.y, &beta.z};
    const Poly* gs[3] = {&gamma.x, &gamma.y, &gamma.z};
    for (int i = 0; i < 3; ++i) {
        Expr::Ptr comp = poly_ast(*as[i], u);
        comp = Expr::add(comp, Expr::mul(v2, poly_ast(*bs[i], u)));
        comp = Expr::add(comp, Expr::mul(v3, poly_ast(*gs[i], u)));
        if (delta[static_cast<std::size_t>(i)] != 0.0)
            comp = Expr::add(comp, Expr::mul(v4, Expr::literal(delta[static_cast<std::size_t>(i)])));
        def.components[static_cast<std::size_t>(i)] = comp;
    }
    return def;
}

} // namespace

SurfaceDef make_swallowtail_family(double a, double b) {
    SurfaceDef def;
    def.name = "swallowtail_family";
    def.declared_kind = SurfaceKind::second_kind_adapted;
    def.domain = {-0.5, 0.5, -0.5, 0.5};
    def.order = 12;
    auto u = Expr::var_u();
    auto v = Expr::var_v();
    // (v - 6u^2, u^2 v - 3u^4 + a v^3 + b v^4, 2uv - 8u^3)
    def.components[0] = Expr::sub(v, Expr::mul(Expr::constant(6.0), Expr::pow(u, 2)));
    Expr::Ptr y = Expr::sub(Expr::mul(Expr::pow(u, 2), v),
                            Expr::mul(Expr::constant(3.0), Expr::pow(u, 4)));
    if (a != 0.0) y = Expr::add(y, Expr::mul(Expr::literal(a), Expr::pow(v, 3)));
    if (b != 0.0) y = Expr::add(y, Expr::mul(Expr::literal(b), Expr::pow(v, 4)));
    def.components[1] = y;
    def.components[2] = Expr::sub(Expr::mul(Expr::constant(2.0), Expr::mul(u, v)),
                                  Expr::mul(Expr::constant(8.0), Expr::pow(u, 3)));
    return def;
}

std::vector<SurfaceDef> generate_corpus(std::uint64_t seed, int count, SurfaceKind kind) {
    if (count < 1) throw UsageError("corpus generation needs count >= 1");
    if (kind != SurfaceKind::first_kind_adapted && kind != SurfaceKind::second_kind_adapted)
        throw UsageError("corpus kind must be first or second");

    std::mt19937_64 rng(seed);
    std::vector<SurfaceDef> out;
    int attempts = 0;
    const int max_attempts = 400 + 200 * count;
    const double probes[5] = {-0.4, -0.2, 0.0, 0.2, 0.4};

    while (static_cast<int>(out.size()) < count) {
        if (++attempts > max_attempts)
            throw GenerationExhausted("corpus filters rejected too many candidates (seed " +
                                      std::to_string(seed) + ")");
        if (kind == SurfaceKind::second_kind_adapted) {
            double a = dyadic(rng);
            double b = dyadic(rng) / 2.0;
            if (a == 0.0) continue;
            SurfaceDef def = make_swallowtail_family(a, b);
            def.name = "swallowtail_s" + std::to_string(seed) + "_" + std::to_string(out.size());
            try {
                FrameData fr = build_frame(def, {0.0, 0.0}, 6);
                if (classify_front_point(fr).cls != SingularityClass::swallowtail) continue;
            } catch (const Error&) {
                continue;
            }
            out.push_back(std::move(def));
            continue;
        }

        VecPoly alpha{{0.0, 1.0}, {0.0, 0.0, dyadic(rng), dyadic(rng)}, {0.0, 0.0, dyadic(rng), dyadic(rng)}};
        VecPoly beta{{0.0, dyadic(rng), dyadic(rng)}, {1.0, dyadic(rng), dyadic(rng)},
                     {dyadic(rng), dyadic(rng), dyadic(rng)}};
        VecPoly gamma{{dyadic(rng), dyadic(rng)}, {dyadic(rng), dyadic(rng)},
                      {dyadic(rng), dyadic(rng)}};
        Vec3 delta = {dyadic(rng) / 2.0, dyadic(rng) / 2.0, dyadic(rng) / 2.0};

        VecPoly dalpha{derive(alpha.x), derive(alpha.y), derive(alpha.z)};
        bool ok = true;
        for (double up : probes) {
            Vec3 ap = dalpha.at(up), bp = beta.at(up), gp = gamma.at(up);
            if (norm(cross(ap, bp)) < 0.05 || std::abs(dot(cross(ap, bp), gp)) < 0.02) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;

        SurfaceDef def = assemble_first_kind(
            alpha, beta, gamma, delta,
            "first_kind_s" + std::to_string(seed) + "_" + std::to_string(out.size()));
        try {
            FrameData fr = build_frame(def, {0.0, 0.0}, 6);
            if (classify_front_point(fr).cls != SingularityClass::cuspidal_edge) continue;
        } catch (const Error&) {
            continue;
        }
        out.push_back(std::move(def));
    }
    return out;
}

} // namespace fatlas

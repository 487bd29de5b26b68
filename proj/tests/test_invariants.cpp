#include <doctest.h>

#include <cmath>
#include <random>

#include "fatlas/corpus.hpp"
#include "fatlas/fundamentals.hpp"
#include "oracle_helpers.hpp"
#include "test_surfaces.hpp"

using namespace fatlas;

namespace {

double bent_kappa_nu(double u) {
    double u6 = std::pow(u, 6);
    return 12.0 * u * u / (std::sqrt(1.0 + 16.0 * u6) * (1.0 + u * u + 16.0 * u6));
}

// cusp-directional torsion of the bent edge, from the frame formulas:
// M = 0 and F L = u * 12u^2 / sqrt(1+16u^6) on the axis.
double bent_kappa_t(double u) {
    double u6 = std::pow(u, 6);
    return -12.0 * u * u * u / ((1.0 + 16.0 * u6) * (1.0 + u * u + 16.0 * u6));
}

struct Geometry {
    FrameData fr;
    Fundamentals fund;
    InvariantSet inv;
};

Geometry at_axis(const SurfaceDef& def, double u0, int order = 6) {
    Geometry g{build_frame(def, {u0, 0.0}, order), {}, {}};
    g.fund = fundamentals(g.fr);
    g.inv = edge_invariants(g.fr, g.fund);
    return g;
}

} // namespace

TEST_SUITE_BEGIN("invariants");

TEST_CASE("fundamentals of the standard cuspidal edge at 0 are (1,0,4,0,0,3)") {
    Geometry g = at_axis(fixtures::std_edge(), 0.0);
    CHECK(g.fund.E.value() == doctest::Approx(1.0));
    CHECK(g.fund.F.value() == doctest::Approx(0.0));
    CHECK(g.fund.G.value() == doctest::Approx(4.0));
    CHECK(g.fund.L.value() == doctest::Approx(0.0));
    CHECK(g.fund.M.value() == doctest::Approx(0.0));
    CHECK(g.fund.N.value() == doctest::Approx(3.0));
}

TEST_CASE("fundamentals of the bent edge at 0 are (1,0,1,0,0,1)") {
    Geometry g = at_axis(fixtures::bent_edge(), 0.0);
    CHECK(g.fund.E.value() == doctest::Approx(1.0));
    CHECK(g.fund.F.value() == doctest::Approx(0.0));
    CHECK(g.fund.G.value() == doctest::Approx(1.0));
    CHECK(g.fund.L.value() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(g.fund.M.value() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(g.fund.N.value() == doctest::Approx(1.0));
}

TEST_CASE("flat frontal fundamentals (1,0,1,0,0,0): frontal but not front") {
    FrameData fr = build_frame(fixtures::flat_frontal(), {0.0, 0.0}, 6);
    Fundamentals fund = fundamentals(fr);
    CHECK(fund.E.value() == doctest::Approx(1.0));
    CHECK(fund.G.value() == doctest::Approx(1.0));
    CHECK(fund.N.value() == doctest::Approx(0.0));
    CHECK(!fr.is_front);
}

TEST_CASE("Christoffel decomposition residuals vanish") {
    for (const SurfaceDef& def :
         {fixtures::std_edge(), fixtures::bent_edge(), fixtures::twisted_flat_edge()}) {
        for (double u0 : {0.0, 0.2}) {
            Geometry g = at_axis(def, u0, 8);
            ModifiedChristoffel mc = christoffel_decompose(g.fr, g.fund);
            CHECK(mc.max_residual_value < 1e-10);
            CHECK(mc.max_residual_coeff < 1e-9);
        }
    }
}

TEST_CASE("Christoffel symbols of the flat frontal vanish at the origin") {
    FrameData fr = build_frame(fixtures::flat_frontal(), {0.0, 0.0}, 6);
    Fundamentals fund = fundamentals(fr);
    ModifiedChristoffel mc = christoffel_decompose(fr, fund);
    for (const Jet2* g : {&mc.G111, &mc.G211, &mc.G112, &mc.G212, &mc.G122, &mc.G222})
        CHECK(std::abs(g->value()) < 1e-12);
    CHECK(mc.max_residual_coeff < 1e-12);
}

TEST_CASE("E_v = 2v<f_u, h_u> as jets") {
    for (const SurfaceDef& def : {fixtures::bent_edge(), fixtures::std_edge()}) {
        Geometry g = at_axis(def, 0.1, 8);
        Jet2 lhs = g.fund.E.dv();
        Jet2 vj = Jet2::variable_v(lhs.order(), g.fr.p);
        Jet2 rhs = 2.0 * cmul(vj, dot(g.fr.f_u, du(g.fr.h)));
        CHECK(csub(lhs, rhs).max_abs_coeff() < 1e-10 * std::max(1.0, lhs.max_abs_coeff()));
    }
}

TEST_CASE("bent edge: kappa_s(0) = 1") {
    Geometry g = at_axis(fixtures::bent_edge(), 0.0);
    CHECK(g.inv.kappa_s == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("bent edge: kappa_nu matches its closed form along the axis") {
    for (double u0 : {-0.3, -0.1, 0.1, 0.3}) {
        Geometry g = at_axis(fixtures::bent_edge(), u0);
        CHECK(g.inv.kappa_nu.value() == doctest::Approx(bent_kappa_nu(u0)).epsilon(1e-8));
    }
    // at the origin the jet has a double zero with second derivative 24
    Geometry g0 = at_axis(fixtures::bent_edge(), 0.0);
    CHECK(std::abs(g0.inv.kappa_nu.coeff(0)) < 1e-12);
    CHECK(std::abs(g0.inv.kappa_nu.coeff(1)) < 1e-12);
    CHECK(g0.inv.kappa_nu.derivative(2) == doctest::Approx(24.0).epsilon(1e-10));
}

TEST_CASE("bent edge: kappa_t vanishes at the origin but not along the axis") {
    Geometry g0 = at_axis(fixtures::bent_edge(), 0.0);
    CHECK(std::abs(g0.inv.kappa_t.value()) < 1e-12);
    // leading term -12u^3
    CHECK(g0.inv.kappa_t.coeff(1) == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(g0.inv.kappa_t.coeff(2) == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(g0.inv.kappa_t.coeff(3) == doctest::Approx(-12.0).epsilon(1e-9));
    for (double u0 : {0.1, 0.2, 0.3, 0.5}) {
        Geometry g = at_axis(fixtures::bent_edge(), u0);
        CHECK(g.inv.kappa_t.value() == doctest::Approx(bent_kappa_t(u0)).epsilon(1e-9));
    }
}

TEST_CASE("standard cuspidal edge: kappa_c(0) = 3/sqrt(2), kappa_nu and kappa_t vanish") {
    Geometry g = at_axis(fixtures::std_edge(), 0.0);
    CHECK(g.inv.kappa_c == doctest::Approx(3.0 / std::sqrt(2.0)).epsilon(1e-10));
    CHECK(g.inv.kappa_nu.max_abs_coeff() < 1e-12);
    CHECK(g.inv.kappa_t.max_abs_coeff() < 1e-12);
    CHECK(g.inv.kappa_s == doctest::Approx(0.0));
}

TEST_CASE("twisted flat edge: kappa_t = 1, kappa_s = 0, kappa_nu = 0 on the axis") {
    for (double u0 : {0.0, 0.25}) {
        Geometry g = at_axis(fixtures::twisted_flat_edge(), u0);
        CHECK(g.inv.kappa_t.value() == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(std::abs(g.inv.kappa_s) < 1e-10);
        CHECK(g.inv.kappa_nu.max_abs_coeff() < 1e-10);
        CHECK(g.inv.kappa_c == doctest::Approx(2.0).epsilon(1e-10));
    }
}

TEST_CASE("kappa_i identity: kappa_i = kappa_t kappa_s + kappa_nu' / sqrt(E)") {
    auto check_identity = [](const SurfaceDef& def, double u0) {
        Geometry g = at_axis(def, u0, 8);
        Jet1 sqrtE = restrict_to_axis(sqrt(g.fund.E));
        int n = std::min({g.inv.kappa_i.order(), g.inv.kappa_t.order(),
                          g.inv.kappa_s_axis.order(), g.inv.kappa_nu.order() - 1});
        Jet1 lhs = g.inv.kappa_i.truncated(n);
        Jet1 rhs = g.inv.kappa_t.truncated(n) * g.inv.kappa_s_axis.truncated(n) +
                   g.inv.kappa_nu.differentiate().truncated(n) / sqrtE.truncated(n);
        Jet1 res = lhs - rhs;
        double scale = std::max(1.0, std::max(lhs.max_abs_coeff(), rhs.max_abs_coeff()));
        CHECK(res.max_abs_coeff() < 1e-8 * scale);
    };
    check_identity(fixtures::bent_edge(), 0.0);
    check_identity(fixtures::bent_edge(), 0.2);
    check_identity(fixtures::std_edge(), 0.1);
    check_identity(fixtures::twisted_flat_edge(), 0.1);
    for (const SurfaceDef& def : generate_corpus(17, 6, SurfaceKind::first_kind_adapted))
        check_identity(def, 0.0);
}

TEST_CASE("bent edge: godron-style derived values kappa_i'(0) = 24") {
    Geometry g = at_axis(fixtures::bent_edge(), 0.0);
    CHECK(g.inv.kappa_i.derivative(1) == doctest::Approx(24.0).epsilon(1e-8));
}

TEST_CASE("normalized cuspidal curvature of second-kind fronts") {
    FrameData fr = build_frame(fixtures::swallowtail_g(), {0.0, 0.0}, 6);
    Fundamentals fund = fundamentals(fr);
    InvariantSet inv = edge_invariants(fr, fund);
    REQUIRE(inv.mu_c.has_value());
    CHECK(*inv.mu_c == doctest::Approx(0.5).epsilon(1e-10));

    FrameData fr2 = build_frame(fixtures::second_kind_flat_eps(), {0.0, 0.0}, 6);
    Fundamentals fund2 = fundamentals(fr2);
    InvariantSet inv2 = edge_invariants(fr2, fund2);
    REQUIRE(inv2.mu_c.has_value());
    CHECK(*inv2.mu_c == doctest::Approx(-2.0).epsilon(1e-10));
}

TEST_CASE("kind mismatches in the invariant layer") {
    FrameData fr = build_frame(fixtures::plane(), {0.0, 0.0}, 6);
    CHECK_THROWS_AS(fundamentals(fr), KindMismatch);
    FrameData st = build_frame(fixtures::swallowtail_g(), {0.0, 0.0}, 6);
    Fundamentals fund = fundamentals(st);
    CHECK_THROWS_AS(christoffel_decompose(st, fund), KindMismatch);
}

TEST_CASE("rigid motions preserve the edge invariants") {
    std::mt19937_64 rng(99);
    for (const SurfaceDef& base : {fixtures::bent_edge(), fixtures::std_edge()}) {
        Geometry ref = at_axis(base, 0.1);
        for (int trial = 0; trial < 10; ++trial) {
            auto R = oracle::random_rotation(rng);
            std::array<double, 3> t = {0.25 * static_cast<double>(static_cast<int>(rng() % 9) - 4),
                                       0.25 * static_cast<double>(static_cast<int>(rng() % 9) - 4),
                                       0.25 * static_cast<double>(static_cast<int>(rng() % 9) - 4)};
            SurfaceDef moved = oracle::rigid_motion(base, R, t);
            Geometry got = at_axis(moved, 0.1);
            CHECK(got.inv.kappa_s == doctest::Approx(ref.inv.kappa_s).epsilon(1e-8));
            CHECK(got.inv.kappa_nu.value() == doctest::Approx(ref.inv.kappa_nu.value()).epsilon(1e-8));
            CHECK(std::abs(got.inv.kappa_c) == doctest::Approx(std::abs(ref.inv.kappa_c)).epsilon(1e-8));
            CHECK(std::abs(got.inv.kappa_t.value()) ==
                  doctest::Approx(std::abs(ref.inv.kappa_t.value())).epsilon(1e-8));
        }
    }
    // mu_c under rigid motion of the adapted swallowtail
    SurfaceDef st = fixtures::swallowtail_g();
    FrameData fr = build_frame(st, {0.0, 0.0}, 6);
    InvariantSet ref = edge_invariants(fr, fundamentals(fr));
    for (int trial = 0; trial < 10; ++trial) {
        SurfaceDef moved = oracle::rigid_motion(st, oracle::random_rotation(rng), {0.5, -0.25, 0.125});
        FrameData fm = build_frame(moved, {0.0, 0.0}, 6);
        InvariantSet got = edge_invariants(fm, fundamentals(fm));
        CHECK(*got.mu_c == doctest::Approx(*ref.mu_c).epsilon(1e-8));
    }
}

TEST_SUITE_END();

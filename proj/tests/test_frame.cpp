#include <doctest.h>

#include <cmath>

#include "fatlas/frame.hpp"
#include "test_surfaces.hpp"

using namespace fatlas;

namespace {

Vec3 bent_edge_normal(double u, double v) {
    double n1 = -4.0 * u * u * u + u * v;
    double w = std::sqrt(1.0 + v * v + n1 * n1);
    return {n1 / w, -v / w, 1.0 / w};
}

void check_frame_orthonormal(const FrameData& fr) {
    Jet2 unit = dot(fr.nu, fr.nu) - 1.0;
    CHECK(unit.max_abs_coeff() < 1e-10);
    double scale = std::max(1.0, max_abs_coeff(fr.f_u));
    CHECK(dot(fr.nu, fr.f_u).max_abs_coeff() < 1e-10 * scale);
    CHECK(dot(fr.nu, fr.f_v).max_abs_coeff() < 1e-10 * scale);
}

} // namespace

TEST_SUITE_BEGIN("frame");

TEST_CASE("plane: regular frame with lambda = 1 and nu = (0,0,1)") {
    FrameData fr = build_frame(fixtures::plane(), {0.0, 0.0}, 6);
    CHECK(fr.kind == Kind::regular);
    CHECK(fr.is_front);
    CHECK(fr.lambda.value() == doctest::Approx(1.0));
    CHECK(fr.lambda.max_abs_coeff() == doctest::Approx(1.0));  // constant jet
    CHECK(fr.nu[2].value() == doctest::Approx(1.0));
    CHECK(classify_front_point(fr).cls == SingularityClass::regular);
}

TEST_CASE("standard cuspidal edge frame at the origin") {
    FrameData fr = build_frame(fixtures::std_edge(), {0.0, 0.0}, 6);
    CHECK(fr.kind == Kind::first_kind);
    CHECK(fr.is_front);
    // h = (0, 2, 3v)
    CHECK(fr.h[1].value() == doctest::Approx(2.0));
    CHECK(fr.h[2].coeff(0, 1) == doctest::Approx(3.0));
    // nu = (0, -3v, 2)/sqrt(4+9v^2)
    CHECK(fr.nu[2].value() == doctest::Approx(1.0));
    CHECK(fr.nu[1].partial(0, 1) == doctest::Approx(-3.0 / 2.0));
    check_frame_orthonormal(fr);
    // f_v - v h vanishes identically at the jet level
    Jet2 vj = Jet2::variable_v(fr.h[0].order() + 1, fr.p);
    for (int i = 0; i < 3; ++i) {
        Jet2 res = csub(fr.f_v[static_cast<std::size_t>(i)],
                        cmul(vj, fr.h[static_cast<std::size_t>(i)]));
        CHECK(res.max_abs_coeff() < 1e-12 * std::max(1.0, max_abs_coeff(fr.f_v)));
    }

    ClassifyResult cls = classify_front_point(fr);
    CHECK(cls.cls == SingularityClass::cuspidal_edge);
    CHECK(cls.eta_lambda == doctest::Approx(2.0));  // lambda_v(0) = |f_u x h| = 2
}

TEST_CASE("bent edge: computed normal matches the closed form at 20 points") {
    SurfaceDef def = fixtures::bent_edge();
    int checked = 0;
    for (double u : {-0.4, -0.2, 0.0, 0.2, 0.4}) {
        for (double v : {-0.3, 0.0, 0.2, 0.4}) {
            FrameData fr = (v == 0.0) ? build_frame(def, {u, 0.0}, 6)
                                      : extend_frame_off_axis(def, {u, v}, 6);
            Vec3 nu_c = value(fr.nu);
            Vec3 nu_p = bent_edge_normal(u, v);
            CHECK(std::abs(dot(nu_c, nu_p)) == doctest::Approx(1.0).epsilon(1e-12));
            check_frame_orthonormal(fr);
            ++checked;
        }
    }
    CHECK(checked == 20);
}

TEST_CASE("bent edge classifies as a cuspidal edge with vanishing axis lambda") {
    FrameData fr = build_frame(fixtures::bent_edge(), {0.0, 0.0}, 6);
    CHECK(fr.kind == Kind::first_kind);
    CHECK(classify_front_point(fr).cls == SingularityClass::cuspidal_edge);
    CHECK(restrict_to_axis(fr.lambda).max_abs_coeff() < 1e-12);
}

TEST_CASE("adapted swallowtail: frame data at the origin") {
    FrameData fr = build_frame(fixtures::swallowtail_g(), {0.0, 0.0}, 6);
    CHECK(fr.kind == Kind::second_kind);
    CHECK(fr.is_front);
    // eps(u) = 12u exactly
    CHECK(fr.eps.value() == 0.0);
    CHECK(fr.eps.coeff(1) == doctest::Approx(12.0).epsilon(1e-12));
    for (int k = 2; k <= 4; ++k) CHECK(std::abs(fr.eps.coeff(k)) < 1e-10);
    // h(0) = (0, 0, 2), nu(0) = (0, 1, 0)
    CHECK(fr.h[0].value() == doctest::Approx(0.0));
    CHECK(fr.h[1].value() == doctest::Approx(0.0));
    CHECK(fr.h[2].value() == doctest::Approx(2.0));
    CHECK(fr.nu[1].value() == doctest::Approx(1.0));
    check_frame_orthonormal(fr);

    // f_u + eps f_v - v h vanishes on the axis expansion
    Jet2 eps2 = jet2_from_axis(fr.eps, fr.h[0].order() + 1, fr.p);
    Jet2 vj = Jet2::variable_v(fr.h[0].order() + 1, fr.p);
    Vec3J res = (fr.f_u + eps2 * fr.f_v) - (vj * fr.h);
    CHECK(max_abs_coeff(res) < 1e-10 * std::max(1.0, max_abs_coeff(fr.f_u)));

    ClassifyResult cls = classify_front_point(fr);
    CHECK(cls.cls == SingularityClass::swallowtail);
    CHECK(std::abs(cls.eta_lambda) < 1e-10);
    CHECK(cls.eta_eta_lambda != 0.0);
    CHECK(std::abs(cls.dlambda_v) > 1.0);  // lambda_v(0) = |h x f_v| = 2
}

TEST_CASE("flat frontal is first kind but not a front") {
    FrameData fr = build_frame(fixtures::flat_frontal(), {0.0, 0.0}, 6);
    CHECK(fr.kind == Kind::first_kind);
    CHECK(!fr.is_front);
    CHECK(classify_front_point(fr).cls == SingularityClass::nondeg_first_kind);
}

TEST_CASE("second kind with eps'(0) = 0 is not a swallowtail") {
    FrameData fr = build_frame(fixtures::second_kind_flat_eps(), {0.0, 0.0}, 6);
    CHECK(fr.kind == Kind::second_kind);
    CHECK(fr.is_front);
    CHECK(fr.eps.value() == 0.0);
    CHECK(fr.eps.coeff(1) == doctest::Approx(0.0));
    CHECK(fr.eps.coeff(2) == doctest::Approx(3.0).epsilon(1e-10));
    ClassifyResult cls = classify_front_point(fr);
    CHECK(cls.cls == SingularityClass::nondeg_second_kind);
    CHECK(std::abs(cls.eta_eta_lambda) < 1e-8);
}

TEST_CASE("declared-kind violations are reported") {
    // regular point under a declared singular kind
    SurfaceDef decl = parse_surface("kind = first\nf = (u, v, v^2)");
    CHECK_THROWS_AS(build_frame(decl, {0.0, 0.0}, 6), NotSingular);
    // declared first kind, actually second
    SurfaceDef wrong = fixtures::swallowtail_g();
    wrong.declared_kind = SurfaceKind::first_kind_adapted;
    CHECK_THROWS_AS(build_frame(wrong, {0.0, 0.0}, 6), AdaptedCoordinateViolation);
    // singular point off the axis: the edge sits on v = 1/4
    SurfaceDef off = parse_surface(
        "kind = unknown\nf = (u, (v - 1/4)^2, (v - 1/4)^3)\ndomain = [-1,1]x[-1,1]");
    CHECK_THROWS_AS(build_frame(off, {0.0, 0.25}, 6), AdaptedCoordinateViolation);
    // corank-2 point
    SurfaceDef cone = parse_surface("kind = unknown\nf = (u^2, u*v, v^2)");
    CHECK_THROWS_AS(build_frame(cone, {0.0, 0.0}, 6), DegenerateFrame);
}

TEST_CASE("off-axis extension keeps the normal smooth across the axis") {
    SurfaceDef def = fixtures::std_edge();
    FrameData on = build_frame(def, {0.1, 0.0}, 6);
    for (double v : {0.05, -0.05}) {
        FrameData off = extend_frame_off_axis(def, {0.1, v}, 6);
        CHECK(dot(value(on.nu), value(off.nu)) > 0.9);  // no orientation flip
        check_frame_orthonormal(off);
    }
}

TEST_SUITE_END();

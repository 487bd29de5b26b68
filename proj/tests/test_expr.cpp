#include <doctest.h>

#include <random>

#include "fatlas/expr.hpp"
#include "oracle_helpers.hpp"

using namespace fatlas;

TEST_SUITE_BEGIN("expr");

TEST_CASE("parses the bent cuspidal edge source") {
    SurfaceDef def = parse_surface("f = (u, u^2/2 + v^2/2, v^3/3 + u^4)");
    CHECK(def.components[0]->tag == Expr::Tag::var_u);
    CHECK(eval_point(def.components[1], 2.0, 3.0) == doctest::Approx(2.0 + 4.5));
    CHECK(eval_point(def.components[2], 1.0, 3.0) == doctest::Approx(10.0));
}

TEST_CASE("parses the standard cuspidal edge") {
    SurfaceDef def = parse_surface("f = (u, v^2, v^3)");
    CHECK(def.components[1]->tag == Expr::Tag::pow);
    CHECK(def.components[1]->exponent == 2);
}

TEST_CASE("reports position and expectation on a truncated tuple") {
    CHECK_THROWS_WITH_AS(parse_surface("f = (u, v"), doctest::Contains("expected ','"),
                         SyntaxError);
}

TEST_CASE("unknown identifiers and bad exponents") {
    CHECK_THROWS_AS(parse_surface("f = (w, v, u)"), UnknownIdentifier);
    CHECK_THROWS_AS(parse_surface("f = (u^2.5, v, u)"), NonIntegerExponent);
    CHECK_THROWS_AS(parse_surface("f = (u^2^3, v, u)"), SyntaxError);
    CHECK_THROWS_AS(parse_surface("f = (tan(u), v, u)"), UnknownIdentifier);
}

TEST_CASE("precedence: ^ binds tighter than unary minus and products") {
    Expr::Ptr e = parse_expr_text("-u^2");
    CHECK(e->tag == Expr::Tag::neg);
    CHECK(e->lhs->tag == Expr::Tag::pow);
    CHECK(eval_point(parse_expr_text("2*u^2"), 3.0, 0.0) == doctest::Approx(18.0));
    CHECK(eval_point(parse_expr_text("u^-2"), 2.0, 0.0) == doctest::Approx(0.25));
    CHECK(eval_point(parse_expr_text("1 - 2 - 3"), 0.0, 0.0) == doctest::Approx(-4.0));
    CHECK(eval_point(parse_expr_text("8 / 4 / 2"), 0.0, 0.0) == doctest::Approx(1.0));
}

TEST_CASE("surface headers: name, kind, domain, order, comments, CRLF") {
    SurfaceDef def = parse_surface(
        "# sample\r\nname = demo\r\nkind = first\r\ndomain = [-0.5,0.5]x[-0.25,0.25]\r\n"
        "order = 8\r\nf = (u, v^2, v^3)\r\n");
    CHECK(def.name == "demo");
    CHECK(def.declared_kind == SurfaceKind::first_kind_adapted);
    CHECK(def.domain.u_min == doctest::Approx(-0.5));
    CHECK(def.domain.v_max == doctest::Approx(0.25));
    CHECK(def.order == 8);
    CHECK_THROWS_AS(parse_surface("name = x"), InvalidSurface);        // missing f
    CHECK_THROWS_AS(parse_surface("f = (u, v, u)\norder = 3"), InvalidSurface);
    CHECK_THROWS_AS(parse_surface("kind = both\nf = (u, v, u)"), InvalidSurface);
}

TEST_CASE("print/parse round trip on hand-written sources") {
    for (const char* src :
         {"f = (u, u^2/2 + v^2/2, v^3/3 + u^4)", "f = (u, v^2, v^3)",
          "f = (sqrt(4 + u^2), -v*sin(u), exp(u)*cos(v) - 1.5)"}) {
        SurfaceDef def = parse_surface(src);
        SurfaceDef again = parse_surface(print_surface(def));
        for (int i = 0; i < 3; ++i)
            CHECK(structurally_equal(def.components[static_cast<std::size_t>(i)],
                                     again.components[static_cast<std::size_t>(i)]));
    }
}

TEST_CASE("print/parse round trip on randomized trees") {
    std::mt19937_64 rng(2024);
    for (int seed_case = 0; seed_case < 100; ++seed_case) {
        Expr::Ptr e = oracle::random_expr(rng, 3);
        Expr::Ptr back = parse_expr_text(print_expr(e));
        CHECK(structurally_equal(e, back));
    }
}

TEST_CASE("eval_jets on the standard cuspidal edge is exact") {
    SurfaceDef def = parse_surface("f = (u, v^2, v^3)");
    Vec3J j = eval_jets(def, {0.0, 0.0}, 3);
    CHECK(j[0].coeff(1, 0) == 1.0);
    CHECK(j[1].coeff(0, 2) == 1.0);
    CHECK(j[1].coeff(0, 1) == 0.0);
    CHECK(j[2].coeff(0, 3) == 1.0);
}

TEST_CASE("eval_jets picks up the quartic term of the bent edge") {
    SurfaceDef def = parse_surface("f = (u, u^2/2 + v^2/2, v^3/3 + u^4)");
    Vec3J j = eval_jets(def, {0.0, 0.0}, 4);
    CHECK(j[2].coeff(4, 0) == doctest::Approx(1.0));
    CHECK(j[2].coeff(0, 3) == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("jet evaluation matches recursive pointwise evaluation") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        Expr::Ptr e = oracle::random_expr(rng, 3);
        double u = 0.25 * (static_cast<double>(rng() % 9) - 4.0) / 4.0;
        double v = 0.25 * (static_cast<double>(rng() % 9) - 4.0) / 4.0;
        double direct;
        try {
            direct = eval_point(e, u, v);
        } catch (const DomainError&) {
            continue;
        }
        Jet2 j = eval_jet(e, 4, {u, v});
        CHECK(j.value() == doctest::Approx(direct).epsilon(1e-12));
    }
}

TEST_CASE("domain and order guards") {
    SurfaceDef def = parse_surface("domain = [-1,1]x[-1,1]\norder = 6\nf = (u, v^2, v^3)");
    CHECK_THROWS_AS(eval_jets(def, {2.0, 0.0}, 4), PointOutsideDomain);
    CHECK_THROWS_AS(eval_jets(def, {0.0, 0.0}, 7), OrderExceeded);
    SurfaceDef sq = parse_surface("f = (sqrt(u), v, u)");
    CHECK_THROWS_AS(eval_jets(sq, {-0.5, 0.0}, 4), DomainError);
    SurfaceDef dv = parse_surface("f = (1/u, v, u)");
    CHECK_THROWS_AS(eval_jets(dv, {0.0, 0.0}, 4), DomainError);
}

TEST_CASE("substitution composes at the AST level") {
    Expr::Ptr e = parse_expr_text("u^2 - v");
    Expr::Ptr s = substitute(e, parse_expr_text("u + v"), parse_expr_text("2*v"));
    CHECK(eval_point(s, 1.0, 3.0) == doctest::Approx(16.0 - 6.0));
}

TEST_SUITE_END();

#pragma once

#include <array>
#include <memory>
#include <string>

#include "fatlas/config.hpp"
#include "fatlas/jet.hpp"
#include "fatlas/vec3.hpp"

namespace fatlas {

/// Expression AST for surface components. Trees are immutable and shared;
/// exponents of ^ are integer literals fixed at parse time.
class Expr {
public:
    enum class Tag { constant, var_u, var_v, neg, sqrt_fn, sin_fn, cos_fn, exp_fn, add, sub, mul, div, pow };

    using Ptr = std::shared_ptr<const Expr>;

    Tag tag;
    double cvalue = 0.0;   // constant
    int exponent = 0;      // pow
    Ptr lhs, rhs;          // children (lhs only for unary)

    static Ptr constant(double c);
    static Ptr var_u();
    static Ptr var_v();
    static Ptr neg(Ptr a);
    static Ptr call(Tag fn, Ptr a);
    static Ptr add(Ptr a, Ptr b);
    static Ptr sub(Ptr a, Ptr b);
    static Ptr mul(Ptr a, Ptr b);
    static Ptr div(Ptr a, Ptr b);
    static Ptr pow(Ptr a, int k);

    /// Constant node for any real: negative values become neg(|c|) so that
    /// printed output parses back to a structurally identical tree.
    static Ptr literal(double c);
};

bool structurally_equal(const Expr::Ptr& a, const Expr::Ptr& b);

/// Substitutes expressions for the variables u and v.
Expr::Ptr substitute(const Expr::Ptr& e, const Expr::Ptr& for_u, const Expr::Ptr& for_v);

double eval_point(const Expr::Ptr& e, double u, double v);
Jet2 eval_jet(const Expr::Ptr& e, int order, Point2 p);

std::string print_expr(const Expr::Ptr& e);

/// Parses a single expression (used by tests and programmatic callers).
Expr::Ptr parse_expr_text(const std::string& text);

enum class SurfaceKind { first_kind_adapted, second_kind_adapted, regular, unknown };

struct Domain {
    double u_min = -1.0, u_max = 1.0;
    double v_min = -1.0, v_max = 1.0;
    bool contains(Point2 p) const {
        return p.u >= u_min && p.u <= u_max && p.v >= v_min && p.v <= v_max;
    }
    double scale() const { return std::max(u_max - u_min, v_max - v_min); }
};

/// A parsed surface definition f(u,v) = (X, Y, Z) plus metadata. `order` is
/// the maximum jet order evaluations may request (>= 4).
struct SurfaceDef {
    std::string name = "surface";
    std::array<Expr::Ptr, 3> components;
    SurfaceKind declared_kind = SurfaceKind::unknown;
    Domain domain;
    int order = 12;
};

/// Parses surface source text: header lines `name = ...`, `kind = ...`,
/// `domain = [a,b]x[c,d]`, `order = N`, and a required `f = (X, Y, Z)`.
/// `#` starts a comment; blank lines are ignored; LF and CRLF both accepted.
SurfaceDef parse_surface(const std::string& text);

std::string print_surface(const SurfaceDef& def);

SurfaceDef load_surface_file(const std::string& path);

/// Component jets of the surface at p. Throws PointOutsideDomain when p is
/// not in the declared domain and OrderExceeded when order > def.order.
Vec3J eval_jets(const SurfaceDef& def, Point2 p, int order);

Vec3 eval_components(const SurfaceDef& def, double u, double v);

} // namespace fatlas

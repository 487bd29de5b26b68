#pragma once

#include <vector>

#include "fatlas/errors.hpp"

namespace fatlas {

struct Point2 {
    double u = 0.0;
    double v = 0.0;
    friend bool operator==(const Point2&, const Point2&) = default;
};

/// Truncated Taylor expansion of a univariate scalar field. Coefficients are
/// stored in normalized form: coeffs[k] = g^(k)(u0) / k!.
class Jet1 {
public:
    Jet1() = default;
    Jet1(int order, double base);
    static Jet1 constant(int order, double base, double value);
    static Jet1 variable(int order, double base);

    int order() const { return order_; }
    double base() const { return base_; }
    double coeff(int k) const { return c_[static_cast<std::size_t>(k)]; }
    double& coeff(int k) { return c_[static_cast<std::size_t>(k)]; }
    double value() const { return c_[0]; }

    /// k-th derivative value at the base point, i.e. k! * coeff(k).
    double derivative(int k) const;
    double max_abs_coeff() const;

    Jet1 truncated(int new_order) const;
    Jet1 differentiate() const;

    friend Jet1 operator+(const Jet1& a, const Jet1& b);
    friend Jet1 operator-(const Jet1& a, const Jet1& b);
    friend Jet1 operator*(const Jet1& a, const Jet1& b);
    friend Jet1 operator/(const Jet1& a, const Jet1& b);
    friend Jet1 operator-(const Jet1& a);
    friend Jet1 operator*(double s, const Jet1& a);

private:
    int order_ = 0;
    double base_ = 0.0;
    std::vector<double> c_ = {0.0};
};

Jet1 sqrt(const Jet1& a);

/// Truncated bivariate Taylor expansion at a base point: the numeric carrier
/// for every partial derivative in the pipeline. coeffs(i,j) holds
/// (d^{i+j} g / du^i dv^j)(p) / (i! j!) for i + j <= order. Values are
/// immutable in practice: all operations build fresh jets.
class Jet2 {
public:
    Jet2() = default;
    Jet2(int order, Point2 base);
    static Jet2 constant(int order, Point2 base, double value);
    static Jet2 variable_u(int order, Point2 base);
    static Jet2 variable_v(int order, Point2 base);

    int order() const { return order_; }
    Point2 base() const { return base_; }
    double coeff(int i, int j) const { return c_[index(i, j)]; }
    double& coeff(int i, int j) { return c_[index(i, j)]; }
    double value() const { return c_[0]; }

    /// Raw partial derivative (d^{i+j} g / du^i dv^j)(p) = i! j! coeff(i,j).
    /// Throws OrderExceeded when i + j > order.
    double partial(int i, int j) const;

    double max_abs_coeff() const;
    Jet2 truncated(int new_order) const;
    Jet2 du() const;
    Jet2 dv() const;

    /// Polynomial evaluation of the jet at base + (du, dv).
    double eval_offset(double du, double dv) const;

    friend Jet2 operator+(const Jet2& a, const Jet2& b);
    friend Jet2 operator-(const Jet2& a, const Jet2& b);
    friend Jet2 operator*(const Jet2& a, const Jet2& b);
    friend Jet2 operator/(const Jet2& a, const Jet2& b);
    friend Jet2 operator-(const Jet2& a);
    friend Jet2 operator+(const Jet2& a, double s);
    friend Jet2 operator+(double s, const Jet2& a);
    friend Jet2 operator-(const Jet2& a, double s);
    friend Jet2 operator*(double s, const Jet2& a);
    friend Jet2 operator*(const Jet2& a, double s);
    friend Jet2 operator/(const Jet2& a, double s);

private:
    std::size_t index(int i, int j) const;
    static std::size_t size_for(int order);

    int order_ = 0;
    Point2 base_{};
    std::vector<double> c_ = {0.0};
};

// Elementary functions via composition with the univariate series. sqrt
// requires a positive constant term, recip a nonzero one.
Jet2 sqrt(const Jet2& a);
Jet2 recip(const Jet2& a);
Jet2 sin(const Jet2& a);
Jet2 cos(const Jet2& a);
Jet2 exp(const Jet2& a);
Jet2 pow_int(const Jet2& a, int k);

/// Dyadic-rational power x^(num/2^s) of a jet with positive constant term,
/// assembled from integer powers and repeated square roots.
Jet2 pow_dyadic(const Jet2& a, int num, int sqrt_count);

/// Quotient by the coordinate v for jets based on the axis (base v = 0).
/// Requires every coefficient with j = 0 to vanish within tol_rel times the
/// largest coefficient magnitude; the result has order reduced by one.
Jet2 divide_out_v(const Jet2& a, double tol_rel = 1e-12);

/// Restriction u -> g(u, v0): keeps the j = 0 coefficients.
Jet1 restrict_to_axis(const Jet2& a);

} // namespace fatlas

#include "fatlas/jet.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fatlas {

namespace {

double factorial(int n) {
    double r = 1.0;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

void require_same_shape_1(const Jet1& a, const Jet1& b) {
    if (a.order() != b.order() || a.base() != b.base())
        throw JetShapeMismatch("univariate jets differ in order or base point");
}

} // namespace

// ---------------------------------------------------------------------------
// Jet1

Jet1::Jet1(int order, double base)
    : order_(order), base_(base), c_(static_cast<std::size_t>(order) + 1, 0.0) {}

Jet1 Jet1::constant(int order, double base, double value) {
    Jet1 j(order, base);
    j.c_[0] = value;
    return j;
}

Jet1 Jet1::variable(int order, double base) {
    Jet1 j(order, base);
    j.c_[0] = base;
    if (order >= 1) j.c_[1] = 1.0;
    return j;
}

double Jet1::derivative(int k) const {
    if (k > order_) throw OrderExceeded("derivative " + std::to_string(k) +
                                        " of univariate jet of order " + std::to_string(order_));
    return factorial(k) * c_[static_cast<std::size_t>(k)];
}

double Jet1::max_abs_coeff() const {
    double m = 0.0;
    for (double x : c_) m = std::max(m, std::abs(x));
    return m;
}

Jet1 Jet1::truncated(int new_order) const {
    if (new_order > order_) throw OrderExceeded("cannot raise univariate jet order");
    Jet1 r(new_order, base_);
    std::copy(c_.begin(), c_.begin() + new_order + 1, r.c_.begin());
    return r;
}

Jet1 Jet1::differentiate() const {
    if (order_ == 0) return Jet1(0, base_);
    Jet1 r(order_ - 1, base_);
    for (int k = 1; k <= order_; ++k)
        r.c_[static_cast<std::size_t>(k - 1)] = k * c_[static_cast<std::size_t>(k)];
    return r;
}

Jet1 operator+(const Jet1& a, const Jet1& b) {
    require_same_shape_1(a, b);
    Jet1 r = a;
    for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] += b.c_[k];
    return r;
}

Jet1 operator-(const Jet1& a, const Jet1& b) {
    require_same_shape_1(a, b);
    Jet1 r = a;
    for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] -= b.c_[k];
    return r;
}

Jet1 operator*(const Jet1& a, const Jet1& b) {
    require_same_shape_1(a, b);
    Jet1 r(a.order_, a.base_);
    for (int i = 0; i <= a.order_; ++i)
        for (int j = 0; i + j <= a.order_; ++j)
            r.c_[static_cast<std::size_t>(i + j)] +=
                a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
    return r;
}

Jet1 operator/(const Jet1& a, const Jet1& b) {
    require_same_shape_1(a, b);
    if (b.c_[0] == 0.0) throw DivisionBySingularJet("univariate divisor has zero constant term");
    Jet1 q(a.order_, a.base_);
    for (int k = 0; k <= a.order_; ++k) {
        double s = a.c_[static_cast<std::size_t>(k)];
        for (int m = 0; m < k; ++m)
            s -= q.c_[static_cast<std::size_t>(m)] * b.c_[static_cast<std::size_t>(k - m)];
        q.c_[static_cast<std::size_t>(k)] = s / b.c_[0];
    }
    return q;
}

Jet1 operator-(const Jet1& a) {
    Jet1 r = a;
    for (double& x : r.c_) x = -x;
    return r;
}

Jet1 operator*(double s, const Jet1& a) {
    Jet1 r = a;
    for (double& x : r.c_) x *= s;
    return r;
}

Jet1 sqrt(const Jet1& a) {
    if (a.value() <= 0.0) throw DomainError("sqrt of univariate jet with non-positive constant term");
    // d_k = binom(1/2, k) a0^(1/2 - k), accumulated over powers of (a - a0).
    int n = a.order();
    Jet1 w = a - Jet1::constant(n, a.base(), a.value());
    Jet1 sum = Jet1::constant(n, a.base(), std::sqrt(a.value()));
    Jet1 wp = Jet1::constant(n, a.base(), 1.0);
    double d = std::sqrt(a.value());
    for (int k = 1; k <= n; ++k) {
        wp = wp * w;
        d *= (0.5 - (k - 1)) / (k * a.value());
        sum = sum + d * wp;
    }
    return sum;
}

// ---------------------------------------------------------------------------
// Jet2

std::size_t Jet2::size_for(int order) {
    return static_cast<std::size_t>((order + 1) * (order + 2) / 2);
}

std::size_t Jet2::index(int i, int j) const {
    int d = i + j;
    return static_cast<std::size_t>(d * (d + 1) / 2 + j);
}

Jet2::Jet2(int order, Point2 base) : order_(order), base_(base), c_(size_for(order), 0.0) {}

Jet2 Jet2::constant(int order, Point2 base, double value) {
    Jet2 j(order, base);
    j.c_[0] = value;
    return j;
}

Jet2 Jet2::variable_u(int order, Point2 base) {
    Jet2 j(order, base);
    j.c_[0] = base.u;
    if (order >= 1) j.coeff(1, 0) = 1.0;
    return j;
}

Jet2 Jet2::variable_v(int order, Point2 base) {
    Jet2 j(order, base);
    j.c_[0] = base.v;
    if (order >= 1) j.coeff(0, 1) = 1.0;
    return j;
}

double Jet2::partial(int i, int j) const {
    if (i + j > order_)
        throw OrderExceeded("partial (" + std::to_string(i) + "," + std::to_string(j) +
                            ") of jet of order " + std::to_string(order_));
    return factorial(i) * factorial(j) * coeff(i, j);
}

double Jet2::max_abs_coeff() const {
    double m = 0.0;
    for (double x : c_) m = std::max(m, std::abs(x));
    return m;
}

Jet2 Jet2::truncated(int new_order) const {
    if (new_order > order_) throw OrderExceeded("cannot raise jet order");
    Jet2 r(new_order, base_);
    std::copy(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(size_for(new_order)), r.c_.begin());
    return r;
}

Jet2 Jet2::du() const {
    if (order_ == 0) return Jet2(0, base_);
    Jet2 r(order_ - 1, base_);
    for (int i = 1; i <= order_; ++i)
        for (int j = 0; i + j <= order_; ++j)
            r.coeff(i - 1, j) = i * coeff(i, j);
    return r;
}

Jet2 Jet2::dv() const {
    if (order_ == 0) return Jet2(0, base_);
    Jet2 r(order_ - 1, base_);
    for (int i = 0; i < order_; ++i)
        for (int j = 1; i + j <= order_; ++j)
            r.coeff(i, j - 1) = j * coeff(i, j);
    return r;
}

double Jet2::eval_offset(double du, double dv) const {
    std::vector<double> up(static_cast<std::size_t>(order_) + 1), vp(up.size());
    up[0] = vp[0] = 1.0;
    for (int k = 1; k <= order_; ++k) {
        up[static_cast<std::size_t>(k)] = up[static_cast<std::size_t>(k - 1)] * du;
        vp[static_cast<std::size_t>(k)] = vp[static_cast<std::size_t>(k - 1)] * dv;
    }
    double s = 0.0;
    for (int i = 0; i <= order_; ++i)
        for (int j = 0; i + j <= order_; ++j)
            s += coeff(i, j) * up[static_cast<std::size_t>(i)] * vp[static_cast<std::size_t>(j)];
    return s;
}

namespace {

void require_same_shape_2(const Jet2& a, const Jet2& b) {
    if (a.order() != b.order() || !(a.base() == b.base()))
        throw JetShapeMismatch("jets differ in order or base point");
}

} // namespace

Jet2 operator+(const Jet2& a, const Jet2& b) {
    require_same_shape_2(a, b);
    Jet2 r = a;
    for (int i = 0; i <= r.order_; ++i)
        for (int j = 0; i + j <= r.order_; ++j)
            r.coeff(i, j) += b.coeff(i, j);
    return r;
}

Jet2 operator-(const Jet2& a, const Jet2& b) {
    require_same_shape_2(a, b);
    Jet2 r = a;
    for (int i = 0; i <= r.order_; ++i)
        for (int j = 0; i + j <= r.order_; ++j)
            r.coeff(i, j) -= b.coeff(i, j);
    return r;
}

Jet2 operator*(const Jet2& a, const Jet2& b) {
    require_same_shape_2(a, b);
    // Plain Cauchy product; normalized coefficients make this exact for the
    // truncated Taylor expansion of the pointwise product.
    Jet2 r(a.order_, a.base_);
    for (int i = 0; i <= a.order_; ++i)
        for (int j = 0; i + j <= a.order_; ++j) {
            double aij = a.coeff(i, j);
            if (aij == 0.0) continue;
            for (int k = 0; i + j + k <= a.order_; ++k)
                for (int l = 0; i + j + k + l <= a.order_; ++l)
                    r.coeff(i + k, j + l) += aij * b.coeff(k, l);
        }
    return r;
}

Jet2 operator/(const Jet2& a, const Jet2& b) {
    require_same_shape_2(a, b);
    if (b.value() == 0.0) throw DivisionBySingularJet("divisor jet has zero constant term");
    // Solve q*b = a by increasing total degree; within a fixed degree the only
    // occurrence of q(i,j) in (q*b)(i,j) is q(i,j)*b(0,0).
    Jet2 q(a.order_, a.base_);
    for (int d = 0; d <= a.order_; ++d) {
        for (int j = 0; j <= d; ++j) {
            int i = d - j;
            double s = a.coeff(i, j);
            for (int k = 0; k <= i; ++k)
                for (int l = 0; l <= j; ++l) {
                    if (k == i && l == j) continue;
                    s -= q.coeff(k, l) * b.coeff(i - k, j - l);
                }
            q.coeff(i, j) = s / b.value();
        }
    }
    return q;
}

Jet2 operator-(const Jet2& a) {
    Jet2 r = a;
    for (int i = 0; i <= r.order_; ++i)
        for (int j = 0; i + j <= r.order_; ++j)
            r.coeff(i, j) = -r.coeff(i, j);
    return r;
}

Jet2 operator+(const Jet2& a, double s) {
    Jet2 r = a;
    r.c_[0] += s;
    return r;
}
Jet2 operator+(double s, const Jet2& a) { return a + s; }
Jet2 operator-(const Jet2& a, double s) { return a + (-s); }

Jet2 operator*(double s, const Jet2& a) {
    Jet2 r = a;
    for (double& x : r.c_) x *= s;
    return r;
}
Jet2 operator*(const Jet2& a, double s) { return s * a; }
Jet2 operator/(const Jet2& a, double s) { return (1.0 / s) * a; }

namespace {

/// Composes the univariate series sum_k d[k] t^k with w = a - a(0).
Jet2 compose_series(const Jet2& a, const std::vector<double>& d) {
    int n = a.order();
    Jet2 w = a;
    w.coeff(0, 0) = 0.0;
    Jet2 sum = Jet2::constant(n, a.base(), d[0]);
    Jet2 wp = Jet2::constant(n, a.base(), 1.0);
    for (int k = 1; k <= n; ++k) {
        wp = wp * w;
        if (d[static_cast<std::size_t>(k)] != 0.0)
            sum = sum + d[static_cast<std::size_t>(k)] * wp;
    }
    return sum;
}

} // namespace

Jet2 sqrt(const Jet2& a) {
    double a0 = a.value();
    if (a0 <= 0.0) throw DomainError("sqrt of jet with non-positive constant term");
    std::vector<double> d(static_cast<std::size_t>(a.order()) + 1);
    d[0] = std::sqrt(a0);
    for (int k = 1; k <= a.order(); ++k)
        d[static_cast<std::size_t>(k)] = d[static_cast<std::size_t>(k - 1)] * (0.5 - (k - 1)) / (k * a0);
    return compose_series(a, d);
}

Jet2 recip(const Jet2& a) {
    double a0 = a.value();
    if (a0 == 0.0) throw DivisionBySingularJet("recip of jet with zero constant term");
    std::vector<double> d(static_cast<std::size_t>(a.order()) + 1);
    d[0] = 1.0 / a0;
    for (int k = 1; k <= a.order(); ++k)
        d[static_cast<std::size_t>(k)] = -d[static_cast<std::size_t>(k - 1)] / a0;
    return compose_series(a, d);
}

Jet2 sin(const Jet2& a) {
    double a0 = a.value();
    const double table[4] = {std::sin(a0), std::cos(a0), -std::sin(a0), -std::cos(a0)};
    std::vector<double> d(static_cast<std::size_t>(a.order()) + 1);
    double kfac = 1.0;
    for (int k = 0; k <= a.order(); ++k) {
        if (k > 0) kfac *= k;
        d[static_cast<std::size_t>(k)] = table[k % 4] / kfac;
    }
    return compose_series(a, d);
}

Jet2 cos(const Jet2& a) {
    double a0 = a.value();
    const double table[4] = {std::cos(a0), -std::sin(a0), -std::cos(a0), std::sin(a0)};
    std::vector<double> d(static_cast<std::size_t>(a.order()) + 1);
    double kfac = 1.0;
    for (int k = 0; k <= a.order(); ++k) {
        if (k > 0) kfac *= k;
        d[static_cast<std::size_t>(k)] = table[k % 4] / kfac;
    }
    return compose_series(a, d);
}

Jet2 exp(const Jet2& a) {
    double e0 = std::exp(a.value());
    std::vector<double> d(static_cast<std::size_t>(a.order()) + 1);
    double kfac = 1.0;
    for (int k = 0; k <= a.order(); ++k) {
        if (k > 0) kfac *= k;
        d[static_cast<std::size_t>(k)] = e0 / kfac;
    }
    return compose_series(a, d);
}

Jet2 pow_int(const Jet2& a, int k) {
    if (k < 0) return recip(pow_int(a, -k));
    Jet2 r = Jet2::constant(a.order(), a.base(), 1.0);
    Jet2 p = a;
    int e = k;
    while (e > 0) {
        if (e & 1) r = r * p;
        e >>= 1;
        if (e) p = p * p;
    }
    return r;
}

Jet2 pow_dyadic(const Jet2& a, int num, int sqrt_count) {
    if (a.value() <= 0.0) throw DomainError("dyadic power of jet with non-positive constant term");
    Jet2 r = pow_int(a, num);
    for (int s = 0; s < sqrt_count; ++s) r = sqrt(r);
    return r;
}

Jet2 divide_out_v(const Jet2& a, double tol_rel) {
    if (a.base().v != 0.0)
        throw NotDivisibleByV("divide_out_v requires a base point on the axis (v = 0)");
    if (a.order() == 0)
        throw OrderExceeded("cannot divide a jet of order 0 by v");
    double scale = a.max_abs_coeff();
    double tol = tol_rel * scale;
    for (int i = 0; i <= a.order(); ++i) {
        if (std::abs(a.coeff(i, 0)) > tol)
            throw NotDivisibleByV("coefficient (" + std::to_string(i) +
                                  ",0) = " + std::to_string(a.coeff(i, 0)) +
                                  " is not zero: input not divisible by v");
    }
    Jet2 r(a.order() - 1, a.base());
    for (int i = 0; i <= r.order(); ++i)
        for (int j = 0; i + j <= r.order(); ++j)
            r.coeff(i, j) = a.coeff(i, j + 1);
    return r;
}

Jet1 restrict_to_axis(const Jet2& a) {
    Jet1 r(a.order(), a.base().u);
    for (int i = 0; i <= a.order(); ++i) r.coeff(i) = a.coeff(i, 0);
    return r;
}

} // namespace fatlas

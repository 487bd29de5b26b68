#pragma once

#include <algorithm>
#include <array>
#include <cmath>

#include "fatlas/jet.hpp"

namespace fatlas {

using Vec3 = std::array<double, 3>;

inline double dot(const Vec3& a, const Vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

// Common-order combinations: geometry code mixes jets whose orders differ by
// design (derivatives lose one order, divide_out_v another), so these truncate
// to the shorter operand before combining. The raw Jet2 operators stay strict.
inline int common_order(const Jet2& a, const Jet2& b) { return std::min(a.order(), b.order()); }

inline Jet2 cadd(const Jet2& a, const Jet2& b) {
    int n = common_order(a, b);
    return a.truncated(n) + b.truncated(n);
}

inline Jet2 csub(const Jet2& a, const Jet2& b) {
    int n = common_order(a, b);
    return a.truncated(n) - b.truncated(n);
}

inline Jet2 cmul(const Jet2& a, const Jet2& b) {
    int n = common_order(a, b);
    return a.truncated(n) * b.truncated(n);
}

inline Jet2 cdiv(const Jet2& a, const Jet2& b) {
    int n = common_order(a, b);
    return a.truncated(n) / b.truncated(n);
}

/// A map into R^3 carried as three scalar jets sharing order and base point.
using Vec3J = std::array<Jet2, 3>;

inline Vec3J operator+(const Vec3J& a, const Vec3J& b) {
    return {cadd(a[0], b[0]), cadd(a[1], b[1]), cadd(a[2], b[2])};
}

inline Vec3J operator-(const Vec3J& a, const Vec3J& b) {
    return {csub(a[0], b[0]), csub(a[1], b[1]), csub(a[2], b[2])};
}

inline Vec3J operator*(const Jet2& s, const Vec3J& a) {
    return {cmul(s, a[0]), cmul(s, a[1]), cmul(s, a[2])};
}

inline Vec3J operator*(double s, const Vec3J& a) { return {s * a[0], s * a[1], s * a[2]}; }

inline Jet2 dot(const Vec3J& a, const Vec3J& b) {
    return cadd(cadd(cmul(a[0], b[0]), cmul(a[1], b[1])), cmul(a[2], b[2]));
}

inline Vec3J cross(const Vec3J& a, const Vec3J& b) {
    return {csub(cmul(a[1], b[2]), cmul(a[2], b[1])), csub(cmul(a[2], b[0]), cmul(a[0], b[2])),
            csub(cmul(a[0], b[1]), cmul(a[1], b[0]))};
}

inline Jet2 det3(const Vec3J& a, const Vec3J& b, const Vec3J& c) { return dot(cross(a, b), c); }

inline Vec3J du(const Vec3J& a) { return {a[0].du(), a[1].du(), a[2].du()}; }
inline Vec3J dv(const Vec3J& a) { return {a[0].dv(), a[1].dv(), a[2].dv()}; }

inline Vec3J truncated(const Vec3J& a, int order) {
    return {a[0].truncated(order), a[1].truncated(order), a[2].truncated(order)};
}

inline Vec3 value(const Vec3J& a) { return {a[0].value(), a[1].value(), a[2].value()}; }

inline double max_abs_coeff(const Vec3J& a) {
    return std::max({a[0].max_abs_coeff(), a[1].max_abs_coeff(), a[2].max_abs_coeff()});
}

} // namespace fatlas

#pragma once

// Quaternions written in the basis {1, e1, e2, e12} with
// e1^2 = e2^2 = e12^2 = -1 and e1 e2 = e12.

#include <array>
#include <cmath>
#include <complex>
#include <iosfwd>

namespace qwave {

struct Quaternion {
    double x0 = 0, x1 = 0, x2 = 0, x12 = 0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double a, double b, double c, double d) : x0(a), x1(b), x2(c), x12(d) {}
    constexpr explicit Quaternion(double a) : x0(a) {}

    static constexpr Quaternion one() { return {1, 0, 0, 0}; }
    static constexpr Quaternion e1() { return {0, 1, 0, 0}; }
    static constexpr Quaternion e2() { return {0, 0, 1, 0}; }
    static constexpr Quaternion e12() { return {0, 0, 0, 1}; }

    constexpr Quaternion& operator+=(const Quaternion& o) {
        x0 += o.x0; x1 += o.x1; x2 += o.x2; x12 += o.x12;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& o) {
        x0 -= o.x0; x1 -= o.x1; x2 -= o.x2; x12 -= o.x12;
        return *this;
    }
    constexpr Quaternion& operator*=(double s) {
        x0 *= s; x1 *= s; x2 *= s; x12 *= s;
        return *this;
    }

    constexpr std::array<double, 4> components() const { return {x0, x1, x2, x12}; }
    constexpr double operator[](int i) const { return i == 0 ? x0 : i == 1 ? x1 : i == 2 ? x2 : x12; }
    constexpr double& operator[](int i) { return i == 0 ? x0 : i == 1 ? x1 : i == 2 ? x2 : x12; }
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator-(const Quaternion& a) { return {-a.x0, -a.x1, -a.x2, -a.x12}; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) { return a *= (1.0 / s); }

// Expanded from the basis table; e1 e12 = -e2, e12 e1 = e2, e2 e12 = e1, e12 e2 = -e1.
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {
        a.x0 * b.x0 - a.x1 * b.x1 - a.x2 * b.x2 - a.x12 * b.x12,
        a.x0 * b.x1 + a.x1 * b.x0 + a.x2 * b.x12 - a.x12 * b.x2,
        a.x0 * b.x2 + a.x2 * b.x0 - a.x1 * b.x12 + a.x12 * b.x1,
        a.x0 * b.x12 + a.x12 * b.x0 + a.x1 * b.x2 - a.x2 * b.x1,
    };
}

constexpr bool operator==(const Quaternion& a, const Quaternion& b) {
    return a.x0 == b.x0 && a.x1 == b.x1 && a.x2 == b.x2 && a.x12 == b.x12;
}

constexpr Quaternion conj(const Quaternion& q) { return {q.x0, -q.x1, -q.x2, -q.x12}; }
constexpr double norm2(const Quaternion& q) { return q.x0 * q.x0 + q.x1 * q.x1 + q.x2 * q.x2 + q.x12 * q.x12; }
inline double abs(const Quaternion& q) { return std::sqrt(norm2(q)); }
constexpr double dot(const Quaternion& a, const Quaternion& b) {
    return a.x0 * b.x0 + a.x1 * b.x1 + a.x2 * b.x2 + a.x12 * b.x12;
}
inline Quaternion inverse(const Quaternion& q) { return conj(q) / norm2(q); }

// spinor part x0 + x12 e12, vector part x1 e1 + x2 e2
constexpr Quaternion spinor_part(const Quaternion& q) { return {q.x0, 0, 0, q.x12}; }
constexpr Quaternion vector_part(const Quaternion& q) { return {0, q.x1, q.x2, 0}; }
constexpr bool is_spinor(const Quaternion& q) { return q.x1 == 0 && q.x2 == 0; }
constexpr bool is_vector(const Quaternion& q) { return q.x0 == 0 && q.x12 == 0; }

// e12 x (x1 y2 - x2 y1)
constexpr Quaternion wedge(double x1, double x2, double y1, double y2) { return {0, 0, 0, x1 * y2 - x2 * y1}; }
constexpr double wedge_coeff(double x1, double x2, double y1, double y2) { return x1 * y2 - x2 * y1; }

// cos t + e12 sin t
inline Quaternion phase(double t) { return {std::cos(t), 0, 0, std::sin(t)}; }

// Spinors are identified with complex numbers via e12 -> i.
inline std::complex<double> spinor_code(const Quaternion& q) { return {q.x0, q.x12}; }
inline Quaternion spinor_from_code(std::complex<double> z) { return {z.real(), 0, 0, z.imag()}; }

// v = e1 c with c a spinor; returns the complex number of c.
inline std::complex<double> vector_code(const Quaternion& q) { return {q.x1, -q.x2}; }
inline Quaternion vector_from_code(std::complex<double> c) { return {0, c.real(), -c.imag(), 0}; }

struct Polar {
    double magnitude = 0;
    Quaternion axis = Quaternion::e12();
    double angle = 0;
};

// q = |q| (cos angle + axis sin angle); a real q gets the axis e12.
inline Polar polar(const Quaternion& q) {
    Polar p;
    p.magnitude = abs(q);
    if (p.magnitude == 0) return p;
    const double im = std::sqrt(q.x1 * q.x1 + q.x2 * q.x2 + q.x12 * q.x12);
    if (im > 0) p.axis = Quaternion(0, q.x1 / im, q.x2 / im, q.x12 / im);
    p.angle = std::atan2(im, q.x0);
    return p;
}

// imaginary components of axis * angle
inline std::array<double, 3> polar_rgb(const Quaternion& q) {
    const Polar p = polar(q);
    return {p.axis.x1 * p.angle, p.axis.x2 * p.angle, p.axis.x12 * p.angle};
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

}  // namespace qwave

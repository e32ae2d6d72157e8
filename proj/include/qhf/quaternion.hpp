#pragma once

/**
 * @file quaternion.hpp
 * @brief Real quaternions q0 + q1 i + q2 j + q3 k with Hamilton multiplication.
 *
 *   i^2 = j^2 = k^2 = ijk = -1
 *   ij = k, jk = i, ki = j, ji = -k, kj = -i, ik = -j
 *
 * Multiplication is associative but not commutative. Reals are central, so
 * scaling by a double is the same operation from either side.
 */

#include <cmath>

namespace qhf {

struct Quaternion {
    double q0{0.0};
    double q1{0.0};
    double q2{0.0};
    double q3{0.0};

    constexpr Quaternion() = default;
    constexpr Quaternion(double a, double b, double c, double d) : q0{a}, q1{b}, q2{c}, q3{d} {}

    static constexpr Quaternion real(double r) { return {r, 0.0, 0.0, 0.0}; }
    static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
    static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
    static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

    constexpr bool operator==(const Quaternion&) const = default;

    constexpr Quaternion operator-() const { return {-q0, -q1, -q2, -q3}; }

    constexpr Quaternion& operator+=(const Quaternion& o) {
        q0 += o.q0; q1 += o.q1; q2 += o.q2; q3 += o.q3;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& o) {
        q0 -= o.q0; q1 -= o.q1; q2 -= o.q2; q3 -= o.q3;
        return *this;
    }
    constexpr Quaternion& operator*=(double s) {
        q0 *= s; q1 *= s; q2 *= s; q3 *= s;
        return *this;
    }
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator*(Quaternion q, double s) { return q *= s; }
constexpr Quaternion operator*(double s, Quaternion q) { return q *= s; }

// Hamilton product.
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {
        a.q0 * b.q0 - a.q1 * b.q1 - a.q2 * b.q2 - a.q3 * b.q3,
        a.q0 * b.q1 + a.q1 * b.q0 + a.q2 * b.q3 - a.q3 * b.q2,
        a.q0 * b.q2 - a.q1 * b.q3 + a.q2 * b.q0 + a.q3 * b.q1,
        a.q0 * b.q3 + a.q1 * b.q2 - a.q2 * b.q1 + a.q3 * b.q0,
    };
}

constexpr Quaternion mul(const Quaternion& a, const Quaternion& b) { return a * b; }

constexpr Quaternion conj(const Quaternion& q) { return {q.q0, -q.q1, -q.q2, -q.q3}; }

constexpr double norm_squared(const Quaternion& q) {
    return q.q0 * q.q0 + q.q1 * q.q1 + q.q2 * q.q2 + q.q3 * q.q3;
}

inline double modulus(const Quaternion& q) { return std::sqrt(norm_squared(q)); }

/// Scalar part Sc(q) = (q + conj(q)) / 2.
constexpr double sc(const Quaternion& q) { return q.q0; }

/// Vector part Vec(q) = (q - conj(q)) / 2, a pure quaternion.
constexpr Quaternion vec(const Quaternion& q) { return {0.0, q.q1, q.q2, q.q3}; }

}  // namespace qhf

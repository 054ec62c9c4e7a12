#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace feigel {

using Complex = std::complex<double>;
using Vec3 = std::array<double, 3>;
using CVec3 = std::array<Complex, 3>;

/// Dense real 3x3 matrix (row-major).
struct Mat3 {
    double m[3][3]{};

    double& operator()(int i, int j) { return m[i][j]; }
    double operator()(int i, int j) const { return m[i][j]; }

    static Mat3 zero() { return Mat3{}; }
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

inline Vec3 operator-(const Vec3& a, const Vec3& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

inline Vec3 operator*(double s, const Vec3& a) {
    return {s * a[0], s * a[1], s * a[2]};
}

inline CVec3 operator+(const CVec3& a, const CVec3& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

inline CVec3 operator-(const CVec3& a, const CVec3& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

inline CVec3 operator*(const Complex& s, const CVec3& a) {
    return {s * a[0], s * a[1], s * a[2]};
}

inline double dot(const Vec3& a, const Vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

inline CVec3 cross(const CVec3& a, const CVec3& b) {
    return {a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

/// Sum_i a_i * conj(b_i).
inline Complex dot_conj(const CVec3& a, const CVec3& b) {
    return a[0] * std::conj(b[0]) + a[1] * std::conj(b[1]) + a[2] * std::conj(b[2]);
}

inline CVec3 conj(const CVec3& a) {
    return {std::conj(a[0]), std::conj(a[1]), std::conj(a[2])};
}

inline Vec3 real(const CVec3& a) {
    return {a[0].real(), a[1].real(), a[2].real()};
}

inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

inline double norm(const CVec3& a) {
    return std::sqrt(std::norm(a[0]) + std::norm(a[1]) + std::norm(a[2]));
}

inline double max_abs(const Vec3& a) {
    return std::max({std::abs(a[0]), std::abs(a[1]), std::abs(a[2])});
}

/// y = M x for real M, complex x.
inline CVec3 matvec(const Mat3& M, const CVec3& x) {
    CVec3 y{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) y[i] += M(i, j) * x[j];
    return y;
}

/// y = M^T x.
inline CVec3 matvec_t(const Mat3& M, const CVec3& x) {
    CVec3 y{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) y[i] += M(j, i) * x[j];
    return y;
}

inline Vec3 matvec(const Mat3& M, const Vec3& x) {
    Vec3 y{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) y[i] += M(i, j) * x[j];
    return y;
}

inline Vec3 matvec_t(const Mat3& M, const Vec3& x) {
    Vec3 y{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) y[i] += M(j, i) * x[j];
    return y;
}

}  // namespace feigel

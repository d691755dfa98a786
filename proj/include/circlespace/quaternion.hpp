#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace circlespace {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

// Real quaternion w + x i + y j + z k.
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  static constexpr Quaternion one() { return {1.0, 0.0, 0.0, 0.0}; }
  static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

  // The complex number a + b i, embedded in span(1, i).
  static constexpr Quaternion from_complex(Complex c) { return {c.real(), c.imag(), 0.0, 0.0}; }

  constexpr double real() const { return w; }
  constexpr Quaternion imag() const { return {0.0, x, y, z}; }
  constexpr Quaternion conj() const { return {w, -x, -y, -z}; }
  constexpr double norm2() const { return w * w + x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm2()); }
  Quaternion inverse() const;
  Quaternion normalized() const;

  constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }
  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w; x += o.x; y += o.y; z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w; x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    w *= s; x *= s; y *= s; z *= s;
    return *this;
  }
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }

// Hamilton product.
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

constexpr double dot(const Quaternion& a, const Quaternion& b) {
  return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

// exp of a purely imaginary quaternion.
Quaternion exp_imag(const Quaternion& u);

// q = z + j*w with z, w complex. j sits to the left of w, so right
// multiplication by a complex number acts complex-linearly on (z, w).
struct ComplexPair {
  Complex z;
  Complex w;
};

constexpr ComplexPair split(const Quaternion& q) {
  return {Complex{q.w, q.x}, Complex{q.y, -q.z}};
}

constexpr Quaternion join(Complex z, Complex w) {
  return {z.real(), z.imag(), w.real(), -w.imag()};
}

// Element of H^2 regarded as a right H-module.
struct QVector2 {
  Quaternion q1;
  Quaternion q2;

  QVector2& operator+=(const QVector2& o) {
    q1 += o.q1;
    q2 += o.q2;
    return *this;
  }
};

inline QVector2 operator+(QVector2 a, const QVector2& b) { return a += b; }
// Right scalar multiplication v*lambda.
inline QVector2 operator*(const QVector2& v, const Quaternion& s) { return {v.q1 * s, v.q2 * s}; }

// Element of C^4.
struct CVector4 {
  std::array<Complex, 4> z{};

  Complex& operator[](std::size_t a) { return z[a]; }
  const Complex& operator[](std::size_t a) const { return z[a]; }

  static CVector4 basis(std::size_t a) {
    CVector4 v;
    v.z[a] = 1.0;
    return v;
  }

  CVector4& operator+=(const CVector4& o) {
    for (std::size_t a = 0; a < 4; ++a) z[a] += o.z[a];
    return *this;
  }
  CVector4& operator-=(const CVector4& o) {
    for (std::size_t a = 0; a < 4; ++a) z[a] -= o.z[a];
    return *this;
  }
  CVector4& operator*=(Complex s) {
    for (auto& c : z) c *= s;
    return *this;
  }
  double norm2() const {
    double s = 0.0;
    for (const auto& c : z) s += std::norm(c);
    return s;
  }
  double norm() const { return std::sqrt(norm2()); }
};

inline CVector4 operator+(CVector4 a, const CVector4& b) { return a += b; }
inline CVector4 operator-(CVector4 a, const CVector4& b) { return a -= b; }
inline CVector4 operator*(CVector4 a, Complex s) { return a *= s; }
inline CVector4 operator*(Complex s, CVector4 a) { return a *= s; }

// Standard positive-definite Hermitian product sum conj(u_a) v_a.
Complex std_inner(const CVector4& u, const CVector4& v);

CVector4 to_c4(const QVector2& v);
QVector2 from_c4(const CVector4& z);

// Right multiplication by j in C^4 coordinates: (-conj z2, conj z1, -conj z4, conj z3).
CVector4 mul_j(const CVector4& v);

// Right multiplication by an arbitrary quaternion in C^4 coordinates.
CVector4 mul_right(const CVector4& v, const Quaternion& q);

struct FormValues {
  Quaternion h;   // <v,w> = conj(v1) w1 - conj(v2) w2
  Complex herm;   // (v,w), Hermitian of signature (2,2) on C^4
  Complex omega;  // Omega(v,w), complex symplectic on C^4
};

FormValues eval_forms(const QVector2& v, const QVector2& w);

Quaternion quaternionic_form(const QVector2& v, const QVector2& w);

// (z,w) = conj z1 w1 + conj z2 w2 - conj z3 w3 - conj z4 w4.
Complex herm_form(const CVector4& u, const CVector4& v);

// Omega(z,w) = z1 w2 - z2 w1 - z3 w4 + z4 w3.
Complex omega_form(const CVector4& u, const CVector4& v);

// Coordinate matrix of Omega: Omega(u, v) = u^T M v.
std::array<std::array<double, 4>, 4> omega_matrix();

}  // namespace circlespace

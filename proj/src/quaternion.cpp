#include "circlespace/quaternion.hpp"

namespace circlespace {

Quaternion Quaternion::inverse() const {
  const double n2 = norm2();
  return conj() * (1.0 / n2);
}

Quaternion Quaternion::normalized() const { return *this * (1.0 / norm()); }

Quaternion exp_imag(const Quaternion& u) {
  const double theta = u.imag().norm();
  if (theta == 0.0) return Quaternion::one();
  const double s = std::sin(theta) / theta;
  return {std::cos(theta), u.x * s, u.y * s, u.z * s};
}

Complex std_inner(const CVector4& u, const CVector4& v) {
  Complex s{};
  for (std::size_t a = 0; a < 4; ++a) s += std::conj(u[a]) * v[a];
  return s;
}

CVector4 to_c4(const QVector2& v) {
  const auto [z1, z2] = split(v.q1);
  const auto [z3, z4] = split(v.q2);
  return CVector4{{z1, z2, z3, z4}};
}

QVector2 from_c4(const CVector4& z) { return {join(z[0], z[1]), join(z[2], z[3])}; }

CVector4 mul_j(const CVector4& v) {
  return CVector4{{-std::conj(v[1]), std::conj(v[0]), -std::conj(v[3]), std::conj(v[2])}};
}

CVector4 mul_right(const CVector4& v, const Quaternion& q) {
  // q = a + j b  =>  v q = v a + (v j) b
  const auto [a, b] = split(q);
  return v * a + mul_j(v) * b;
}

Quaternion quaternionic_form(const QVector2& v, const QVector2& w) {
  return v.q1.conj() * w.q1 - v.q2.conj() * w.q2;
}

Complex herm_form(const CVector4& u, const CVector4& v) {
  return std::conj(u[0]) * v[0] + std::conj(u[1]) * v[1] - std::conj(u[2]) * v[2] -
         std::conj(u[3]) * v[3];
}

Complex omega_form(const CVector4& u, const CVector4& v) {
  return u[0] * v[1] - u[1] * v[0] - u[2] * v[3] + u[3] * v[2];
}

FormValues eval_forms(const QVector2& v, const QVector2& w) {
  const CVector4 a = to_c4(v);
  const CVector4 b = to_c4(w);
  return {quaternionic_form(v, w), herm_form(a, b), omega_form(a, b)};
}

std::array<std::array<double, 4>, 4> omega_matrix() {
  return {{{0.0, 1.0, 0.0, 0.0}, {-1.0, 0.0, 0.0, 0.0}, {0.0, 0.0, 0.0, -1.0}, {0.0, 0.0, 1.0, 0.0}}};
}

}  // namespace circlespace

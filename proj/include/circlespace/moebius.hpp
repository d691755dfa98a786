#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>

#include "circlespace/circle.hpp"
#include "circlespace/projective.hpp"
#include "circlespace/quaternion.hpp"
#include "circlespace/tangent.hpp"

namespace circlespace {

// 2x2 quaternionic matrix acting on column vectors of H^2 from the left
// (entries multiply coordinates on the left, so the map is right H-linear).
struct QMatrix2 {
  std::array<std::array<Quaternion, 2>, 2> m{};

  static QMatrix2 identity() { return diag(Quaternion::one(), Quaternion::one()); }
  static QMatrix2 diag(const Quaternion& a, const Quaternion& d) { return {{{{a, Quaternion{}}, {Quaternion{}, d}}}}; }
  static QMatrix2 antidiag(const Quaternion& b, const Quaternion& c) { return {{{{Quaternion{}, b}, {c, Quaternion{}}}}}; }

  QVector2 operator*(const QVector2& v) const {
    return {m[0][0] * v.q1 + m[0][1] * v.q2, m[1][0] * v.q1 + m[1][1] * v.q2};
  }
  QMatrix2 operator*(const QMatrix2& o) const;
  // Quaternionic conjugate transpose.
  QMatrix2 adjoint() const;
};

// Complex 4x4 matrix of a quaternionic matrix in the C^4 identification.
Eigen::Matrix4cd to_complex(const QMatrix2& m);

// A conformal transformation of S^3: Phi^* <,> = s <,> with s = +1
// (orientation preserving) or s = -1 (swaps the two balls of S^4 \ S^3 and
// reverses the orientation of S^3).
class ConformalMap {
 public:
  const QMatrix2& matrix() const { return m_; }
  // +1 or -1.
  int form_sign() const { return sign_; }
  bool preserves_orientation() const { return sign_ > 0; }

  ConformalMap operator*(const ConformalMap& o) const;
  ConformalMap inverse() const;

  friend ConformalMap check_conformal(const QMatrix2& m, double tol);

 private:
  ConformalMap(const QMatrix2& m, int sign) : m_(m), sign_(sign) {}
  QMatrix2 m_;
  int sign_;
};

// max |Phi^* eta Phi - s eta| minimised over s = +-1.
double conformal_defect(const QMatrix2& m);

// Throws Error{NotConformal} (value = defect) when the defect exceeds
// tol * max(1, |Phi|^2).
ConformalMap check_conformal(const QMatrix2& m, double tol = active_tolerances().group);

S3Point act_on_point(const ConformalMap& phi, const S3Point& x);
ProjPoint act_on_line(const ConformalMap& phi, const ProjPoint& e);
// Differential of phi on unit tangents, via the action on Q.
UnitTangent act_on_tangent(const ConformalMap& phi, const UnitTangent& t);

// Real 5x5 matrix in the canonical real basis preserving
// G = diag(-1, 1, 1, 1, 1).
class WIsometry {
 public:
  using Matrix = Eigen::Matrix<double, 5, 5>;

  static WIsometry identity() { return WIsometry(Matrix::Identity()); }
  // Throws Error{NotConformal} when g^T eta g != eta within tol.
  static WIsometry from_matrix(const Matrix& g, double tol = 1e-8);
  // e2 -> -e2, every other basis vector fixed.
  static WIsometry reflect_e2();

  const Matrix& matrix() const { return g_; }
  // (g e0, e0) < 0, i.e. future cone preserved.
  bool orthochronous() const { return g_(0, 0) > 0.0; }
  double determinant() const { return g_.determinant(); }
  double metric_defect() const;

  WVector apply(const WVector& w) const;
  Bivector apply(const Bivector& b) const;
  CircleRep apply(const CircleRep& k) const;

  WIsometry operator*(const WIsometry& o) const { return WIsometry(g_ * o.g_); }
  WIsometry inverse() const;

 private:
  explicit WIsometry(const Matrix& g) : g_(g) {}
  Matrix g_;
};

// Lambda^2 push-forward of phi restricted to W, in the real basis.
WIsometry induced_on_W(const ConformalMap& phi);

// Deterministic orientation-preserving conformal map composed of unit
// quaternion rotations diag(u, v) and boosts cosh t + sinh t * swap.
ConformalMap random_conformal(std::uint64_t seed);

}  // namespace circlespace

#include "circlespace/projective.hpp"

#include <algorithm>
#include <cmath>

#include "circlespace/error.hpp"

namespace circlespace {

double projective_distance(const CVector4& u, const CVector4& v) {
  const double nu = u.norm();
  const double nv2 = v.norm2();
  if (nu == 0.0 || nv2 == 0.0) return 1.0;
  // |u - proj_v u| / |u| is the sine of the angle without cancellation.
  const CVector4 r = u - v * (std_inner(v, u) / nv2);
  return std::min(1.0, r.norm() / nu);
}

bool same_line(const CVector4& u, const CVector4& v, double tol) {
  return std::norm(std_inner(u, v)) >= (1.0 - tol) * u.norm2() * v.norm2();
}

ProjPoint ProjPoint::from(const CVector4& v) {
  std::size_t best = 0;
  for (std::size_t a = 1; a < 4; ++a) {
    if (std::abs(v[a]) > std::abs(v[best])) best = a;
  }
  if (std::abs(v[best]) == 0.0) throw Error(ErrorKind::DegenerateInput, "zero vector is not a projective point");
  return ProjPoint(v * (1.0 / v[best]));
}

HPoint HPoint::from(const QVector2& v) {
  const double n1 = v.q1.norm2();
  const double n2 = v.q2.norm2();
  if (n1 == 0.0 && n2 == 0.0) throw Error(ErrorKind::DegenerateInput, "zero vector is not a quaternionic line");
  const Quaternion s = n1 > n2 ? v.q1.inverse() : v.q2.inverse();
  return HPoint(v * s);
}

S3Point S3Point::from(const Quaternion& x, double tol) {
  const double defect = std::abs(x.norm() - 1.0);
  if (!(defect < tol)) throw Error(ErrorKind::NotUnit, "quaternion is not on S^3", defect);
  return S3Point(x);
}

S3Point S3Point::normalize(const Quaternion& x) {
  const double n = x.norm();
  if (n == 0.0) throw Error(ErrorKind::DegenerateInput, "cannot normalize zero quaternion");
  return S3Point(x * (1.0 / n));
}

HPoint twistor_project(const ProjPoint& e) { return HPoint::from(from_c4(e.rep())); }

bool is_in_Q(const CVector4& v, double tol) {
  return std::abs(herm_form(v, v)) < tol * v.norm2();
}

bool is_in_Q(const ProjPoint& e, double tol) { return is_in_Q(e.rep(), tol); }

bool is_in_S3(const HPoint& l, double tol) {
  return std::abs(quaternionic_form(l.rep(), l.rep()).real()) < tol;
}

S3Point to_s3(const HPoint& l, double tol) {
  if (!is_in_S3(l, tol)) throw Error(ErrorKind::NotIsotropic, "quaternionic line is not on S^3");
  const auto& r = l.rep();
  return S3Point::normalize(r.q1 * r.q2.inverse());
}

FiberBasis fiber_basis(const S3Point& x) {
  const CVector4 v = to_c4(QVector2{x.q(), Quaternion::one()});
  return {v, mul_j(v)};
}

}  // namespace circlespace

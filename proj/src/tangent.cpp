#include "circlespace/tangent.hpp"

#include <algorithm>
#include <cmath>

#include "circlespace/error.hpp"

namespace circlespace {
namespace {

Quaternion tangential_part(const Quaternion& x, const Quaternion& v) { return v - x * dot(v, x); }

Quaternion cross_unchecked(const Quaternion& x, const Quaternion& a, const Quaternion& b) {
  const Quaternion xi = x.conj();
  return x * ((xi * a) * (xi * b)).imag();
}

// Some unit imaginary quaternion orthogonal to the unit imaginary mu.
Quaternion orthogonal_imaginary(const Quaternion& mu) {
  const Quaternion axes[3] = {Quaternion::i(), Quaternion::j(), Quaternion::k()};
  const Quaternion* best = &axes[0];
  for (const auto& a : axes) {
    if (std::abs(dot(a, mu)) < std::abs(dot(*best, mu))) best = &a;
  }
  return (*best - mu * dot(*best, mu)).normalized();
}

}  // namespace

UnitTangent UnitTangent::from(const S3Point& x, const Quaternion& mu, double tol) {
  if (!(std::abs(mu.w) < tol)) throw Error(ErrorKind::NotImaginary, "mu has a real part", std::abs(mu.w));
  const double defect = std::abs(mu.norm() - 1.0);
  if (!(defect < tol)) throw Error(ErrorKind::NotUnit, "mu is not a unit vector", defect);
  return UnitTangent(x, mu);
}

UnitTangent UnitTangent::from_vector(const S3Point& x, const Quaternion& v) {
  const Quaternion mu = (x.q().conj() * v).imag();
  const double n = mu.norm();
  if (n < 1e-300) throw Error(ErrorKind::DegenerateInput, "tangent vector has no tangential part");
  return UnitTangent(x, mu * (1.0 / n));
}

ProjPoint tangent_to_line(const UnitTangent& t) {
  // Two exact solutions of mu lambda = lambda i: mu + i vanishes only at
  // mu = -i, j + mu k only at mu = i. Use the better conditioned one.
  const Quaternion plus_i = t.mu() + Quaternion::i();
  const Quaternion alt = Quaternion::j() + t.mu() * Quaternion::k();
  const Quaternion lambda = plus_i.norm2() >= alt.norm2() ? plus_i : alt;
  return ProjPoint::from(to_c4(QVector2{t.x().q(), Quaternion::one()} * lambda));
}

UnitTangent line_to_tangent(const ProjPoint& e) {
  if (!is_in_Q(e)) throw Error(ErrorKind::NotIsotropic, "line is not in Q", std::abs(herm_form(e.rep(), e.rep())));
  const QVector2 u = from_c4(e.rep());
  const Quaternion& lambda = u.q2;
  const S3Point x = S3Point::normalize(u.q1 * lambda.inverse());
  const Quaternion mu = (lambda * Quaternion::i() * lambda.inverse()).imag();
  return UnitTangent(x, mu.normalized());
}

Quaternion cross(const S3Point& x, const Quaternion& a, const Quaternion& b) {
  const double tol = 1e-9;
  if (std::abs(dot(a, x.q())) > tol * std::max(1.0, a.norm()) ||
      std::abs(dot(b, x.q())) > tol * std::max(1.0, b.norm())) {
    throw Error(ErrorKind::DegenerateInput, "cross product arguments must be tangent at x");
  }
  return cross_unchecked(x.q(), a, b);
}

double conformality_residual(const TangentField& field, const S3Point& x, double h) {
  if (!(h >= 1e-6 && h <= 1e-2)) throw Error(ErrorKind::DegenerateInput, "finite-difference step outside [1e-6, 1e-2]", h);
  const UnitTangent t0 = field(x);
  if (distance(t0.x(), x) > 1e-9) throw Error(ErrorKind::DegenerateInput, "field returned a tangent at another point");
  const Quaternion& p = x.q();
  const Quaternion tv = t0.vector();

  // Levi-Civita derivative of the field along the unit tangent x*u.
  const auto nabla = [&](const Quaternion& u) {
    const auto at = [&](double s) { return field(S3Point::normalize(p * exp_imag(u * s))).vector(); };
    const Quaternion d = (at(h) - at(-h)) * (0.5 / h);
    return tangential_part(p, d);
  };

  const Quaternion u = orthogonal_imaginary(t0.mu());
  const Quaternion ju = (t0.mu() * u).imag();  // x^-1 (T x X)
  const Quaternion juu = (t0.mu() * ju).imag();  // x^-1 (T x (T x X)) = -u

  double worst = 0.0;
  for (const auto& [a, b] : {std::pair{u, ju}, std::pair{ju, juu}}) {
    const Quaternion lhs = cross_unchecked(p, tv, nabla(a));
    const Quaternion rhs = nabla(b);
    worst = std::max(worst, (lhs - rhs).norm());
  }
  return worst;
}

UnitTangent hopf_field(const S3Point& x) { return UnitTangent::from(x, Quaternion::i()); }

}  // namespace circlespace

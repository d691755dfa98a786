#include "circlespace/moebius.hpp"

#include <algorithm>
#include <cmath>

#include "circlespace/error.hpp"
#include "circlespace/random.hpp"

namespace circlespace {
namespace {

const Eigen::Matrix<double, 5, 5>& metric() {
  static const Eigen::Matrix<double, 5, 5> eta = [] {
    Eigen::Matrix<double, 5, 5> m = Eigen::Matrix<double, 5, 5>::Zero();
    for (int k = 0; k < 5; ++k) m(k, k) = kMetric[k];
    return m;
  }();
  return eta;
}

// Phi^* diag(1,-1) Phi as a quaternionic 2x2 matrix.
QMatrix2 pulled_back_form(const QMatrix2& m) {
  const QMatrix2 eta = QMatrix2::diag(Quaternion::one(), -Quaternion::one());
  return m.adjoint() * (eta * m);
}

QMatrix2 boost(double t) {
  const Quaternion c{std::cosh(t), 0, 0, 0};
  const Quaternion s{std::sinh(t), 0, 0, 0};
  return {{{{c, s}, {s, c}}}};
}

}  // namespace

QMatrix2 QMatrix2::operator*(const QMatrix2& o) const {
  QMatrix2 r;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) r.m[a][b] = m[a][0] * o.m[0][b] + m[a][1] * o.m[1][b];
  }
  return r;
}

QMatrix2 QMatrix2::adjoint() const {
  QMatrix2 r;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) r.m[a][b] = m[b][a].conj();
  }
  return r;
}

Eigen::Matrix4cd to_complex(const QMatrix2& m) {
  Eigen::Matrix4cd a;
  for (int k = 0; k < 4; ++k) {
    const CVector4 col = to_c4(m * from_c4(CVector4::basis(k)));
    for (int r = 0; r < 4; ++r) a(r, k) = col[r];
  }
  return a;
}

double conformal_defect(const QMatrix2& m) {
  const QMatrix2 f = pulled_back_form(m);
  double best = 0.0;
  for (int s : {1, -1}) {
    const QMatrix2 eta = QMatrix2::diag(Quaternion::one() * s, Quaternion::one() * -s);
    double worst = 0.0;
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) worst = std::max(worst, (f.m[a][b] - eta.m[a][b]).norm());
    }
    best = s == 1 ? worst : std::min(best, worst);
  }
  return best;
}

ConformalMap check_conformal(const QMatrix2& m, double tol) {
  double scale = 1.0;
  for (const auto& row : m.m) {
    for (const auto& q : row) scale = std::max(scale, q.norm2());
  }
  const double defect = conformal_defect(m);
  if (!(defect <= tol * scale)) throw Error(ErrorKind::NotConformal, "matrix does not preserve <,> up to sign", defect);
  const int sign = pulled_back_form(m).m[0][0].w > 0.0 ? 1 : -1;
  return ConformalMap(m, sign);
}

ConformalMap ConformalMap::operator*(const ConformalMap& o) const { return ConformalMap(m_ * o.m_, sign_ * o.sign_); }

ConformalMap ConformalMap::inverse() const {
  // Phi^* eta Phi = s eta gives Phi^-1 = s eta Phi^* eta.
  const QMatrix2 eta = QMatrix2::diag(Quaternion::one(), -Quaternion::one());
  const QMatrix2 signed_eta = QMatrix2::diag(Quaternion::one() * sign_, -Quaternion::one() * sign_);
  return ConformalMap(signed_eta * m_.adjoint() * eta, sign_);
}

S3Point act_on_point(const ConformalMap& phi, const S3Point& x) {
  const QVector2 v = phi.matrix() * QVector2{x.q(), Quaternion::one()};
  return S3Point::normalize(v.q1 * v.q2.inverse());
}

ProjPoint act_on_line(const ConformalMap& phi, const ProjPoint& e) {
  return ProjPoint::from(to_c4(phi.matrix() * from_c4(e.rep())));
}

UnitTangent act_on_tangent(const ConformalMap& phi, const UnitTangent& t) {
  const UnitTangent pushed = line_to_tangent(act_on_line(phi, tangent_to_line(t)));
  if (phi.preserves_orientation()) return pushed;
  // The line encodes the complex structure sending the outward normal to
  // the tangent; a ball-swapping map flips the normal, hence the tangent.
  return UnitTangent::from(pushed.x(), -pushed.mu());
}

WIsometry WIsometry::from_matrix(const Matrix& g, double tol) {
  const double defect = (g.transpose() * metric() * g - metric()).cwiseAbs().maxCoeff();
  if (!(defect <= tol * std::max(1.0, g.cwiseAbs2().maxCoeff()))) {
    throw Error(ErrorKind::NotConformal, "matrix does not preserve G", defect);
  }
  return WIsometry(g);
}

WIsometry WIsometry::reflect_e2() {
  Matrix g = Matrix::Identity();
  g(2, 2) = -1.0;
  return WIsometry(g);
}

double WIsometry::metric_defect() const {
  return (g_.transpose() * metric() * g_ - metric()).cwiseAbs().maxCoeff();
}

WVector WIsometry::apply(const WVector& w) const {
  WVector r{};
  for (int a = 0; a < 5; ++a) {
    for (int b = 0; b < 5; ++b) r[a] += g_(a, b) * w[b];
  }
  return r;
}

Bivector WIsometry::apply(const Bivector& b) const { return from_w(apply(to_w(b))); }

CircleRep WIsometry::apply(const CircleRep& k) const { return CircleRep::from(apply(k.w())); }

WIsometry WIsometry::inverse() const {
  // g^-1 = eta g^T eta for G-orthogonal g.
  return WIsometry(metric() * g_.transpose() * metric());
}

WIsometry induced_on_W(const ConformalMap& phi) {
  const Eigen::Matrix4cd a = to_complex(phi.matrix());
  CVector4 cols[4];
  for (int k = 0; k < 4; ++k) {
    for (int r = 0; r < 4; ++r) cols[k][r] = a(r, k);
  }
  const int pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  const auto push = [&](const Bivector& b) {
    Bivector out;
    for (int t = 0; t < 6; ++t) out += b.c[t] * wedge(cols[pairs[t][0]], cols[pairs[t][1]]);
    return out;
  };
  const auto& e = canonical_real_basis().e;
  WIsometry::Matrix g;
  for (int l = 0; l < 5; ++l) {
    const WVector col = to_w(push(e[l]));
    for (int k = 0; k < 5; ++k) g(k, l) = col[k].real();
  }
  return WIsometry::from_matrix(g);
}

ConformalMap random_conformal(std::uint64_t seed) {
  Rng rng(seed);
  const auto rotation = [&] {
    const Quaternion u = rng.unit_quaternion();
    return QMatrix2::diag(u, rng.unit_quaternion());
  };
  QMatrix2 m = rotation();
  for (int n = 0; n < 2; ++n) {
    m = m * boost(rng.uniform(-1.2, 1.2));
    m = m * rotation();
  }
  return check_conformal(m, 1e-12);
}

}  // namespace circlespace

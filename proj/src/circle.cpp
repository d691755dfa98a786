#include "circlespace/circle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "circlespace/error.hpp"

namespace circlespace {
namespace {

constexpr double kSqrtHalf = 0.70710678118654752440;

// Sign fixing which null direction of a circle's orthogonal plane runs
// through the three defining points in order.
constexpr double kTraversalSign = -1.0;

Bivector normalized_phase(const Bivector& b) {
  std::size_t best = 0;
  for (std::size_t a = 1; a < 6; ++a) {
    if (std::abs(b.c[a]) > std::abs(b.c[best])) best = a;
  }
  const Complex lead = b.c[best];
  const Complex scale = std::conj(lead) / (std::abs(lead) * b.norm());
  return b * scale;
}

}  // namespace

Bivector wedge(const CVector4& u, const CVector4& v) {
  const auto m = [&](int a, int b) { return u[a] * v[b] - u[b] * v[a]; };
  return Bivector{{m(0, 1), m(0, 2), m(0, 3), m(1, 2), m(1, 3), m(2, 3)}};
}

Complex omega_pairing(const Bivector& a) { return a.c[Bivector::k12] - a.c[Bivector::k34]; }

Complex G(const Bivector& a, const Bivector& b) {
  using B = Bivector;
  const Complex top = a.c[B::k12] * b.c[B::k34] - a.c[B::k13] * b.c[B::k24] + a.c[B::k14] * b.c[B::k23] +
                      a.c[B::k23] * b.c[B::k14] - a.c[B::k24] * b.c[B::k13] + a.c[B::k34] * b.c[B::k12];
  return -top;
}

Bivector sigma(const Bivector& a) {
  using B = Bivector;
  Bivector r;
  r.c[B::k12] = std::conj(a.c[B::k12]);
  r.c[B::k34] = std::conj(a.c[B::k34]);
  r.c[B::k24] = std::conj(a.c[B::k13]);
  r.c[B::k13] = std::conj(a.c[B::k24]);
  r.c[B::k23] = -std::conj(a.c[B::k14]);
  r.c[B::k14] = -std::conj(a.c[B::k23]);
  return r;
}

Complex G(const WVector& a, const WVector& b) {
  Complex s{};
  for (std::size_t k = 0; k < 5; ++k) s += kMetric[k] * a[k] * b[k];
  return s;
}

double G(const RealWVector& a, const RealWVector& b) {
  double s = 0.0;
  for (std::size_t k = 0; k < 5; ++k) s += kMetric[k] * a[k] * b[k];
  return s;
}

const RealBasis& canonical_real_basis() {
  static const RealBasis basis = [] {
    using B = Bivector;
    const Complex r{kSqrtHalf, 0.0};
    const Complex ir{0.0, kSqrtHalf};
    RealBasis e;
    e.e[0] = r * (B::basis(B::k12) + B::basis(B::k34));
    e.e[1] = r * (B::basis(B::k13) + B::basis(B::k24));
    e.e[2] = ir * (B::basis(B::k13) - B::basis(B::k24));
    e.e[3] = r * (B::basis(B::k14) - B::basis(B::k23));
    e.e[4] = ir * (B::basis(B::k14) + B::basis(B::k23));
    return e;
  }();
  return basis;
}

WVector to_w(const Bivector& a) {
  const auto& e = canonical_real_basis().e;
  WVector w;
  for (std::size_t k = 0; k < 5; ++k) w[k] = kMetric[k] * G(e[k], a);
  return w;
}

Bivector from_w(const WVector& w) {
  const auto& e = canonical_real_basis().e;
  Bivector b;
  for (std::size_t k = 0; k < 5; ++k) b += w[k] * e[k];
  return b;
}

double norm(const WVector& w) {
  double s = 0.0;
  for (const auto& x : w) s += std::norm(x);
  return std::sqrt(s);
}

double projective_distance(const WVector& a, const WVector& b) {
  const double na = norm(a);
  const double nb = norm(b);
  if (na == 0.0 || nb == 0.0) return 1.0;
  Complex ip{};
  for (std::size_t k = 0; k < 5; ++k) ip += std::conj(b[k]) * a[k];
  const Complex s = ip / (nb * nb);
  double r2 = 0.0;
  for (std::size_t k = 0; k < 5; ++k) r2 += std::norm(a[k] - s * b[k]);
  return std::min(1.0, std::sqrt(r2) / na);
}

WVector conj(const WVector& w) {
  WVector r;
  for (std::size_t k = 0; k < 5; ++k) r[k] = std::conj(w[k]);
  return r;
}

CircleRep CircleRep::from(const Bivector& b) {
  const double n = b.norm();
  if (n == 0.0) throw Error(ErrorKind::DegenerateInput, "zero bivector");
  const double tol = active_tolerances().null;
  const double in_w = std::abs(omega_pairing(b)) / n;
  if (!(in_w < tol)) throw Error(ErrorKind::NotInW, "bivector is not Omega-null", in_w);
  const double null = std::abs(G(b, b)) / (n * n);
  if (!(null < tol)) throw Error(ErrorKind::NonNull, "bivector is not G-null", null);
  return CircleRep(normalized_phase(b));
}

CircleRep CircleRep::from(const WVector& w) { return from(from_w(w)); }

bool CircleRep::is_point_circle() const {
  const WVector w = this->w();
  return projective_distance(w, conj(w)) < active_tolerances().real_point;
}

bool same_circle(const CircleRep& a, const CircleRep& b, double tol) {
  return projective_distance(a.w(), b.w()) < tol;
}

CircleRep point_circle(const S3Point& x) {
  const auto [v, vj] = fiber_basis(x);
  return CircleRep::from(wedge(v, vj));
}

RealWVector point_circle_real(const S3Point& x) {
  const auto [v, vj] = fiber_basis(x);
  const WVector w = to_w(wedge(v, vj));
  RealWVector r;
  for (std::size_t k = 0; k < 5; ++k) r[k] = w[k].real();
  if (r[0] < 0.0) {
    for (auto& c : r) c = -c;
  }
  return r;
}

CircleRep circle_from_tangents(const UnitTangent& t1, const UnitTangent& t2) {
  if (distance(t1.x(), t2.x()) < 1e-7) {
    throw Error(ErrorKind::DegenerateInput, "tangents share a base point");
  }
  CVector4 u1 = tangent_to_line(t1).rep();
  CVector4 u2 = tangent_to_line(t2).rep();
  u1 *= 1.0 / u1.norm();
  u2 *= 1.0 / u2.norm();
  const double om = std::abs(omega_form(u1, u2));
  if (!(om < active_tolerances().null)) {
    throw Error(ErrorKind::NotCotangent, "Omega(T,S) does not vanish", om);
  }
  return CircleRep::from(wedge(u1, u2));
}

std::pair<CircleRep, CircleRep> circle_through_points(const S3Point& p1, const S3Point& p2, const S3Point& p3) {
  if (distance(p1, p2) < 1e-7 || distance(p1, p3) < 1e-7 || distance(p2, p3) < 1e-7) {
    throw Error(ErrorKind::DegenerateInput, "points are not pairwise distinct");
  }
  const RealWVector n[3] = {point_circle_real(p1), point_circle_real(p2), point_circle_real(p3)};

  // Rows n_i^T diag(-1,1,1,1,1): the G-orthogonal complement is their kernel.
  Eigen::Matrix<double, 3, 5> a;
  for (int i = 0; i < 3; ++i) {
    for (int k = 0; k < 5; ++k) a(i, k) = kMetric[k] * n[i][k];
  }
  Eigen::JacobiSVD<Eigen::Matrix<double, 3, 5>> svd(a, Eigen::ComputeFullV);
  const auto s = svd.singularValues();
  if (!(s(2) > 1e-9 * s(0))) throw Error(ErrorKind::DegenerateInput, "point circles are linearly dependent", s(2) / s(0));

  RealWVector y1, y2;
  for (int k = 0; k < 5; ++k) {
    y1[k] = svd.matrixV()(k, 3);
    y2[k] = svd.matrixV()(k, 4);
  }
  const double g11 = G(y1, y1);
  if (!(g11 > 1e-12)) throw Error(ErrorKind::DegenerateInput, "circle plane is not spacelike");
  RealWVector u, v;
  for (int k = 0; k < 5; ++k) u[k] = y1[k] / std::sqrt(g11);
  const double g12 = G(y2, u);
  for (int k = 0; k < 5; ++k) v[k] = y2[k] - g12 * u[k];
  const double g22 = G(v, v);
  if (!(g22 > 1e-12)) throw Error(ErrorKind::DegenerateInput, "circle plane is not spacelike");
  for (auto& c : v) c /= std::sqrt(g22);

  Eigen::Matrix<double, 5, 5> frame;
  for (int k = 0; k < 5; ++k) {
    for (int i = 0; i < 3; ++i) frame(k, i) = n[i][k];
    frame(k, 3) = u[k];
    frame(k, 4) = v[k];
  }
  const double orient = frame.determinant() * kTraversalSign;

  WVector forward, backward;
  for (int k = 0; k < 5; ++k) {
    forward[k] = Complex{u[k], v[k]};
    backward[k] = Complex{u[k], -v[k]};
  }
  if (orient < 0.0) std::swap(forward, backward);
  return {CircleRep::from(forward), CircleRep::from(backward)};
}

double incidence_defect(const S3Point& p, const CircleRep& k) {
  const auto [v, vj] = fiber_basis(p);
  const Bivector pc = wedge(v, vj);
  return std::abs(G(pc, k.bivector())) / (pc.norm() * k.bivector().norm());
}

bool is_incident(const S3Point& p, const CircleRep& k, double tol) { return incidence_defect(p, k) < tol; }

UnitTangent CircleFrame::tangent_at(double theta) const {
  return line_to_tangent(ProjPoint::from(p * std::polar(1.0, theta) + q));
}

double CircleFrame::angle_of(const S3Point& x) const {
  const auto [v, vj] = fiber_basis(x);
  Eigen::Matrix4cd m;
  for (int a = 0; a < 4; ++a) {
    m(a, 0) = p[a];
    m(a, 1) = q[a];
    m(a, 2) = -v[a];
    m(a, 3) = -vj[a];
  }
  Eigen::JacobiSVD<Eigen::Matrix4cd> svd(m, Eigen::ComputeFullV);
  const Complex alpha = svd.matrixV()(0, 3);
  const Complex beta = svd.matrixV()(1, 3);
  return std::arg(alpha / beta);
}

CircleFrame circle_frame(const CircleRep& k) {
  if (k.is_point_circle()) throw Error(ErrorKind::DegenerateCircle, "point circle has no tangent circle");
  const auto& c = k.bivector().c;
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  const int idx[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  for (int t = 0; t < 6; ++t) {
    m(idx[t][0], idx[t][1]) = c[t];
    m(idx[t][1], idx[t][0]) = -c[t];
  }
  Eigen::JacobiSVD<Eigen::Matrix4cd> svd(m, Eigen::ComputeFullU);
  CVector4 b[2];
  for (int j = 0; j < 2; ++j) {
    for (int a = 0; a < 4; ++a) b[j][a] = svd.matrixU()(a, j);
  }
  Eigen::Matrix2cd h;
  for (int r = 0; r < 2; ++r) {
    for (int s = 0; s < 2; ++s) h(r, s) = herm_form(b[r], b[s]);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> eig(h);
  const double lo = eig.eigenvalues()(0);
  const double hi = eig.eigenvalues()(1);
  if (!(lo < -1e-9 && hi > 1e-9)) {
    throw Error(ErrorKind::DegenerateCircle, "restricted Hermitian form is not of signature (1,1)", std::min(-lo, hi));
  }
  CircleFrame f;
  for (int a = 0; a < 4; ++a) {
    f.p[a] = (eig.eigenvectors()(0, 1) * b[0][a] + eig.eigenvectors()(1, 1) * b[1][a]) / std::sqrt(hi);
    f.q[a] = (eig.eigenvectors()(0, 0) * b[0][a] + eig.eigenvectors()(1, 0) * b[1][a]) / std::sqrt(-lo);
  }
  return f;
}

std::vector<CircleSample> parametrize_circle(const CircleRep& k, int n) {
  if (n < 1) throw Error(ErrorKind::DegenerateInput, "sample count must be positive");
  const CircleFrame f = circle_frame(k);
  std::vector<CircleSample> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    const UnitTangent t = f.tangent_at(2.0 * std::numbers::pi * s / n);
    out.push_back({t.x(), t});
  }
  return out;
}

}  // namespace circlespace

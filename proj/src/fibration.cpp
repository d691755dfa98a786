#include "circlespace/fibration.hpp"

#include <algorithm>
#include <cmath>

#include "circlespace/error.hpp"
#include "circlespace/random.hpp"

namespace circlespace {
namespace {

const WVector kH0{0.0, 0.0, 0.0, 1.0, kI};

WVector h1(int sign) { return {0.0, 1.0, static_cast<double>(sign) * kI, 0.0, 0.0}; }

WVector scaled(const WVector& v, Complex s) {
  WVector r = v;
  for (Complex& x : r) x *= s;
  return r;
}

WVector sum(const WVector& a, const WVector& b) {
  WVector r;
  for (int k = 0; k < 5; ++k) r[k] = a[k] + b[k];
  return r;
}

// Hermitian pairing sum conj(a_k) b_k in the real-basis coordinates.
Complex hdot(const WVector& a, const WVector& b) {
  Complex s{};
  for (int k = 0; k < 5; ++k) s += std::conj(a[k]) * b[k];
  return s;
}

// Generic fixed combination of the coordinate polynomials; its common roots
// with every coordinate are the common roots of the curve.
Polynomial combination(const FibrationCurve& c, int attempt) {
  static const Complex weights[3][5] = {
      {{1.0, 0.0}, {0.7, 0.3}, {-0.4, 0.9}, {0.25, -0.6}, {-0.8, -0.15}},
      {{0.3, -0.5}, {1.0, 0.2}, {0.6, 0.6}, {-0.9, 0.1}, {0.2, 0.75}},
      {{-0.6, 0.4}, {0.1, -1.0}, {0.85, 0.0}, {0.5, 0.45}, {1.0, -0.3}},
  };
  Polynomial r{std::vector<Complex>(c.coeffs.size())};
  for (std::size_t k = 0; k < c.coeffs.size(); ++k) {
    for (int a = 0; a < 5; ++a) r.c[k] += weights[attempt][a] * c.coeffs[k][a];
  }
  return r;
}

bool common_root(const FibrationCurve& c, const CP1& r, double tol) {
  const WVector v = c(r.normalized());
  double m = 0.0;
  for (const Complex& x : v) m = std::max(m, std::abs(x));
  return m <= tol * c.max_abs();
}

FibrationCurve deflate_curve(const FibrationCurve& c, const CP1& r) {
  std::vector<Polynomial> coords;
  for (int a = 0; a < 5; ++a) coords.push_back(deflate(c.coordinate(a), r));
  FibrationCurve out{std::vector<WVector>(c.coeffs.size() - 1)};
  for (std::size_t k = 0; k + 1 < c.coeffs.size(); ++k) {
    for (int a = 0; a < 5; ++a) out.coeffs[k][a] = coords[a].c[k];
  }
  return out;
}

Eigen::VectorXcd stacked(const FibrationCurve& c, std::size_t length) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(5 * length));
  for (std::size_t k = 0; k < c.coeffs.size(); ++k) {
    for (int a = 0; a < 5; ++a) v(static_cast<Eigen::Index>(5 * k + a)) = c.coeffs[k][a];
  }
  return v;
}

}  // namespace

WVector FibrationCurve::operator()(const CP1& p) const {
  WVector r{};
  const int n = nominal_degree();
  Complex zk{1.0};
  for (int k = 0; k <= n; ++k) {
    const Complex f = zk * std::pow(p.w, n - k);
    for (int a = 0; a < 5; ++a) r[a] += f * coeffs[k][a];
    zk *= p.z;
  }
  return r;
}

CircleRep FibrationCurve::circle_at(const CP1& p) const { return CircleRep::from((*this)(p.normalized())); }

Polynomial FibrationCurve::coordinate(int a) const {
  Polynomial p{std::vector<Complex>(coeffs.size())};
  for (std::size_t k = 0; k < coeffs.size(); ++k) p.c[k] = coeffs[k][a];
  return p;
}

double FibrationCurve::max_abs() const {
  double m = 0.0;
  for (const WVector& v : coeffs) {
    for (const Complex& x : v) m = std::max(m, std::abs(x));
  }
  return m;
}

double FibrationCurve::null_defect() const {
  const double scale = max_abs();
  if (scale == 0.0) return 0.0;
  const int n = nominal_degree();
  double worst = 0.0;
  for (int m = 0; m <= 2 * n; ++m) {
    Complex s{};
    for (int j = std::max(0, m - n); j <= std::min(m, n); ++j) s += G(coeffs[j], coeffs[m - j]);
    worst = std::max(worst, std::abs(s));
  }
  return worst / (scale * scale);
}

FibrationCurve hopf_curve(const RealBasis& basis) {
  const auto& e = basis.e;
  return {{to_w(e[3] + kI * e[4]), to_w(e[1] + kI * e[2])}};
}

FibrationCurve standard_curve(int sign) { return {{kH0, h1(sign)}}; }

FibrationCurve reparametrize(const FibrationCurve& c, const Moebius2& m) {
  const int n = c.nominal_degree();
  const Polynomial Z{{m(0, 1), m(0, 0)}};
  const Polynomial W{{m(1, 1), m(1, 0)}};
  FibrationCurve out{std::vector<WVector>(c.coeffs.size(), WVector{})};
  for (int k = 0; k <= n; ++k) {
    Polynomial f{{1.0}};
    for (int i = 0; i < k; ++i) f = f * Z;
    for (int i = k; i < n; ++i) f = f * W;
    for (int t = 0; t <= n; ++t) out.coeffs[t] = sum(out.coeffs[t], scaled(c.coeffs[k], f.c[t]));
  }
  return out;
}

FibrationCurve push_forward(const WIsometry& g, const FibrationCurve& c) {
  FibrationCurve out = c;
  for (WVector& v : out.coeffs) v = g.apply(v);
  return out;
}

FibrationCurve reduce(const FibrationCurve& c, double tol) {
  if (c.coeffs.empty() || c.max_abs() == 0.0) throw Error(ErrorKind::ZeroCurve, "all coefficients vanish");
  FibrationCurve cur = c;
  for (int attempt = 0; attempt < 3; ++attempt) {
    const RootSet roots = projective_roots(combination(cur, attempt));
    if (roots.identically_zero) continue;
    for (const RootCluster& r : roots.roots) {
      for (int m = 0; m < r.multiplicity && cur.nominal_degree() > 0 && common_root(cur, r.point, tol); ++m) {
        cur = deflate_curve(cur, r.point);
      }
    }
    return cur;
  }
  throw Error(ErrorKind::RootFindingFailed, "degenerate coordinate combination");
}

int curve_degree(const FibrationCurve& c, double tol) { return reduce(c, tol).nominal_degree(); }

Polynomial incidence_polynomial(const S3Point& p, const FibrationCurve& c) {
  const RealWVector pr = point_circle_real(p);
  WVector pc;
  for (int a = 0; a < 5; ++a) pc[a] = pr[a];
  Polynomial out{std::vector<Complex>(c.coeffs.size())};
  for (std::size_t k = 0; k < c.coeffs.size(); ++k) out.c[k] = G(pc, c.coeffs[k]);
  return out;
}

SampleReport validate_sample(const FibrationCurve& c, std::uint64_t seed, std::uint64_t index) {
  SampleReport r;
  r.index = index;
  const S3Point x = Rng::stream(seed, index).s3_point();
  r.point = x.q();
  RootSet roots;
  try {
    roots = projective_roots(incidence_polynomial(x, c));
  } catch (const Error& e) {
    r.reason = e.what();
    return r;
  }
  r.identically_zero = roots.identically_zero;
  r.distinct_roots = roots.distinct();
  if (roots.identically_zero) {
    r.reason = "point lies on every circle";
    return r;
  }
  if (roots.distinct() != 1) {
    r.reason = roots.distinct() == 0 ? "point lies on no circle" : "point lies on several circles";
    return r;
  }
  r.multiplicity = roots.roots[0].multiplicity;
  try {
    if (c.circle_at(roots.roots[0].point).is_point_circle()) {
      r.degenerate_circle = true;
      r.reason = "fiber is a point circle";
      return r;
    }
  } catch (const Error& e) {
    r.degenerate_circle = true;
    r.reason = e.what();
    return r;
  }
  r.passed = true;
  return r;
}

namespace {

FibrationReport collect(std::vector<SampleReport>& all) {
  FibrationReport out;
  out.samples = static_cast<int>(all.size());
  for (SampleReport& s : all) {
    if (!s.passed) {
      ++out.failures;
      out.failed.push_back(std::move(s));
    }
  }
  return out;
}

}  // namespace

FibrationReport validate_fibration(const FibrationCurve& c, int samples, std::uint64_t seed) {
  std::vector<SampleReport> all(static_cast<std::size_t>(std::max(samples, 0)));
#pragma omp parallel for schedule(dynamic, 16)
  for (int i = 0; i < samples; ++i) all[i] = validate_sample(c, seed, static_cast<std::uint64_t>(i));
  return collect(all);
}

FibrationReport validate_fibration_ref(const FibrationCurve& c, int samples, std::uint64_t seed) {
  std::vector<SampleReport> all;
  for (int i = 0; i < samples; ++i) all.push_back(validate_sample(c, seed, static_cast<std::uint64_t>(i)));
  return collect(all);
}

double curve_distance(const FibrationCurve& a, const FibrationCurve& b) {
  const std::size_t n = std::max(a.coeffs.size(), b.coeffs.size());
  const Eigen::VectorXcd u = stacked(a, n);
  const Eigen::VectorXcd v = stacked(b, n);
  if (u.norm() == 0.0 || v.norm() == 0.0) return 1.0;
  const Eigen::VectorXcd vn = v / v.norm();
  return (u - vn * vn.dot(u)).norm() / u.norm();
}

Normalization normalize_curve(const FibrationCurve& c, double tol) {
  const FibrationCurve r = reduce(c);
  if (r.nominal_degree() != 1) {
    throw Error(ErrorKind::NotDegreeOne, "normalization needs a degree one curve", r.nominal_degree());
  }
  const WVector& a = r.coeffs[0];
  const WVector& b = r.coeffs[1];

  // Real timelike normal of span(a, b, conj a, conj b).
  Eigen::Matrix<double, 4, 5> rows;
  for (int k = 0; k < 5; ++k) {
    rows(0, k) = kMetric[k] * a[k].real();
    rows(1, k) = kMetric[k] * a[k].imag();
    rows(2, k) = kMetric[k] * b[k].real();
    rows(3, k) = kMetric[k] * b[k].imag();
  }
  Eigen::JacobiSVD<Eigen::Matrix<double, 4, 5>> svd(rows, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  if (!(sv(3) > 1e-9 * sv(0))) throw Error(ErrorKind::NormalizationFailed, "curve span is degenerate", sv(3) / sv(0));
  Eigen::Matrix<double, 5, 1> t = svd.matrixV().col(4);
  const double tt = -t(0) * t(0) + t.tail<4>().squaredNorm();
  if (!(tt < 0.0)) throw Error(ErrorKind::NormalizationFailed, "normal of the curve span is not timelike", tt);
  t /= std::sqrt(-tt);
  if (t(0) < 0.0) t = -t;

  // Boost taking t to e0.
  WIsometry::Matrix boost = WIsometry::Matrix::Identity();
  const Eigen::Vector4d tv = t.tail<4>();
  boost(0, 0) = t(0);
  boost.block<1, 4>(0, 1) = -tv.transpose();
  boost.block<4, 1>(1, 0) = -tv;
  if (tv.squaredNorm() > 0.0) {
    boost.block<4, 4>(1, 1) += (t(0) - 1.0) / tv.squaredNorm() * tv * tv.transpose();
  }

  // Rotation taking Re, Im of the boosted gamma(0) to e3, e4.
  Eigen::Vector4d x, y;
  for (int k = 0; k < 4; ++k) {
    Complex s{};
    for (int l = 0; l < 5; ++l) s += boost(k + 1, l) * a[l];
    x(k) = s.real();
    y(k) = s.imag();
  }
  if (!(x.norm() > 0.0)) throw Error(ErrorKind::NormalizationFailed, "vanishing circle at z = 0");
  const Eigen::Vector4d xh = x.normalized();
  const Eigen::Vector4d yh = (y - y.dot(xh) * xh).normalized();
  // Complete with the coordinate axes that survive projection best, so the
  // standard curve gets the identity.
  std::vector<Eigen::Vector4d> frame{xh, yh};
  for (int pick = 0; pick < 2; ++pick) {
    Eigen::Vector4d best = Eigen::Vector4d::Zero();
    for (int k = 0; k < 4; ++k) {
      Eigen::Vector4d f = Eigen::Vector4d::Unit(k);
      for (const auto& u : frame) f -= f.dot(u) * u;
      if (f.norm() > best.norm() + 1e-12) best = f;
    }
    frame.push_back(best.normalized());
  }
  Eigen::Matrix4d rot;
  rot.row(0) = frame[2].transpose();
  rot.row(1) = frame[3].transpose();
  rot.row(2) = xh.transpose();
  rot.row(3) = yh.transpose();
  if (rot.determinant() < 0.0) rot.row(1) *= -1.0;
  WIsometry::Matrix lift = WIsometry::Matrix::Identity();
  lift.block<4, 4>(1, 1) = rot;

  const WIsometry g = WIsometry::from_matrix(lift * boost);
  const WVector ga = g.apply(a);
  const WVector gb = g.apply(b);
  const Complex kappa0 = hdot(kH0, ga) / 2.0;
  const int sign = std::abs(gb[2] - kI * gb[1]) <= std::abs(gb[2] + kI * gb[1]) ? 1 : -1;
  const Complex beta1 = gb[1];
  const Complex beta3 = hdot(kH0, gb) / 2.0;

  Normalization out;
  out.g = g;
  out.sign = sign;
  out.moebius << beta1, 0.0, beta3, kappa0;
  if (!(std::abs(out.moebius.determinant()) > 0.0)) {
    throw Error(ErrorKind::NormalizationFailed, "singular coordinate change");
  }
  out.residual = curve_distance(push_forward(g, reparametrize(r, out.moebius.inverse())), standard_curve(sign));
  if (!(out.residual < tol)) throw Error(ErrorKind::NormalizationFailed, "residual above tolerance", out.residual);
  return out;
}

FibrationCurve fit_curve_from_circles(const std::vector<CircleRep>& circles, double rank_tol) {
  if (circles.empty()) throw Error(ErrorKind::EmptyInput, "no circles to fit");
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(circles.size()), 5);
  for (std::size_t i = 0; i < circles.size(); ++i) {
    const WVector w = circles[i].w();
    const double n = norm(w);
    for (int a = 0; a < 5; ++a) m(static_cast<Eigen::Index>(i), a) = w[a] / n;
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  int rank = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k) rank += sv(k) > rank_tol * sv(0) ? 1 : 0;
  if (rank > 2) throw Error(ErrorKind::FitFailed, "circles span more than a line", rank);
  FibrationCurve out;
  for (int k = 0; k < rank; ++k) {
    WVector v;
    for (int a = 0; a < 5; ++a) v[a] = std::conj(svd.matrixV()(a, k));
    out.coeffs.push_back(v);
  }
  if (out.null_defect() > 1e-6) throw Error(ErrorKind::FitFailed, "fitted span is not null", out.null_defect());
  return out;
}

}  // namespace circlespace

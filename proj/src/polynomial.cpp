#include "circlespace/polynomial.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "circlespace/error.hpp"

namespace circlespace {

bool CP1::is_infinity(double tol) const {
  const CP1 n = normalized();
  return std::abs(n.w) <= tol;
}

CP1 CP1::normalized() const {
  const double s = std::hypot(std::abs(z), std::abs(w));
  if (s == 0.0) throw Error(ErrorKind::DegenerateInput, "zero point of CP^1");
  return {z / s, w / s};
}

double chordal_distance(const CP1& a, const CP1& b) {
  const CP1 p = a.normalized();
  const CP1 q = b.normalized();
  return std::abs(p.z * q.w - p.w * q.z);
}

Complex Polynomial::operator()(Complex t) const {
  Complex r{};
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * t + *it;
  return r;
}

Complex Polynomial::operator()(const CP1& p) const {
  Complex r{};
  Complex zk{1.0};
  const int n = nominal_degree();
  for (int k = 0; k <= n; ++k) {
    r += c[k] * zk * std::pow(p.w, n - k);
    zk *= p.z;
  }
  return r;
}

double Polynomial::max_abs() const {
  double m = 0.0;
  for (const Complex& a : c) m = std::max(m, std::abs(a));
  return m;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.c.empty() || b.c.empty()) return {};
  Polynomial r{std::vector<Complex>(a.c.size() + b.c.size() - 1)};
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    for (std::size_t k = 0; k < b.c.size(); ++k) r.c[i + k] += a.c[i] * b.c[k];
  }
  return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial r{std::vector<Complex>(std::max(a.c.size(), b.c.size()))};
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  return r;
}

Polynomial operator*(Complex s, Polynomial a) {
  for (Complex& x : a.c) x *= s;
  return a;
}

RootSet projective_roots(const Polynomial& p, double cluster_tol, double zero_tol) {
  RootSet out;
  const double scale = p.max_abs();
  if (p.c.empty() || scale == 0.0 || !std::isfinite(scale)) {
    if (!std::isfinite(scale)) throw Error(ErrorKind::RootFindingFailed, "non-finite coefficients");
    out.identically_zero = true;
    return out;
  }
  const auto small = [&](Complex a) { return std::abs(a) <= zero_tol * scale; };
  int hi = p.nominal_degree();
  int lo = 0;
  while (small(p.c[hi])) --hi;
  while (small(p.c[lo])) ++lo;

  std::vector<CP1> raw;
  for (int k = hi; k < p.nominal_degree(); ++k) raw.push_back(CP1::infinity());
  for (int k = 0; k < lo; ++k) raw.push_back(CP1::affine(0.0));
  const int m = hi - lo;
  if (m == 1) {
    raw.push_back(CP1{-p.c[lo], p.c[hi]}.normalized());
  } else if (m > 1) {
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(m, m);
    for (int r = 1; r < m; ++r) companion(r, r - 1) = 1.0;
    for (int r = 0; r < m; ++r) companion(r, m - 1) = -p.c[lo + r] / p.c[hi];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    if (solver.info() != Eigen::Success) throw Error(ErrorKind::RootFindingFailed, "eigenvalue iteration failed");
    for (int r = 0; r < m; ++r) {
      const Complex t = solver.eigenvalues()(r);
      if (!std::isfinite(t.real()) || !std::isfinite(t.imag())) {
        throw Error(ErrorKind::RootFindingFailed, "non-finite root");
      }
      raw.push_back(CP1::affine(t).normalized());
    }
  }

  for (const CP1& r : raw) {
    auto hit = std::find_if(out.roots.begin(), out.roots.end(),
                            [&](const RootCluster& k) { return chordal_distance(k.point, r) < cluster_tol; });
    if (hit == out.roots.end()) {
      out.roots.push_back({r.normalized(), 1});
    } else {
      ++hit->multiplicity;
    }
  }
  return out;
}

Polynomial deflate(const Polynomial& p, const CP1& r) {
  const int n = p.nominal_degree();
  if (n <= 0) return Polynomial{{}};
  const CP1 q = r.normalized();
  Polynomial out{std::vector<Complex>(n)};
  if (std::abs(q.z) <= std::abs(q.w)) {
    // Synthetic division by (t - root) in the affine chart.
    const Complex t = q.z / q.w;
    Complex carry{};
    for (int k = n; k >= 1; --k) {
      carry = p.c[k] + carry * t;
      out.c[k - 1] = carry;
    }
  } else {
    // Same in the chart around infinity, s = 1/t.
    const Complex s = q.w / q.z;
    Complex carry{};
    for (int k = 0; k < n; ++k) {
      carry = p.c[k] + carry * s;
      out.c[k] = carry;
    }
  }
  return out;
}

}  // namespace circlespace

#pragma once

#include <vector>

#include "circlespace/quaternion.hpp"
#include "circlespace/tolerances.hpp"

namespace circlespace {

// Point [z : w] of CP^1; the affine chart is z/w, infinity is [1 : 0].
struct CP1 {
  Complex z{1.0};
  Complex w{0.0};

  static CP1 affine(Complex t) { return {t, 1.0}; }
  static CP1 infinity() { return {1.0, 0.0}; }

  bool is_infinity(double tol = 1e-12) const;
  CP1 normalized() const;
};

// sin of the angle between the two points on the Riemann sphere.
double chordal_distance(const CP1& a, const CP1& b);

// Polynomial sum c[k] t^k of nominal degree c.size() - 1. Read as a binary
// form of that degree, sum c[k] z^k w^(n-k), vanishing leading coefficients
// are roots at infinity.
struct Polynomial {
  std::vector<Complex> c;

  int nominal_degree() const { return static_cast<int>(c.size()) - 1; }
  Complex operator()(Complex t) const;
  // Homogeneous evaluation of the binary form.
  Complex operator()(const CP1& p) const;
  double max_abs() const;
};

Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator*(Complex s, Polynomial a);

struct RootCluster {
  CP1 point;
  int multiplicity = 1;
};

struct RootSet {
  bool identically_zero = false;
  std::vector<RootCluster> roots;

  int distinct() const { return static_cast<int>(roots.size()); }
};

// Roots of the binary form on CP^1 with multiplicity; roots within
// cluster_tol in chordal distance are merged. Coefficients below
// zero_tol * max |c| count as zero. Throws Error{RootFindingFailed}.
RootSet projective_roots(const Polynomial& p, double cluster_tol = active_tolerances().root_cluster,
                         double zero_tol = 1e-12);

// Divide the binary form by the linear form vanishing at r (nominal degree
// drops by one; remainder discarded).
Polynomial deflate(const Polynomial& p, const CP1& r);

}  // namespace circlespace

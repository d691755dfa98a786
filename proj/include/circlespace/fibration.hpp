#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "circlespace/circle.hpp"
#include "circlespace/moebius.hpp"
#include "circlespace/polynomial.hpp"

namespace circlespace {

// gamma([z : w]) = sum_k z^k w^(n-k) v_k with v_k in W (real-basis
// coordinates), i.e. v_0 is the circle at z = 0 and v_n the one at infinity.
struct FibrationCurve {
  std::vector<WVector> coeffs;

  int nominal_degree() const { return static_cast<int>(coeffs.size()) - 1; }
  WVector operator()(const CP1& p) const;
  CircleRep circle_at(const CP1& p) const;
  // Coordinate polynomial a of the five.
  Polynomial coordinate(int a) const;
  // Largest coefficient of G(gamma, gamma), relative to the coefficient size.
  double null_defect() const;
  double max_abs() const;
};

FibrationCurve hopf_curve(const RealBasis& basis = canonical_real_basis());

// 2x2 complex matrix acting on [z : w] columns.
using Moebius2 = Eigen::Matrix2cd;

// gamma'(p) = gamma(m p).
FibrationCurve reparametrize(const FibrationCurve& c, const Moebius2& m);
FibrationCurve push_forward(const WIsometry& g, const FibrationCurve& c);

// Removes the common roots of the coordinate polynomials (tol_gcd).
// Throws Error{ZeroCurve}.
FibrationCurve reduce(const FibrationCurve& c, double tol = active_tolerances().gcd);
int curve_degree(const FibrationCurve& c, double tol = active_tolerances().gcd);

// z -> G(point_circle(p), gamma(z)).
Polynomial incidence_polynomial(const S3Point& p, const FibrationCurve& c);

struct SampleReport {
  std::uint64_t index = 0;
  Quaternion point;
  int distinct_roots = 0;
  int multiplicity = 0;
  bool identically_zero = false;
  bool degenerate_circle = false;
  bool passed = false;
  std::string reason;
};

struct FibrationReport {
  int samples = 0;
  int failures = 0;
  bool passed() const { return samples > 0 && failures == 0; }
  // Failing samples only.
  std::vector<SampleReport> failed;
};

// Sample i is Rng::stream(seed, i).s3_point(). The parallel and serial
// versions return identical reports.
FibrationReport validate_fibration(const FibrationCurve& c, int samples, std::uint64_t seed = 0);
FibrationReport validate_fibration_ref(const FibrationCurve& c, int samples, std::uint64_t seed = 0);
SampleReport validate_sample(const FibrationCurve& c, std::uint64_t seed, std::uint64_t index);

struct Normalization {
  // g carries the curve, read in the coordinate z' = moebius * [z : w],
  // to [z' (e1 + sign i e2) + w' (e3 + i e4)].
  WIsometry g = WIsometry::identity();
  Moebius2 moebius = Moebius2::Identity();
  int sign = 1;
  double residual = 0.0;
};

// Throws Error{NotDegreeOne} and Error{NormalizationFailed}.
Normalization normalize_curve(const FibrationCurve& c, double tol = 1e-8);

// The standard curve with the given sign on e2.
FibrationCurve standard_curve(int sign);

// Curve through a family of circles: the complex span of their W vectors is
// the linear span of the curve. Rank 1 gives a constant curve, rank 2 a line.
// Throws Error{FitFailed} with the rank for higher-degree families.
FibrationCurve fit_curve_from_circles(const std::vector<CircleRep>& circles,
                                      double rank_tol = active_tolerances().fit_rank);

// Projective distance of the stacked coefficient vectors.
double curve_distance(const FibrationCurve& a, const FibrationCurve& b);

}  // namespace circlespace

#pragma once

#include <array>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "circlespace/circle.hpp"
#include "circlespace/moebius.hpp"
#include "circlespace/polynomial.hpp"
#include "circlespace/tangent.hpp"

namespace circlespace {

struct Monomial {
  Complex coeff;
  std::array<int, 4> exps{};

  int degree() const { return exps[0] + exps[1] + exps[2] + exps[3]; }
};

// Homogeneous polynomial F(z1, z2, z3, z4) given as a sparse term list.
class Surface {
 public:
  // Merges equal monomials and drops zero ones. Throws Error{DegenerateInput}
  // for a zero or inhomogeneous polynomial.
  static Surface from_terms(const std::vector<Monomial>& terms);
  // Micro-grammar: "z1^2*z4 - z2*z3^2", "(1.5-2i)*z1*z3 + 3 z2^2", "i*z4".
  // Throws Error{ParseError} (value = offending offset) or
  // Error{DegenerateInput}.
  static Surface parse(const std::string& text);

  int degree() const { return degree_; }
  const std::vector<Monomial>& terms() const { return terms_; }
  Complex operator()(const CVector4& z) const;
  std::string to_string() const;

  // Binary form t -> F(v + t vj) on the twistor fiber over x, nominal
  // degree d; a root t = z/w stands for the line [w v + z vj].
  Polynomial restrict_to_fiber(const FiberBasis& basis) const;

 private:
  Surface(std::vector<Monomial> terms, int degree) : terms_(std::move(terms)), degree_(degree) {}
  std::vector<Monomial> terms_;
  int degree_;
};

// The unique point of A cap Q over x. Throws Error{FieldUndefined} when the
// fiber misses A or lies inside it, Error{MultiValued} (value = number of
// distinct roots) and Error{RootFindingFailed}.
UnitTangent surface_tangent(const Surface& f, const S3Point& x);
TangentField surface_distribution(const Surface& f);

// y -> dPhi(T(Phi^-1 y)).
TangentField push_field(const ConformalMap& phi, TangentField field);

struct LeafOptions {
  double step = 1e-3;
  double max_t = 8.0 * std::numbers::pi;
  double tol_close = active_tolerances().close;
};

struct Leaf {
  std::vector<S3Point> samples;
  bool closed = false;
  // Distance of the closest return to the start (after leaving it).
  double closure_error = 0.0;
  // Arc length at the closest return; only meaningful when closed.
  double period = 0.0;
};

// RK4 for x' = x mu(x), renormalized to S^3 after each step. Throws
// Error{FieldUndefined} when the field is undefined along the way.
Leaf integrate_leaf(const TangentField& field, const S3Point& x0, const LeafOptions& options = {});

// One leaf per start point; the first error (in index order) is rethrown.
std::vector<Leaf> integrate_leaves(const TangentField& field, const std::vector<S3Point>& starts,
                                   const LeafOptions& options = {});
std::vector<Leaf> integrate_leaves_ref(const TangentField& field, const std::vector<S3Point>& starts,
                                       const LeafOptions& options = {});

struct CircleFit {
  bool is_circle = false;
  double max_deviation = 0.0;
  std::optional<CircleRep> circle;
};

// Circle through three spread samples, deviation = max incidence defect of
// all samples. Throws Error{DegenerateInput} for fewer than 8 samples or
// when five triples in a row are degenerate.
CircleFit leaf_is_circle(const Leaf& leaf, double tol = active_tolerances().circle_fit);

// conformality_residual at each point; NaN where the field is undefined.
std::vector<double> conformality_scan(const TangentField& field, const std::vector<S3Point>& points, double h = 1e-3);
std::vector<double> conformality_scan_ref(const TangentField& field, const std::vector<S3Point>& points,
                                          double h = 1e-3);

// Point i is Rng::stream(seed, i).s3_point().
std::vector<S3Point> sample_points(std::uint64_t seed, int count);

}  // namespace circlespace

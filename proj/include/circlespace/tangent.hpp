#pragma once

#include <functional>

#include "circlespace/projective.hpp"
#include "circlespace/quaternion.hpp"

namespace circlespace {

// Unit tangent vector of S^3 at x, stored by left translation: the actual
// vector in R^4 = H is x*mu with mu a unit imaginary quaternion.
class UnitTangent {
 public:
  // Throws Error{NotImaginary} / Error{NotUnit} when mu violates the invariants.
  static UnitTangent from(const S3Point& x, const Quaternion& mu, double tol = active_tolerances().unit);
  // Builds the tangent from an ambient vector v at x (v need not be unit
  // or exactly tangent; its tangential part is used).
  static UnitTangent from_vector(const S3Point& x, const Quaternion& v);

  const S3Point& x() const { return x_; }
  const Quaternion& mu() const { return mu_; }
  Quaternion vector() const { return x_.q() * mu_; }

 private:
  friend UnitTangent line_to_tangent(const class ProjPoint& e);
  UnitTangent(const S3Point& x, const Quaternion& mu) : x_(x), mu_(mu) {}
  S3Point x_;
  Quaternion mu_;
};

// Oriented unit direction field on (part of) S^3. Must be safe to call
// concurrently; partial fields throw Error{FieldUndefined} or
// Error{MultiValued} where they have no value.
using TangentField = std::function<UnitTangent(const S3Point&)>;

// [(x,1) lambda] with mu lambda = lambda i; lambda = mu + i away from
// mu = -i and lambda = j + mu k near it (2j at mu = -i).
ProjPoint tangent_to_line(const UnitTangent& t);

// Inverse of tangent_to_line; throws Error{NotIsotropic} off Q.
UnitTangent line_to_tangent(const ProjPoint& e);

// Oriented cross product on T_x S^3: x * Im((x^-1 a)(x^-1 b)).
// Throws Error{DegenerateInput} when a or b is not tangent at x.
Quaternion cross(const S3Point& x, const Quaternion& a, const Quaternion& b);

// max over X in {X, T x X} of |T x nabla_X T - nabla_{T x X} T| with the
// round-sphere Levi-Civita derivative taken by central differences of step h
// along geodesics. Throws Error{DegenerateInput} for h outside [1e-6, 1e-2].
double conformality_residual(const TangentField& field, const S3Point& x, double h = 1e-3);

// The Hopf field x -> x*i.
UnitTangent hopf_field(const S3Point& x);

}  // namespace circlespace

#pragma once

#include <utility>

#include "circlespace/quaternion.hpp"
#include "circlespace/tolerances.hpp"

namespace circlespace {

// sin of the Hermitian angle between two nonzero representatives; 0 iff
// they span the same complex line.
double projective_distance(const CVector4& u, const CVector4& v);

// |<u,v>|^2 >= (1 - tol) |u|^2 |v|^2 on the standard Hermitian product.
bool same_line(const CVector4& u, const CVector4& v, double tol = active_tolerances().proj);

// A point of CP^3 stored as a representative whose largest-modulus
// coordinate equals 1.
class ProjPoint {
 public:
  // Throws Error{DegenerateInput} on the zero vector.
  static ProjPoint from(const CVector4& v);

  const CVector4& rep() const { return rep_; }

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return same_line(a.rep_, b.rep_); }

 private:
  explicit ProjPoint(const CVector4& v) : rep_(v) {}
  CVector4 rep_;
};

// A point of HP^1 = S^4; representative right-scaled so that the
// larger-norm quaternionic coordinate equals 1.
class HPoint {
 public:
  static HPoint from(const QVector2& v);

  const QVector2& rep() const { return rep_; }

 private:
  explicit HPoint(const QVector2& v) : rep_(v) {}
  QVector2 rep_;
};

// Unit quaternion, identified with the isotropic quaternionic line [x:1].
class S3Point {
 public:
  // Throws Error{NotUnit} when | |x| - 1 | >= tol.
  static S3Point from(const Quaternion& x, double tol = active_tolerances().unit);
  // Radial projection; throws Error{DegenerateInput} on zero.
  static S3Point normalize(const Quaternion& x);

  const Quaternion& q() const { return x_; }

 private:
  explicit S3Point(const Quaternion& x) : x_(x) {}
  Quaternion x_;
};

inline double distance(const S3Point& a, const S3Point& b) { return (a.q() - b.q()).norm(); }

HPoint twistor_project(const ProjPoint& e);

bool is_in_Q(const ProjPoint& e, double tol = active_tolerances().null);
bool is_in_Q(const CVector4& v, double tol = active_tolerances().null);
bool is_in_S3(const HPoint& l, double tol = active_tolerances().null);

// The S^3 point x with l = [x:1]; throws Error{NotIsotropic} off S^3.
S3Point to_s3(const HPoint& l, double tol = active_tolerances().null);

struct FiberBasis {
  CVector4 v;   // to_c4((x,1))
  CVector4 vj;  // v*j
};

// The twistor fiber over x is P span{v, vj}. Both vectors are (,)-isotropic
// and (v, vj) = 0, so the whole fiber lies in Q.
FiberBasis fiber_basis(const S3Point& x);

}  // namespace circlespace

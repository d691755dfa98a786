#pragma once

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "circlespace/projective.hpp"
#include "circlespace/quaternion.hpp"
#include "circlespace/tangent.hpp"

namespace circlespace {

// Element of Lambda^2 C^4 in the basis E_a ^ E_b, ordered
// (12, 13, 14, 23, 24, 34).
struct Bivector {
  std::array<Complex, 6> c{};

  enum Index { k12 = 0, k13, k14, k23, k24, k34 };

  static Bivector basis(Index i) {
    Bivector b;
    b.c[i] = 1.0;
    return b;
  }

  Bivector& operator+=(const Bivector& o) {
    for (std::size_t a = 0; a < 6; ++a) c[a] += o.c[a];
    return *this;
  }
  Bivector& operator-=(const Bivector& o) {
    for (std::size_t a = 0; a < 6; ++a) c[a] -= o.c[a];
    return *this;
  }
  Bivector& operator*=(Complex s) {
    for (auto& x : c) x *= s;
    return *this;
  }
  double norm2() const {
    double s = 0.0;
    for (const auto& x : c) s += std::norm(x);
    return s;
  }
  double norm() const { return std::sqrt(norm2()); }
};

inline Bivector operator+(Bivector a, const Bivector& b) { return a += b; }
inline Bivector operator-(Bivector a, const Bivector& b) { return a -= b; }
inline Bivector operator*(Complex s, Bivector a) { return a *= s; }
inline Bivector operator*(Bivector a, Complex s) { return a *= s; }

Bivector wedge(const CVector4& u, const CVector4& v);

// Omega viewed as a linear functional on Lambda^2: c12 - c34.
Complex omega_pairing(const Bivector& a);

// G(a,b) = -(coefficient of E1^E2^E3^E4 in a^b); the symmetric form 1/2 Omega^Omega.
Complex G(const Bivector& a, const Bivector& b);

// Conjugate-linear involution induced by v ^ w -> (vj) ^ (wj).
Bivector sigma(const Bivector& a);

// Coordinates of an element of W in the canonical real basis e0..e4.
using WVector = std::array<Complex, 5>;
using RealWVector = std::array<double, 5>;

// Lorentz signature of G in the real basis: diag(-1, 1, 1, 1, 1).
inline constexpr std::array<double, 5> kMetric{-1.0, 1.0, 1.0, 1.0, 1.0};

Complex G(const WVector& a, const WVector& b);
double G(const RealWVector& a, const RealWVector& b);

struct RealBasis {
  std::array<Bivector, 5> e;
};

// e0 = (E12+E34)/sqrt2, e1 = (E13+E24)/sqrt2, e2 = i(E13-E24)/sqrt2,
// e3 = (E14-E23)/sqrt2, e4 = i(E14+E23)/sqrt2.
const RealBasis& canonical_real_basis();

// Coordinates w.r.t. canonical_real_basis(); only meaningful on W.
WVector to_w(const Bivector& a);
Bivector from_w(const WVector& w);

double norm(const WVector& w);
double projective_distance(const WVector& a, const WVector& b);
WVector conj(const WVector& w);

// A point of the quadric Q^3 in P(W): an oriented circle, or a point
// circle (real point) standing for a point of S^3.
class CircleRep {
 public:
  // Throws Error{NotInW} / Error{NonNull} when the invariants fail.
  static CircleRep from(const Bivector& b);
  static CircleRep from(const WVector& w);

  const Bivector& bivector() const { return b_; }
  WVector w() const { return to_w(b_); }

  // sigma(k) = k projectively.
  bool is_point_circle() const;

 private:
  explicit CircleRep(const Bivector& b) : b_(b) {}
  Bivector b_;
};

bool same_circle(const CircleRep& a, const CircleRep& b, double tol = 1e-9);

// [v ^ vj] for the fiber basis over x.
CircleRep point_circle(const S3Point& x);

// Point circle as a real future-pointing null vector of R^{1,4}.
RealWVector point_circle_real(const S3Point& x);

// The circle through which both tangents pass in positive direction.
// Throws Error{NotCotangent} when Omega(T,S) != 0, Error{DegenerateInput}
// when the base points coincide.
CircleRep circle_from_tangents(const UnitTangent& t1, const UnitTangent& t2);

// Both orientations of the circle through three distinct points. The first
// entry is the orientation that runs p1 -> p2 -> p3.
std::pair<CircleRep, CircleRep> circle_through_points(const S3Point& p1, const S3Point& p2, const S3Point& p3);

// Normalized value |G(point_circle(p), k)| / (|.| |.|).
double incidence_defect(const S3Point& p, const CircleRep& k);

bool is_incident(const S3Point& p, const CircleRep& k, double tol = active_tolerances().incidence);

// Basis (p, q) of the contact line of a non-degenerate circle with
// (p,p) = 1, (q,q) = -1, (p,q) = 0; the tangents of the circle are the
// lines [e^{i theta} p + q].
struct CircleFrame {
  CVector4 p;
  CVector4 q;

  UnitTangent tangent_at(double theta) const;
  // Parameter of the (unique) tangent of the circle at a point lying on it.
  double angle_of(const S3Point& x) const;
};

// Throws Error{NotInW}/Error{NonNull} on invalid input and
// Error{DegenerateCircle} for point circles.
CircleFrame circle_frame(const CircleRep& k);

struct CircleSample {
  S3Point point;
  UnitTangent tangent;
};

std::vector<CircleSample> parametrize_circle(const CircleRep& k, int n);

}  // namespace circlespace

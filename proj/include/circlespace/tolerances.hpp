#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace circlespace {

// Tolerance bundle shared by all predicates. Defaults are the pinned values;
// the CLI may replace the active bundle once at startup (CIRCLESPACE_TOL).
struct Tolerances {
  double null = 1e-9;         // relative isotropy / Omega-null tests
  double unit = 1e-9;         // | |x| - 1 |, |Re mu|
  double proj = 1e-9;         // projective equality: 1 - cos^2(angle)
  double incidence = 1e-8;    // |G(point, circle)| on normalized reps
  double real_point = 1e-7;   // projective distance sigma(k) vs k for point circles
  double group = 1e-10;       // conformal-map invariant defect
  double gcd = 1e-6;          // common-root detection in curve_degree
  double root_cluster = 1e-6; // merge radius for polynomial roots
  double close = 1e-6;        // leaf closure
  double circle_fit = 1e-6;   // leaf_is_circle deviation threshold
  double fit_rank = 1e-7;     // singular-value threshold for curve fitting
};

// Parses "key=value[,key=value...]" on top of `base`. Unknown keys and
// malformed numbers throw Error{ParseError}.
Tolerances parse_tolerances(std::string_view overrides, Tolerances base = {});

const Tolerances& active_tolerances();

// Not thread-safe; call before any concurrent work starts.
void set_active_tolerances(const Tolerances& tol);

}  // namespace circlespace

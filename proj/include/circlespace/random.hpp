#pragma once

#include <cstdint>
#include <random>

#include "circlespace/projective.hpp"
#include "circlespace/quaternion.hpp"

namespace circlespace {

// Deterministic sampler. Only raw mt19937_64 output is used (its sequence
// is fixed by the standard); the distributions are written out here so
// results do not depend on the standard library vendor.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Independent stream for task `index` of a run seeded with `seed`.
  static Rng stream(std::uint64_t seed, std::uint64_t index);

  double uniform();                     // [0, 1)
  double uniform(double lo, double hi);
  double normal();
  Complex complex_normal();

  Quaternion quaternion();              // Gaussian coefficients
  Quaternion unit_quaternion();
  Quaternion unit_imaginary();
  S3Point s3_point();
  CVector4 c4();

 private:
  std::mt19937_64 engine_;
};

}  // namespace circlespace

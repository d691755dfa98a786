#include "circlespace/random.hpp"

#include <cmath>
#include <numbers>

namespace circlespace {

Rng Rng::stream(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer decorrelates neighbouring task indices.
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return Rng(z ^ (z >> 31));
}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::normal() {
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex Rng::complex_normal() {
  const double re = normal();
  return {re, normal()};
}

Quaternion Rng::quaternion() {
  Quaternion q;
  q.w = normal();
  q.x = normal();
  q.y = normal();
  q.z = normal();
  return q;
}

Quaternion Rng::unit_quaternion() {
  for (;;) {
    const Quaternion q = quaternion();
    if (q.norm() > 1e-6) return q.normalized();
  }
}

Quaternion Rng::unit_imaginary() {
  for (;;) {
    Quaternion q = quaternion();
    q.w = 0.0;
    if (q.norm() > 1e-6) return q.normalized();
  }
}

S3Point Rng::s3_point() { return S3Point::normalize(unit_quaternion()); }

CVector4 Rng::c4() {
  CVector4 v;
  for (std::size_t a = 0; a < 4; ++a) v[a] = complex_normal();
  return v;
}

}  // namespace circlespace

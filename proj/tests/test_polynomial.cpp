#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "circlespace/error.hpp"
#include "circlespace/polynomial.hpp"
#include "circlespace/random.hpp"

using namespace circlespace;

namespace {

Polynomial from_roots(const std::vector<Complex>& roots) {
  Polynomial p{{1.0}};
  for (Complex r : roots) p = p * Polynomial{{-r, 1.0}};
  return p;
}

}  // namespace

TEST(Polynomial, EvaluatesAffineAndHomogeneous) {
  const Polynomial p{{1.0, 2.0, 3.0}};
  EXPECT_EQ(p(Complex{2.0}), Complex{17.0});
  EXPECT_EQ(p(CP1{2.0, 1.0}), Complex{17.0});
  EXPECT_EQ(p(CP1::infinity()), Complex{3.0});
}

TEST(Polynomial, DistinctRoots) {
  const RootSet r = projective_roots(from_roots({1.0, 2.0}));
  ASSERT_EQ(r.distinct(), 2);
  for (const auto& c : r.roots) EXPECT_EQ(c.multiplicity, 1);
}

TEST(Polynomial, DoubleRootIsClustered) {
  const RootSet r = projective_roots(from_roots({Complex{0.3, -1.2}, Complex{0.3, -1.2}}));
  ASSERT_EQ(r.distinct(), 1);
  EXPECT_EQ(r.roots[0].multiplicity, 2);
  EXPECT_LT(chordal_distance(r.roots[0].point, CP1::affine({0.3, -1.2})), 1e-7);
}

TEST(Polynomial, VanishingLeadingCoefficientIsRootAtInfinity) {
  const RootSet r = projective_roots(Polynomial{{1.0, 1.0, 0.0}});
  ASSERT_EQ(r.distinct(), 2);
  const bool has_inf = std::any_of(r.roots.begin(), r.roots.end(), [](const RootCluster& c) { return c.point.is_infinity(); });
  EXPECT_TRUE(has_inf);
  const RootSet constant = projective_roots(Polynomial{{2.0, 0.0}});
  ASSERT_EQ(constant.distinct(), 1);
  EXPECT_TRUE(constant.roots[0].point.is_infinity());
}

TEST(Polynomial, ZeroAndConstant) {
  EXPECT_TRUE(projective_roots(Polynomial{{0.0, 0.0}}).identically_zero);
  const RootSet c = projective_roots(Polynomial{{3.0}});
  EXPECT_FALSE(c.identically_zero);
  EXPECT_EQ(c.distinct(), 0);
}

TEST(Polynomial, RecoversRandomRoots) {
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 5;
    std::vector<Complex> roots;
    for (int k = 0; k < n; ++k) roots.push_back(rng.complex_normal());
    const RootSet r = projective_roots((rng.complex_normal() + 0.1) * from_roots(roots));
    int total = 0;
    for (const auto& c : r.roots) total += c.multiplicity;
    EXPECT_EQ(total, n);
    for (Complex z : roots) {
      double d = 1.0;
      for (const auto& c : r.roots) d = std::min(d, chordal_distance(c.point, CP1::affine(z)));
      EXPECT_LT(d, 1e-8);
    }
  }
}

TEST(Polynomial, DeflateBothCharts) {
  const Polynomial p = from_roots({1.0, 3.0});
  const Polynomial q = deflate(p, CP1::affine(1.0));
  ASSERT_EQ(q.nominal_degree(), 1);
  EXPECT_LT(std::abs(q.c[0] - Complex{-3.0}), 1e-15);
  EXPECT_LT(std::abs(q.c[1] - Complex{1.0}), 1e-15);
  const Polynomial far = deflate(p, CP1::affine(3.0));
  EXPECT_LT(std::abs(far(Complex{1.0})), 1e-14);
  EXPECT_GT(std::abs(far(Complex{3.0})), 0.1);
  const Polynomial inf = deflate(Polynomial{{1.0, 1.0, 0.0}}, CP1::infinity());
  ASSERT_EQ(inf.nominal_degree(), 1);
  EXPECT_EQ(inf.c[0], Complex{1.0});
  EXPECT_EQ(inf.c[1], Complex{1.0});
}

TEST(Polynomial, ChordalDistance) {
  EXPECT_NEAR(chordal_distance(CP1::affine(0.0), CP1::infinity()), 1.0, 1e-15);
  EXPECT_NEAR(chordal_distance(CP1::affine(1.0), CP1{2.0, 2.0}), 0.0, 1e-15);
  EXPECT_THROW(CP1({0.0, 0.0}).normalized(), Error);
}

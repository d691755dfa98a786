#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "circlespace/error.hpp"
#include "circlespace/fibration.hpp"
#include "circlespace/foliation.hpp"
#include "circlespace/random.hpp"

using namespace circlespace;

namespace {

constexpr double kPi = std::numbers::pi;

double qdiff(const Quaternion& a, const Quaternion& b) { return (a - b).norm(); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::ParseError;
}

// z4 composed with the inverse of a conformal map: a linear surface whose
// leaves are the image of the z4 = 0 leaves.
Surface moved_z4(const ConformalMap& phi) {
  const Eigen::Matrix4cd inv = to_complex(phi.matrix()).inverse();
  std::vector<Monomial> terms;
  for (int a = 0; a < 4; ++a) {
    std::array<int, 4> e{};
    e[a] = 1;
    terms.push_back({inv(3, a), e});
  }
  return Surface::from_terms(terms);
}

Leaf bent_great_circle(int n) {
  Leaf l;
  for (int k = 0; k < n; ++k) {
    const double t = 2.0 * kPi * k / n;
    l.samples.push_back(S3Point::normalize(Quaternion{std::cos(t), std::sin(t), 0.1 * std::sin(2.0 * t), 0.0}));
  }
  l.closed = true;
  return l;
}

}  // namespace

TEST(Surface, ParsesMonomials) {
  const Surface z4 = Surface::parse("z4");
  EXPECT_EQ(z4.degree(), 1);
  ASSERT_EQ(z4.terms().size(), 1u);
  EXPECT_EQ(z4.terms()[0].coeff, Complex{1.0});
  EXPECT_EQ(z4.terms()[0].exps, (std::array<int, 4>{0, 0, 0, 1}));

  const Surface f = Surface::parse("z1^2*z4 - z2*z3^2");
  EXPECT_EQ(f.degree(), 3);
  const CVector4 z{{Complex{1.0, 2.0}, Complex{-0.5, 0.3}, Complex{0.2, 0.0}, Complex{0.0, 1.5}}};
  EXPECT_LT(std::abs(f(z) - (z[0] * z[0] * z[3] - z[1] * z[2] * z[2])), 1e-15);

  const Surface g = Surface::parse("(1.5-2i)*z1*z3 + 3 z2^2 - i*z4 z4 + (2i) z1 z2");
  EXPECT_EQ(g.degree(), 2);
  const Complex expected = Complex{1.5, -2.0} * z[0] * z[2] + 3.0 * z[1] * z[1] - kI * z[3] * z[3] + Complex{0.0, 2.0} * z[0] * z[1];
  EXPECT_LT(std::abs(g(z) - expected), 1e-14);
  EXPECT_LT(std::abs(Surface::parse(g.to_string())(z) - expected), 1e-14);
  EXPECT_EQ(Surface::parse("-z1 + 2.5e-1*z2").terms().size(), 2u);
}

TEST(Surface, RejectsBadInput) {
  EXPECT_EQ(kind_of([] { Surface::parse("z5"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { Surface::parse("z1 +"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { Surface::parse("z1 ^ x"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { Surface::parse("(1+2i z1"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { Surface::parse(""); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { Surface::parse("z1 + z2^2"); }), ErrorKind::DegenerateInput);
  EXPECT_EQ(kind_of([] { Surface::parse("z1 - z1"); }), ErrorKind::DegenerateInput);
}

TEST(Surface, RestrictionMatchesDirectEvaluation) {
  Rng rng(41);
  const Surface f = Surface::parse("z1^2*z4 - z2*z3^2 + (0.5+i) z4^3");
  for (int n = 0; n < 50; ++n) {
    const FiberBasis b = fiber_basis(rng.s3_point());
    const Polynomial p = f.restrict_to_fiber(b);
    EXPECT_EQ(p.nominal_degree(), 3);
    const Complex t = rng.complex_normal();
    EXPECT_LT(std::abs(p(t) - f(b.v + b.vj * t)), 1e-12);
  }
}

TEST(Surface, Z4GivesHopfTangents) {
  const Surface z4 = Surface::parse("z4");
  const UnitTangent t = surface_tangent(z4, S3Point::from(Quaternion::one()));
  EXPECT_LT(qdiff(t.x().q(), Quaternion::one()), 1e-15);
  EXPECT_LT(qdiff(t.mu(), Quaternion::i()), 1e-15);
  Rng rng(42);
  for (int n = 0; n < 200; ++n) {
    const S3Point x = rng.s3_point();
    EXPECT_LT(qdiff(surface_tangent(z4, x).mu(), Quaternion::i()), 1e-12);
    EXPECT_LT(qdiff(surface_tangent(Surface::parse("z4^2"), x).mu(), Quaternion::i()), 1e-6);
  }
}

TEST(Surface, Z2AtOne) {
  // F(v + t vj) = t over x = 1, the same root as z4.
  const UnitTangent t = surface_tangent(Surface::parse("z2"), S3Point::from(Quaternion::one()));
  EXPECT_LT(qdiff(t.mu(), Quaternion::i()), 1e-15);
}

TEST(Surface, PartialField) {
  const S3Point one = S3Point::from(Quaternion::one());
  EXPECT_EQ(kind_of([&] { surface_tangent(Surface::parse("z3*z4"), one); }), ErrorKind::MultiValued);
  EXPECT_EQ(kind_of([&] { surface_tangent(Surface::parse("z1 - z3"), one); }), ErrorKind::FieldUndefined);
  EXPECT_EQ(kind_of([&] { surface_tangent(Surface::parse("2"), one); }), ErrorKind::FieldUndefined);
}

TEST(Leaf, HopfLeafThroughOne) {
  const Leaf l = integrate_leaf(hopf_field, S3Point::from(Quaternion::one()));
  EXPECT_TRUE(l.closed);
  EXPECT_LT(l.closure_error, 1e-8);
  EXPECT_NEAR(l.period, 2.0 * kPi, 1e-8);
  for (std::size_t n = 0; n < l.samples.size(); n += 97) {
    const Quaternion exact = exp_imag(Quaternion::i() * (1e-3 * static_cast<double>(n)));
    EXPECT_LT(qdiff(l.samples[n].q(), exact), 1e-10);
  }
  for (std::size_t n = 1; n < l.samples.size(); ++n) EXPECT_LT(distance(l.samples[n], l.samples[n - 1]), 1.01e-3);
}

TEST(Leaf, HopfLeafThroughJ) {
  const Leaf l = integrate_leaf(hopf_field, S3Point::from(Quaternion::j()));
  EXPECT_TRUE(l.closed);
  EXPECT_NEAR(l.period, 2.0 * kPi, 1e-8);
  const CircleFit fit = leaf_is_circle(l);
  EXPECT_TRUE(fit.is_circle);
}

TEST(Leaf, TruncatedLeafIsOpen) {
  const Leaf l = integrate_leaf(hopf_field, S3Point::from(Quaternion::one()), {1e-3, 1.0, 1e-6});
  EXPECT_FALSE(l.closed);
  EXPECT_GT(l.closure_error, 0.5);
}

TEST(Leaf, HopfLeafIsCircle) {
  const Leaf l = integrate_leaf(hopf_field, S3Point::from(Quaternion::one()));
  const CircleFit fit = leaf_is_circle(l);
  EXPECT_TRUE(fit.is_circle);
  EXPECT_LT(fit.max_deviation, 1e-7);
  const CircleRep e13 = CircleRep::from(Bivector::basis(Bivector::k13));
  EXPECT_TRUE(same_circle(*fit.circle, e13, 1e-7));
}

TEST(Leaf, BentGreatCircleIsNotACircle) {
  const CircleFit fit = leaf_is_circle(bent_great_circle(400));
  EXPECT_FALSE(fit.is_circle);
  EXPECT_GT(fit.max_deviation, 1e-2);
  Leaf tiny = bent_great_circle(5);
  EXPECT_EQ(kind_of([&] { leaf_is_circle(tiny); }), ErrorKind::DegenerateInput);
}

TEST(Leaf, ParallelMatchesSerial) {
  const TangentField f = surface_distribution(moved_z4(random_conformal(4)));
  const std::vector<S3Point> starts = sample_points(5, 4);
  const LeafOptions opts{2e-3, 8.0 * kPi, 1e-6};
  const auto a = integrate_leaves(f, starts, opts);
  const auto b = integrate_leaves_ref(f, starts, opts);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].closed, b[i].closed);
    EXPECT_EQ(a[i].closure_error, b[i].closure_error);
    ASSERT_EQ(a[i].samples.size(), b[i].samples.size());
    EXPECT_EQ(qdiff(a[i].samples.back().q(), b[i].samples.back().q()), 0.0);
  }
  const auto pts = sample_points(6, 20);
  EXPECT_EQ(conformality_scan(f, pts), conformality_scan_ref(f, pts));
}

TEST(Leaf, Z4Foliation) {
  const TangentField f = surface_distribution(Surface::parse("z4"));
  std::vector<CircleRep> circles;
  for (const Leaf& l : integrate_leaves(f, sample_points(1, 8))) {
    EXPECT_TRUE(l.closed);
    EXPECT_LT(l.closure_error, 1e-6);
    const CircleFit fit = leaf_is_circle(l);
    EXPECT_TRUE(fit.is_circle);
    circles.push_back(*fit.circle);
  }
  for (double r : conformality_scan(f, sample_points(2, 100))) EXPECT_LT(r, 1e-5);
  const FibrationCurve c = fit_curve_from_circles(circles);
  EXPECT_EQ(curve_degree(c), 1);
  EXPECT_TRUE(validate_fibration(c, 200).passed());
  const Normalization n = normalize_curve(c);
  EXPECT_LT(n.residual, 1e-8);
  RecordProperty("z4_sign", n.sign);
}

TEST(Leaf, MovedLinearSurfaceIsConformal) {
  for (std::uint64_t s = 0; s < 3; ++s) {
    const TangentField f = surface_distribution(moved_z4(random_conformal(20 + s)));
    for (const Leaf& l : integrate_leaves(f, sample_points(s, 3))) {
      EXPECT_TRUE(l.closed);
      EXPECT_TRUE(leaf_is_circle(l).is_circle);
    }
    for (double r : conformality_scan(f, sample_points(s, 20), 1e-4)) EXPECT_LT(r, 1e-5);
  }
}

TEST(Leaf, SheardFieldIsNotConformal) {
  const TangentField sheared = [](const S3Point& x) {
    return UnitTangent::from(x, (Quaternion::i() + Quaternion::j() * (0.3 * x.q().w)).normalized());
  };
  for (double r : conformality_scan(sheared, sample_points(3, 20))) EXPECT_GT(r, 1e-2);
}

TEST(Leaf, Equivariance) {
  Rng rng(43);
  for (std::uint64_t s = 0; s < 5; ++s) {
    const ConformalMap phi = random_conformal(30 + s);
    const S3Point x0 = rng.s3_point();
    const Leaf original = integrate_leaf(hopf_field, x0);
    const Leaf pushed = integrate_leaf(push_field(phi, hopf_field), act_on_point(phi, x0));
    EXPECT_TRUE(pushed.closed);
    const CircleRep image = induced_on_W(phi).apply(*leaf_is_circle(original).circle);
    for (const S3Point& p : pushed.samples) EXPECT_LT(incidence_defect(p, image), 1e-8);
    for (std::size_t n = 0; n < original.samples.size(); n += 211) {
      EXPECT_LT(incidence_defect(act_on_point(phi, original.samples[n]), *leaf_is_circle(pushed).circle), 1e-8);
    }
  }
}

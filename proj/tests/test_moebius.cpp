#include <gtest/gtest.h>

#include <cmath>

#include "circlespace/error.hpp"
#include "circlespace/moebius.hpp"
#include "circlespace/random.hpp"

using namespace circlespace;

namespace {

const Quaternion k1 = Quaternion::one();
const Quaternion kj = Quaternion::j();

double qdiff(const Quaternion& a, const Quaternion& b) { return (a - b).norm(); }

// Push-forward of the geodesic velocity x*mu by central differences.
Quaternion numeric_push(const ConformalMap& phi, const UnitTangent& t, double h = 1e-5) {
  const auto at = [&](double s) { return act_on_point(phi, S3Point::normalize(t.x().q() * exp_imag(t.mu() * s))).q(); };
  const Quaternion d = (at(h) - at(-h)) * (0.5 / h);
  return d * (1.0 / d.norm());
}

UnitTangent random_tangent(Rng& rng) { return UnitTangent::from(rng.s3_point(), rng.unit_imaginary()); }

}  // namespace

TEST(Moebius, IdentityFixesPoints) {
  const ConformalMap id = check_conformal(QMatrix2::identity());
  Rng rng(1);
  for (int n = 0; n < 100; ++n) {
    const S3Point x = rng.s3_point();
    EXPECT_LT(distance(act_on_point(id, x), x), 1e-14);
  }
}

TEST(Moebius, LeftRotation) {
  Rng rng(2);
  const Quaternion u = rng.unit_quaternion();
  const ConformalMap phi = check_conformal(QMatrix2::diag(u, k1));
  for (int n = 0; n < 100; ++n) {
    const S3Point x = rng.s3_point();
    EXPECT_LT(qdiff(act_on_point(phi, x).q(), u * x.q()), 1e-13);
  }
}

TEST(Moebius, DiagJSendsOneToJ) {
  const ConformalMap phi = check_conformal(QMatrix2::diag(kj, k1));
  EXPECT_LT(qdiff(act_on_point(phi, S3Point::from(k1)).q(), kj), 1e-15);
}

TEST(Moebius, ScalingIsNotConformal) {
  const QMatrix2 m = QMatrix2::diag(2.0 * k1, k1);
  EXPECT_DOUBLE_EQ(conformal_defect(m), 3.0);
  try {
    check_conformal(m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotConformal);
    EXPECT_DOUBLE_EQ(e.value(), 3.0);
  }
}

TEST(Moebius, SwapFixesOneAndConjugates) {
  const ConformalMap swap = check_conformal(QMatrix2::antidiag(k1, k1));
  EXPECT_FALSE(swap.preserves_orientation());
  EXPECT_LT(qdiff(act_on_point(swap, S3Point::from(k1)).q(), k1), 1e-15);
  Rng rng(3);
  for (int n = 0; n < 50; ++n) {
    const S3Point x = rng.s3_point();
    EXPECT_LT(qdiff(act_on_point(swap, x).q(), x.q().conj()), 1e-13);
  }
}

TEST(Moebius, RandomConformalIsDeterministic) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ConformalMap a = random_conformal(seed);
    const ConformalMap b = random_conformal(seed);
    EXPECT_TRUE(a.preserves_orientation());
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) EXPECT_EQ(qdiff(a.matrix().m[r][c], b.matrix().m[r][c]), 0.0);
    }
    EXPECT_LT(conformal_defect(a.matrix()), 1e-12);
  }
}

TEST(Moebius, RandomConformalGoldenSeedZero) {
  const QMatrix2& m = random_conformal(0).matrix();
  // clang-format off
  const Quaternion expected[2][2] = {
    {Quaternion{-0.18399311695451426, -0.67478459979117633, -0.968415977580668, 1.0576971632240928}, Quaternion{-0.90453776172891365, 0.10028843382617714, 0.73630683971631972, -0.41874386367073624}},
    {Quaternion{-0.29760510913008192, -0.95484441841591894, 0.41797638147049243, 0.60888389541870858}, Quaternion{-0.29320876116620287, 1.4187862853148061, 0.65973118675689291, -0.10756104371995709}},
  };
  // clang-format on
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) EXPECT_LT(qdiff(m.m[r][c], expected[r][c]), 1e-12) << r << c;
  }
}

TEST(Moebius, PointActionIsFunctorial) {
  Rng rng(4);
  for (std::uint64_t s = 0; s < 50; ++s) {
    const ConformalMap f = random_conformal(2 * s);
    const ConformalMap g = random_conformal(2 * s + 1);
    const S3Point x = rng.s3_point();
    EXPECT_LT(distance(act_on_point(f * g, x), act_on_point(f, act_on_point(g, x))), 1e-12);
  }
}

TEST(Moebius, LineActionMatchesPointAction) {
  Rng rng(5);
  for (std::uint64_t s = 0; s < 50; ++s) {
    const ConformalMap f = random_conformal(100 + s);
    const UnitTangent t = random_tangent(rng);
    const ProjPoint e = act_on_line(f, tangent_to_line(t));
    EXPECT_TRUE(is_in_Q(e));
    EXPECT_LT(distance(to_s3(twistor_project(e)), act_on_point(f, t.x())), 1e-12);
  }
}

TEST(Moebius, TangentActionMatchesDifferential) {
  Rng rng(6);
  for (std::uint64_t s = 0; s < 100; ++s) {
    const ConformalMap f = random_conformal(200 + s);
    const UnitTangent t = random_tangent(rng);
    const UnitTangent pushed = act_on_tangent(f, t);
    EXPECT_LT(distance(pushed.x(), act_on_point(f, t.x())), 1e-12);
    EXPECT_LT(qdiff(pushed.vector(), numeric_push(f, t)), 1e-7);
  }
}

TEST(Moebius, TangentActionOfReversingMap) {
  const ConformalMap swap = check_conformal(QMatrix2::antidiag(k1, k1));
  Rng rng(7);
  for (int n = 0; n < 100; ++n) {
    const ConformalMap f = random_conformal(300 + n) * swap;
    EXPECT_FALSE(f.preserves_orientation());
    const UnitTangent t = random_tangent(rng);
    EXPECT_LT(qdiff(act_on_tangent(f, t).vector(), numeric_push(f, t)), 1e-7);
  }
}

TEST(Moebius, InducedIsometryPreservesMetric) {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const WIsometry g = induced_on_W(random_conformal(s));
    EXPECT_LT(g.metric_defect(), 1e-9);
    EXPECT_NEAR(g.determinant(), 1.0, 1e-8);
    EXPECT_TRUE(g.orthochronous());
  }
  const WIsometry swap = induced_on_W(check_conformal(QMatrix2::antidiag(k1, k1)));
  EXPECT_NEAR(swap.determinant(), -1.0, 1e-12);
  EXPECT_TRUE(swap.orthochronous());
}

TEST(Moebius, InducedIsometryIsFunctorial) {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const ConformalMap f = random_conformal(400 + s);
    const ConformalMap g = random_conformal(500 + s);
    const WIsometry::Matrix lhs = induced_on_W(f * g).matrix();
    const WIsometry::Matrix rhs = induced_on_W(f).matrix() * induced_on_W(g).matrix();
    EXPECT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-9 * std::max(1.0, lhs.cwiseAbs().maxCoeff()));
  }
}

TEST(Moebius, InducedIsometryMovesPointCircles) {
  Rng rng(8);
  const ConformalMap swap = check_conformal(QMatrix2::antidiag(k1, k1));
  for (std::uint64_t s = 0; s < 50; ++s) {
    const ConformalMap f = s % 2 ? random_conformal(600 + s) : random_conformal(600 + s) * swap;
    const S3Point x = rng.s3_point();
    const CircleRep moved = induced_on_W(f).apply(point_circle(x));
    EXPECT_TRUE(same_circle(moved, point_circle(act_on_point(f, x)), 1e-9));
  }
}

TEST(Moebius, IncidenceIsInvariant) {
  Rng rng(9);
  for (std::uint64_t s = 0; s < 50; ++s) {
    const ConformalMap f = random_conformal(700 + s);
    const WIsometry g = induced_on_W(f);
    const S3Point a = rng.s3_point(), b = rng.s3_point(), c = rng.s3_point();
    const CircleRep k = circle_through_points(a, b, c).first;
    const CircleRep moved = g.apply(k);
    for (const S3Point& p : {a, b, c}) EXPECT_TRUE(is_incident(act_on_point(f, p), moved));
    const CircleRep direct = circle_through_points(act_on_point(f, a), act_on_point(f, b), act_on_point(f, c)).first;
    EXPECT_TRUE(same_circle(direct, moved, 1e-8));
  }
}

TEST(Moebius, WIsometryInverse) {
  const WIsometry g = induced_on_W(random_conformal(11));
  const WIsometry::Matrix p = (g * g.inverse()).matrix();
  EXPECT_LT((p - WIsometry::Matrix::Identity()).cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_THROW(WIsometry::from_matrix(2.0 * WIsometry::Matrix::Identity()), Error);
  EXPECT_NEAR(WIsometry::reflect_e2().determinant(), -1.0, 0.0);
}

TEST(Moebius, InducedKnownValues) {
  const WIsometry id = induced_on_W(check_conformal(QMatrix2::identity()));
  EXPECT_LT((id.matrix() - WIsometry::Matrix::Identity()).cwiseAbs().maxCoeff(), 1e-15);
  // x -> i x fixes the time direction: G(g e0, e0) = -1.
  const WIsometry g = induced_on_W(check_conformal(QMatrix2::diag(Quaternion::i(), k1)));
  EXPECT_NEAR(g.matrix()(0, 0), 1.0, 1e-15);
  EXPECT_NEAR(g.determinant(), 1.0, 1e-14);
}

TEST(Moebius, InverseUndoesTheMap) {
  Rng rng(12);
  const ConformalMap swap = check_conformal(QMatrix2::antidiag(k1, k1));
  for (std::uint64_t s = 0; s < 20; ++s) {
    const ConformalMap f = s % 2 ? random_conformal(s) : random_conformal(s) * swap;
    const S3Point x = rng.s3_point();
    EXPECT_LT(distance(act_on_point(f.inverse(), act_on_point(f, x)), x), 1e-12);
    EXPECT_EQ(f.inverse().form_sign(), f.form_sign());
  }
}

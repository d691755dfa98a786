#include "circlespace/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>

#include "circlespace/error.hpp"
#include "circlespace/fibration.hpp"
#include "circlespace/foliation.hpp"
#include "circlespace/random.hpp"

namespace circlespace {
namespace {

CheckRow timed(const std::string& name, const std::function<void(CheckRow&)>& body) {
  CheckRow row;
  row.name = name;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(row);
  } catch (const Error& e) {
    row.passed = false;
    row.detail = e.what();
  }
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return row;
}

void bound_above(CheckRow& row, double value, double bound) {
  row.value = value;
  row.bound = bound;
  row.passed = value < bound;
}

CircleRep random_circle(Rng& rng) {
  for (;;) {
    try {
      return circle_through_points(rng.s3_point(), rng.s3_point(), rng.s3_point()).first;
    } catch (const Error&) {
    }
  }
}

}  // namespace

std::vector<CheckRow> invariant_suite(const SuiteOptions& options) {
  const auto count = [&](int full) { return std::max(1, static_cast<int>(std::lround(full * options.scale))); };
  std::uint64_t stream = 0;
  const auto rng_for = [&] { return Rng::stream(options.seed, stream++); };
  std::vector<CheckRow> rows;

  rows.push_back(timed("form decomposition", [&](CheckRow& row) {
    Rng rng = rng_for();
    double worst = 0.0;
    for (int n = 0; n < count(10000); ++n) {
      const QVector2 v = from_c4(rng.c4()), w = from_c4(rng.c4());
      const FormValues f = eval_forms(v, w);
      const Quaternion rebuilt = Quaternion::from_complex(f.herm) + Quaternion::j() * Quaternion::from_complex(f.omega);
      worst = std::max(worst, (f.h - rebuilt).norm() / (1.0 + f.h.norm()));
    }
    bound_above(row, worst, 1e-12);
  }));

  rows.push_back(timed("tangent/line round trip", [&](CheckRow& row) {
    Rng rng = rng_for();
    double worst = 0.0;
    const int n = count(10000);
    for (int k = 0; k < n; ++k) {
      // Every fourth tangent sits close to mu = -i.
      Quaternion mu = rng.unit_imaginary();
      if (k % 4 == 0) mu = (Quaternion{0.0, -1.0, 0.0, 0.0} + mu * (1e-9 * std::pow(10.0, 8.0 * rng.uniform()))).imag().normalized();
      const UnitTangent t = UnitTangent::from(rng.s3_point(), mu);
      const UnitTangent back = line_to_tangent(tangent_to_line(t));
      worst = std::max({worst, distance(back.x(), t.x()), (back.mu() - t.mu()).norm()});
    }
    bound_above(row, worst, 1e-9);
  }));

  rows.push_back(timed("cotangent separation", [&](CheckRow& row) {
    Rng rng = rng_for();
    double worst = 0.0;
    for (int n = 0; n < count(1000); ++n) {
      const auto samples = parametrize_circle(random_circle(rng), 6);
      for (std::size_t a = 0; a < samples.size(); ++a) {
        for (std::size_t b = a + 1; b < samples.size(); ++b) {
          const CVector4 u = tangent_to_line(samples[a].tangent).rep(), v = tangent_to_line(samples[b].tangent).rep();
          worst = std::max(worst, std::abs(omega_form(u, v)) / (u.norm() * v.norm()));
        }
      }
    }
    int separated = 0;
    const int m = count(1000);
    for (int n = 0; n < m; ++n) {
      const CVector4 u = tangent_to_line(UnitTangent::from(rng.s3_point(), rng.unit_imaginary())).rep();
      const CVector4 v = tangent_to_line(UnitTangent::from(rng.s3_point(), rng.unit_imaginary())).rep();
      separated += std::abs(omega_form(u, v)) / (u.norm() * v.norm()) > 1e-3;
    }
    bound_above(row, worst, 1e-9);
    row.passed = row.passed && separated >= 0.99 * m;
    row.detail = std::to_string(separated) + "/" + std::to_string(m) + " random pairs separated";
  }));

  rows.push_back(timed("circle through three points", [&](CheckRow& row) {
    Rng rng = rng_for();
    double worst = 0.0;
    for (int n = 0; n < count(1000); ++n) {
      const S3Point p[3] = {rng.s3_point(), rng.s3_point(), rng.s3_point()};
      const CircleRep k = circle_through_points(p[0], p[1], p[2]).first;
      const CircleFrame frame = circle_frame(k);
      for (const S3Point& x : p) {
        const ProjPoint back = tangent_to_line(frame.tangent_at(frame.angle_of(x)));
        worst = std::max(worst, distance(to_s3(twistor_project(back)), x));
      }
    }
    bound_above(row, worst, 1e-7);
  }));

  rows.push_back(timed("real basis Gram form", [&](CheckRow& row) {
    const auto& e = canonical_real_basis().e;
    double worst = 0.0;
    for (int a = 0; a < 5; ++a) {
      worst = std::max(worst, (sigma(e[a]) - e[a]).norm());
      for (int b = 0; b < 5; ++b) {
        const double target = a == b ? kMetric[a] : 0.0;
        worst = std::max(worst, std::abs(G(e[a], e[b]) - target));
      }
    }
    bound_above(row, worst, 1e-12);
  }));

  rows.push_back(timed("Hopf curve has degree one", [&](CheckRow& row) {
    const FibrationCurve h = hopf_curve();
    const FibrationCurve two{{h.coeffs[0], WVector{}, h.coeffs[1]}};
    const int degree = curve_degree(h);
    const FibrationReport good = validate_fibration(h, count(1000), options.seed);
    const FibrationReport bad = validate_fibration(two, count(1000), options.seed);
    row.value = good.failures;
    row.bound = 1.0;
    row.passed = degree == 1 && good.passed() && !bad.passed();
    row.detail = "degree " + std::to_string(degree) + ", degree-two curve failures " + std::to_string(bad.failures);
  }));

  rows.push_back(timed("normalization round trip", [&](CheckRow& row) {
    double worst = 0.0;
    int plus = 0;
    const int n = count(100);
    for (int k = 0; k < n; ++k) {
      const ConformalMap phi = random_conformal(options.seed * 1000 + static_cast<std::uint64_t>(k));
      const Normalization norm = normalize_curve(push_forward(induced_on_W(phi), hopf_curve()));
      worst = std::max(worst, norm.residual);
      plus += norm.sign == 1;
    }
    bound_above(row, worst, 1e-8);
    row.passed = row.passed && plus == n;
  }));

  rows.push_back(timed("z4 = 0 foliation", [&](CheckRow& row) {
    const TangentField f = surface_distribution(Surface::parse("z4"));
    const auto leaves = integrate_leaves(f, sample_points(options.seed, count(64)));
    double worst_close = 0.0, worst_fit = 0.0;
    bool all_closed = true;
    std::vector<CircleRep> circles;
    for (const Leaf& l : leaves) {
      all_closed = all_closed && l.closed;
      worst_close = std::max(worst_close, l.closure_error);
      const CircleFit fit = leaf_is_circle(l);
      worst_fit = std::max(worst_fit, fit.max_deviation);
      circles.push_back(*fit.circle);
    }
    double worst_conf = 0.0;
    for (double r : conformality_scan(f, sample_points(options.seed + 1, count(100)))) worst_conf = std::max(worst_conf, r);
    const FibrationCurve c = fit_curve_from_circles(circles);
    const int degree = curve_degree(c);
    const Normalization norm = normalize_curve(c);
    row.value = std::max({worst_close, worst_fit, worst_conf});
    row.bound = 1e-6;
    row.passed = all_closed && worst_close < 1e-6 && worst_fit < 1e-6 && worst_conf < 1e-5 && degree == 1;
    row.detail = "fitted degree " + std::to_string(degree) + ", normalizes with sign " + (norm.sign > 0 ? "+" : "-");
  }));

  rows.push_back(timed("conformal equivariance", [&](CheckRow& row) {
    Rng rng = rng_for();
    double worst = 0.0;
    bool degree_ok = true;
    for (int n = 0; n < count(100); ++n) {
      const ConformalMap phi = random_conformal(options.seed * 7919 + static_cast<std::uint64_t>(n));
      const WIsometry g = induced_on_W(phi);
      const S3Point a = rng.s3_point(), b = rng.s3_point(), c = rng.s3_point();
      const CircleRep k = g.apply(circle_through_points(a, b, c).first);
      for (const S3Point& p : {a, b, c}) worst = std::max(worst, incidence_defect(act_on_point(phi, p), k));
      const auto samples = parametrize_circle(circle_through_points(a, b, c).first, 3);
      const CVector4 u = tangent_to_line(act_on_tangent(phi, samples[0].tangent)).rep();
      const CVector4 v = tangent_to_line(act_on_tangent(phi, samples[1].tangent)).rep();
      worst = std::max(worst, std::abs(omega_form(u, v)) / (u.norm() * v.norm()));
      degree_ok = degree_ok && curve_degree(push_forward(g, hopf_curve())) == 1;
    }
    bound_above(row, worst, 1e-8);
    row.passed = row.passed && degree_ok;
  }));

  return rows;
}

}  // namespace circlespace

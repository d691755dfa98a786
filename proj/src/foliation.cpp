#include "circlespace/foliation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <exception>
#include <limits>
#include <map>
#include <sstream>

#include "circlespace/error.hpp"
#include "circlespace/random.hpp"

namespace circlespace {
namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  std::vector<Monomial> parse() {
    std::vector<Monomial> out;
    skip();
    double sign = 1.0;
    if (peek('+') || peek('-')) sign = s_[pos_++] == '-' ? -1.0 : 1.0;
    for (;;) {
      Monomial m = term();
      m.coeff *= sign;
      out.push_back(m);
      skip();
      if (pos_ == s_.size()) return out;
      if (!(peek('+') || peek('-'))) fail("expected '+' or '-'");
      sign = s_[pos_++] == '-' ? -1.0 : 1.0;
    }
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::ParseError, "surface: " + what + " at offset " + std::to_string(pos_),
                static_cast<double>(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool at_number() {
    skip();
    return pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.');
  }

  double number() {
    skip();
    double v = 0.0;
    const auto [end, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (ec != std::errc()) fail("expected a number");
    pos_ = static_cast<std::size_t>(end - s_.data());
    return v;
  }

  // real | real i | i, optionally signed.
  Complex signed_part() {
    double sign = 1.0;
    if (peek('+') || peek('-')) sign = s_[pos_++] == '-' ? -1.0 : 1.0;
    double v = 1.0;
    const bool had_number = at_number();
    if (had_number) v = number();
    if (peek('i')) {
      ++pos_;
      return {0.0, sign * v};
    }
    if (!had_number) fail("expected a number or 'i'");
    return {sign * v, 0.0};
  }

  Complex parenthesized() {
    ++pos_;
    Complex c = signed_part();
    while (!peek(')')) {
      if (!(peek('+') || peek('-'))) fail("expected ')'");
      c += signed_part();
    }
    ++pos_;
    return c;
  }

  bool factor(Monomial& m) {
    if (peek('(')) {
      m.coeff *= parenthesized();
    } else if (at_number()) {
      const double v = number();
      if (peek('i')) {
        ++pos_;
        m.coeff *= Complex{0.0, v};
      } else {
        m.coeff *= v;
      }
    } else if (peek('i')) {
      ++pos_;
      m.coeff *= kI;
    } else if (peek('z')) {
      ++pos_;
      if (pos_ >= s_.size() || s_[pos_] < '1' || s_[pos_] > '4') fail("expected z1..z4");
      const int var = s_[pos_++] - '1';
      int power = 1;
      if (peek('^')) {
        ++pos_;
        skip();
        const std::size_t start = pos_;
        const auto [end, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), power);
        if (ec != std::errc() || power < 0) {
          pos_ = start;
          fail("expected a non-negative exponent");
        }
        pos_ = static_cast<std::size_t>(end - s_.data());
      }
      m.exps[var] += power;
    } else {
      return false;
    }
    return true;
  }

  Monomial term() {
    Monomial m{1.0, {}};
    if (!factor(m)) fail("expected a term");
    for (;;) {
      if (peek('*')) {
        ++pos_;
        if (!factor(m)) fail("expected a factor after '*'");
      } else if (!factor(m)) {
        return m;
      }
    }
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

std::string format_number(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

Quaternion step_from(const TangentField& field, const Quaternion& x, double h) {
  const auto f = [&](const Quaternion& y) { return field(S3Point::normalize(y)).vector(); };
  const Quaternion k1 = f(x);
  const Quaternion k2 = f(x + k1 * (0.5 * h));
  const Quaternion k3 = f(x + k2 * (0.5 * h));
  const Quaternion k4 = f(x + k3 * h);
  return (x + (k1 + 2.0 * k2 + 2.0 * k3 + k4) * (h / 6.0)).normalized();
}

}  // namespace

Surface Surface::from_terms(const std::vector<Monomial>& terms) {
  std::map<std::array<int, 4>, Complex> merged;
  for (const Monomial& m : terms) {
    if (std::any_of(m.exps.begin(), m.exps.end(), [](int e) { return e < 0; })) {
      throw Error(ErrorKind::DegenerateInput, "negative exponent");
    }
    merged[m.exps] += m.coeff;
  }
  std::vector<Monomial> out;
  int degree = -1;
  for (const auto& [exps, c] : merged) {
    if (c == Complex{}) continue;
    Monomial m{c, exps};
    if (degree >= 0 && m.degree() != degree) {
      throw Error(ErrorKind::DegenerateInput, "polynomial is not homogeneous", m.degree());
    }
    degree = m.degree();
    out.push_back(m);
  }
  if (out.empty()) throw Error(ErrorKind::DegenerateInput, "zero polynomial");
  // Highest powers of z1 first reads naturally.
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return a.exps > b.exps; });
  return Surface(std::move(out), degree);
}

Surface Surface::parse(const std::string& text) { return from_terms(Parser(text).parse()); }

Complex Surface::operator()(const CVector4& z) const {
  Complex s{};
  for (const Monomial& m : terms_) {
    Complex t = m.coeff;
    for (int a = 0; a < 4; ++a) {
      for (int k = 0; k < m.exps[a]; ++k) t *= z[a];
    }
    s += t;
  }
  return s;
}

std::string Surface::to_string() const {
  std::string out;
  for (const Monomial& m : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + format_number(m.coeff.real()) + (m.coeff.imag() < 0 ? "-" : "+") +
           format_number(std::abs(m.coeff.imag())) + "i)";
    for (int a = 0; a < 4; ++a) {
      if (m.exps[a] == 0) continue;
      out += "*z" + std::to_string(a + 1);
      if (m.exps[a] > 1) out += "^" + std::to_string(m.exps[a]);
    }
  }
  return out;
}

Polynomial Surface::restrict_to_fiber(const FiberBasis& basis) const {
  Polynomial out{std::vector<Complex>(static_cast<std::size_t>(degree_) + 1)};
  for (const Monomial& m : terms_) {
    Polynomial t{{m.coeff}};
    for (int a = 0; a < 4; ++a) {
      const Polynomial lin{{basis.v[a], basis.vj[a]}};
      for (int k = 0; k < m.exps[a]; ++k) t = t * lin;
    }
    out = out + t;
  }
  return out;
}

UnitTangent surface_tangent(const Surface& f, const S3Point& x) {
  const FiberBasis basis = fiber_basis(x);
  const RootSet roots = projective_roots(f.restrict_to_fiber(basis));
  if (roots.identically_zero) throw Error(ErrorKind::FieldUndefined, "twistor fiber lies in the surface");
  if (roots.distinct() == 0) throw Error(ErrorKind::FieldUndefined, "twistor fiber misses the surface");
  if (roots.distinct() > 1) throw Error(ErrorKind::MultiValued, "several tangents", roots.distinct());
  const CP1& r = roots.roots[0].point;
  return line_to_tangent(ProjPoint::from(basis.v * r.w + basis.vj * r.z));
}

TangentField surface_distribution(const Surface& f) {
  return [f](const S3Point& x) { return surface_tangent(f, x); };
}

TangentField push_field(const ConformalMap& phi, TangentField field) {
  const ConformalMap inv = phi.inverse();
  return [phi, inv, field = std::move(field)](const S3Point& y) {
    return act_on_tangent(phi, field(act_on_point(inv, y)));
  };
}

Leaf integrate_leaf(const TangentField& field, const S3Point& x0, const LeafOptions& options) {
  const double h = options.step;
  if (!(h > 0.0) || !(options.max_t > 0.0)) throw Error(ErrorKind::DegenerateInput, "step and max_t must be positive");
  const Quaternion start = x0.q();
  const Quaternion dir0 = field(x0).vector();
  Leaf leaf;
  leaf.samples.push_back(x0);
  leaf.closure_error = std::numeric_limits<double>::infinity();

  const int steps = static_cast<int>(std::ceil(options.max_t / h));
  bool armed = false;
  double d_prev2 = 0.0, d_prev = 0.0;
  Quaternion x = start;
  for (int n = 1; n <= steps; ++n) {
    x = step_from(field, x, h);
    const double d = (x - start).norm();
    leaf.samples.push_back(S3Point::normalize(x));
    if (!armed) {
      armed = d > 10.0 * h;
    } else if (n >= 3 && d_prev < d_prev2 && d_prev <= d && d_prev < 4.0 * h) {
      // Closest return near sample n-1: refine along the flow.
      const Quaternion base = leaf.samples[n - 1].q();
      double tau = 0.0;
      Quaternion y = base;
      for (int it = 0; it < 8; ++it) {
        const double g = dot(y - start, field(S3Point::normalize(y)).vector());
        tau -= g;
        y = step_from(field, base, tau);
        if (std::abs(g) < 1e-15) break;
      }
      const double err = (y - start).norm();
      leaf.closure_error = std::min(leaf.closure_error, err);
      if (err < options.tol_close && dot(field(S3Point::normalize(y)).vector(), dir0) > 0.0) {
        leaf.closed = true;
        leaf.closure_error = err;
        leaf.period = (n - 1) * h + tau;
        leaf.samples.erase(leaf.samples.begin() + n, leaf.samples.end());
        return leaf;
      }
    }
    d_prev2 = d_prev;
    d_prev = d;
  }
  if (!std::isfinite(leaf.closure_error)) leaf.closure_error = (x - start).norm();
  return leaf;
}

std::vector<Leaf> integrate_leaves(const TangentField& field, const std::vector<S3Point>& starts,
                                   const LeafOptions& options) {
  const int n = static_cast<int>(starts.size());
  std::vector<Leaf> leaves(starts.size());
  std::vector<std::exception_ptr> errors(starts.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < n; ++i) {
    try {
      leaves[i] = integrate_leaf(field, starts[i], options);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return leaves;
}

std::vector<Leaf> integrate_leaves_ref(const TangentField& field, const std::vector<S3Point>& starts,
                                       const LeafOptions& options) {
  std::vector<Leaf> leaves;
  for (const S3Point& x : starts) leaves.push_back(integrate_leaf(field, x, options));
  return leaves;
}

CircleFit leaf_is_circle(const Leaf& leaf, double tol) {
  const std::size_t n = leaf.samples.size();
  if (n < 8) throw Error(ErrorKind::DegenerateInput, "need at least 8 samples", static_cast<double>(n));
  for (std::size_t attempt = 0; attempt < 5; ++attempt) {
    const std::size_t off = attempt * n / 15;
    try {
      const CircleRep k = circle_through_points(leaf.samples[off], leaf.samples[(off + n / 3) % n],
                                                leaf.samples[(off + 2 * n / 3) % n])
                              .first;
      CircleFit fit;
      for (const S3Point& p : leaf.samples) fit.max_deviation = std::max(fit.max_deviation, incidence_defect(p, k));
      fit.is_circle = fit.max_deviation < tol;
      fit.circle = k;
      return fit;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DegenerateInput) throw;
    }
  }
  throw Error(ErrorKind::DegenerateInput, "no non-degenerate triple of samples");
}

namespace {

double residual_or_nan(const TangentField& field, const S3Point& x, double h) {
  try {
    return conformality_residual(field, x, h);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::DegenerateInput) throw;
    return std::numeric_limits<double>::quiet_NaN();
  }
}

}  // namespace

std::vector<double> conformality_scan(const TangentField& field, const std::vector<S3Point>& points, double h) {
  const int n = static_cast<int>(points.size());
  std::vector<double> out(points.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (int i = 0; i < n; ++i) out[i] = residual_or_nan(field, points[i], h);
  return out;
}

std::vector<double> conformality_scan_ref(const TangentField& field, const std::vector<S3Point>& points, double h) {
  std::vector<double> out;
  for (const S3Point& x : points) out.push_back(residual_or_nan(field, x, h));
  return out;
}

std::vector<S3Point> sample_points(std::uint64_t seed, int count) {
  std::vector<S3Point> out;
  for (int i = 0; i < count; ++i) out.push_back(Rng::stream(seed, static_cast<std::uint64_t>(i)).s3_point());
  return out;
}

}  // namespace circlespace

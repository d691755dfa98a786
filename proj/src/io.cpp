#include "circlespace/io.hpp"

#include <fstream>
#include <sstream>

#include "circlespace/error.hpp"

namespace circlespace::io {
namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

const json& array_of(const json& j, std::size_t n, const char* what) {
  if (!j.is_array() || j.size() != n) bad(std::string("expected ") + what);
  return j;
}

double number(const json& j) {
  if (!j.is_number()) bad("expected a number");
  return j.get<double>();
}

}  // namespace

json to_json(const Quaternion& q) { return json::array({q.w, q.x, q.y, q.z}); }

json to_json(Complex c) { return json::array({c.real(), c.imag()}); }

json to_json(const CVector4& v) {
  json j = json::array();
  for (const Complex& c : v.z) j.push_back(to_json(c));
  return j;
}

json to_json(const Bivector& b) {
  json j = json::array();
  for (const Complex& c : b.c) j.push_back(to_json(c));
  return j;
}

json to_json(const WVector& w) {
  json j = json::array();
  for (const Complex& c : w) j.push_back(to_json(c));
  return j;
}

json to_json(const CircleRep& k) {
  return {{"bivector", to_json(k.bivector())}, {"w", to_json(k.w())}, {"point_circle", k.is_point_circle()}};
}

json to_json(const QMatrix2& m) {
  return json::array({to_json(m.m[0][0]), to_json(m.m[0][1]), to_json(m.m[1][0]), to_json(m.m[1][1])});
}

json to_json(const WIsometry& g) {
  json j = json::array();
  for (int r = 0; r < 5; ++r) {
    for (int c = 0; c < 5; ++c) j.push_back(g.matrix()(r, c));
  }
  return j;
}

json to_json(const FibrationCurve& c) {
  json j = json::array();
  for (const WVector& v : c.coeffs) j.push_back(to_json(v));
  return j;
}

json to_json(const FibrationReport& r) {
  json failed = json::array();
  for (const SampleReport& s : r.failed) {
    failed.push_back({{"index", s.index},
                      {"point", to_json(s.point)},
                      {"distinct_roots", s.distinct_roots},
                      {"identically_zero", s.identically_zero},
                      {"degenerate_circle", s.degenerate_circle},
                      {"reason", s.reason}});
  }
  return {{"passed", r.passed()}, {"samples", r.samples}, {"failures", r.failures}, {"failed", failed}};
}

json to_json(const Normalization& n) {
  json m = json::array();
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) m.push_back(to_json(n.moebius(r, c)));
  }
  return {{"g", to_json(n.g)}, {"moebius", m}, {"sign", n.sign}, {"residual", n.residual}};
}

json to_json(const Leaf& l) {
  json samples = json::array();
  for (const S3Point& p : l.samples) samples.push_back(to_json(p.q()));
  return {{"closed", l.closed}, {"closure_error", l.closure_error}, {"period", l.period}, {"samples", samples}};
}

Quaternion quaternion_from(const json& j) {
  array_of(j, 4, "a quaternion [w, x, y, z]");
  return {number(j[0]), number(j[1]), number(j[2]), number(j[3])};
}

Complex complex_from(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  array_of(j, 2, "a complex number [re, im]");
  return {number(j[0]), number(j[1])};
}

Bivector bivector_from(const json& j) {
  const json& a = j.is_object() && j.contains("bivector") ? j["bivector"] : j;
  array_of(a, 6, "a bivector of 6 complex numbers");
  Bivector b;
  for (int k = 0; k < 6; ++k) b.c[k] = complex_from(a[k]);
  return b;
}

WVector wvector_from(const json& j) {
  array_of(j, 5, "a W vector of 5 complex numbers");
  WVector w;
  for (int k = 0; k < 5; ++k) w[k] = complex_from(j[k]);
  return w;
}

QMatrix2 qmatrix_from(const json& j) {
  array_of(j, 4, "a 2x2 quaternionic matrix as 4 quaternions");
  QMatrix2 m;
  for (int k = 0; k < 4; ++k) m.m[k / 2][k % 2] = quaternion_from(j[k]);
  return m;
}

WIsometry wisometry_from(const json& j) {
  array_of(j, 25, "a W isometry as 25 reals");
  WIsometry::Matrix g;
  for (int k = 0; k < 25; ++k) g(k / 5, k % 5) = number(j[k]);
  return WIsometry::from_matrix(g);
}

FibrationCurve curve_from(const json& j) {
  const json& a = j.is_object() && j.contains("curve") ? j["curve"] : j;
  if (!a.is_array() || a.empty()) bad("expected a non-empty list of W vectors");
  FibrationCurve c;
  for (const json& v : a) c.coeffs.push_back(wvector_from(v));
  return c;
}

Leaf leaf_from(const json& j) {
  if (!j.is_object() || !j.contains("samples") || !j["samples"].is_array()) bad("expected a leaf object with samples");
  Leaf l;
  for (const json& q : j["samples"]) l.samples.push_back(S3Point::normalize(quaternion_from(q)));
  l.closed = j.value("closed", false);
  l.closure_error = j.value("closure_error", 0.0);
  l.period = j.value("period", 0.0);
  return l;
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

void write_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::DegenerateInput, "cannot write " + path);
  out << j.dump(2) << '\n';
}

Quaternion parse_quaternion(const std::string& text) {
  std::string s = text;
  for (char& c : s) {
    if (c == ',' || c == '[' || c == ']') c = ' ';
  }
  std::istringstream in(s);
  double v[4];
  for (double& x : v) {
    if (!(in >> x)) bad("expected a quaternion \"w,x,y,z\", got \"" + text + "\"");
  }
  std::string rest;
  if (in >> rest) bad("trailing input in quaternion \"" + text + "\"");
  return {v[0], v[1], v[2], v[3]};
}

}  // namespace circlespace::io

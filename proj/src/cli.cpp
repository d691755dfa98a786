#include "circlespace/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>

#include "circlespace/error.hpp"
#include "circlespace/io.hpp"
#include "circlespace/render.hpp"
#include "circlespace/suite.hpp"

namespace circlespace {
namespace {

using io::json;
namespace fs = std::filesystem;

struct Settings {
  std::uint64_t seed = 0;
  std::string out_dir;

  double scale = 0.1;

  std::vector<std::string> points;
  bool normalize_points = false;

  std::string point;
  std::string circle;

  std::string curve_file;
  bool hopf = false;
  bool normalize = false;
  int samples = 1000;

  std::string surface;
  int seeds = 16;
  double step = 1e-3;
  double max_t = LeafOptions{}.max_t;
  int conformality_points = 100;
  int stride = 10;
  std::string leaves_name = "leaves.json";

  std::string leaves_file;
  std::string svg_out;
  std::string view = "1,0.8,0.6";
  double extent = 3.0;
};

fs::path artifact(const Settings& s, const std::string& name) {
  fs::path p(name);
  if (!s.out_dir.empty() && p.is_relative()) {
    fs::create_directories(s.out_dir);
    p = fs::path(s.out_dir) / p;
  }
  return p;
}

S3Point point_arg(const std::string& text, bool normalize) {
  const Quaternion q = io::parse_quaternion(text);
  return normalize ? S3Point::normalize(q) : S3Point::from(q);
}

int verify(const Settings& s, std::ostream& out) {
  const auto rows = invariant_suite({s.seed, s.scale});
  bool all = true;
  json report = json::array();
  out << std::left << std::setw(30) << "check" << std::setw(6) << "pass" << std::setw(12) << "value" << std::setw(12)
      << "bound" << std::setw(10) << "seconds"
      << "detail\n";
  for (const CheckRow& r : rows) {
    all = all && r.passed;
    char value[32], bound[32], secs[32];
    std::snprintf(value, sizeof value, "%.3e", r.value);
    std::snprintf(bound, sizeof bound, "%.1e", r.bound);
    std::snprintf(secs, sizeof secs, "%.3f", r.seconds);
    out << std::setw(30) << r.name << std::setw(6) << (r.passed ? "PASS" : "FAIL") << std::setw(12) << value
        << std::setw(12) << bound << std::setw(10) << secs << r.detail << '\n';
    report.push_back({{"name", r.name}, {"passed", r.passed}, {"value", r.value}, {"bound", r.bound}, {"detail", r.detail}});
  }
  if (!s.out_dir.empty()) io::write_file(artifact(s, "verify.json").string(), {{"seed", s.seed}, {"checks", report}});
  return all ? 0 : 1;
}

int circle(const Settings& s, std::ostream& out) {
  if (s.points.size() != 3) throw Error(ErrorKind::ParseError, "--points takes exactly three points");
  const S3Point a = point_arg(s.points[0], s.normalize_points);
  const S3Point b = point_arg(s.points[1], s.normalize_points);
  const S3Point c = point_arg(s.points[2], s.normalize_points);
  const auto [pos, neg] = circle_through_points(a, b, c);
  out << json{{"through_in_order", io::to_json(pos)}, {"reversed", io::to_json(neg)}}.dump(2) << '\n';
  return 0;
}

int incidence(const Settings& s, std::ostream& out) {
  const S3Point p = point_arg(s.point, false);
  const json given = !s.circle.empty() && (s.circle[0] == '[' || s.circle[0] == '{') ? io::parse(s.circle)
                                                                                       : io::read_file(s.circle);
  const CircleRep k = CircleRep::from(io::bivector_from(given));
  const auto [v, vj] = fiber_basis(p);
  const Complex g = G(wedge(v, vj), k.bivector());
  const double defect = incidence_defect(p, k);
  const bool on = defect < active_tolerances().incidence;
  out << json{{"G", io::to_json(g)}, {"defect", defect}, {"incident", on}}.dump(2) << '\n';
  return on ? 0 : 1;
}

int fibration(const Settings& s, std::ostream& out) {
  if (s.hopf == !s.curve_file.empty()) throw Error(ErrorKind::ParseError, "give exactly one of --curve and --hopf");
  const FibrationCurve c = s.hopf ? hopf_curve() : io::curve_from(io::read_file(s.curve_file));
  json result;
  result["degree"] = curve_degree(c);
  result["null_defect"] = c.null_defect();
  FibrationReport report = validate_fibration(c, s.samples, s.seed);
  bool ok = report.passed();
  if (report.failed.size() > 10) report.failed.resize(10);
  result["validation"] = io::to_json(report);
  if (s.normalize) {
    try {
      result["normalization"] = io::to_json(normalize_curve(c));
    } catch (const Error& e) {
      ok = false;
      result["normalization"] = {{"error", std::string(to_string(e.kind()))}, {"message", e.what()}, {"value", e.value()}};
    }
  }
  if (!s.out_dir.empty()) io::write_file(artifact(s, "fibration.json").string(), result);
  out << result.dump(2) << '\n';
  return ok ? 0 : 1;
}

int foliate(const Settings& s, std::ostream& out) {
  if (s.seeds < 1 || s.stride < 1) throw Error(ErrorKind::ParseError, "--seeds and --stride must be positive");
  const Surface f = Surface::parse(s.surface);
  const TangentField field = surface_distribution(f);
  const auto leaves = integrate_leaves(field, sample_points(s.seed, s.seeds), {s.step, s.max_t, active_tolerances().close});

  json stored = json::array();
  std::vector<CircleRep> circles;
  int closed = 0, round = 0;
  double worst_close = 0.0, worst_fit = 0.0;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    const Leaf& l = leaves[i];
    json j = io::to_json(l);
    Leaf thinned = l;
    thinned.samples.clear();
    for (std::size_t k = 0; k < l.samples.size(); k += static_cast<std::size_t>(s.stride)) thinned.samples.push_back(l.samples[k]);
    j["samples"] = io::to_json(thinned)["samples"];
    j["index"] = i;
    closed += l.closed;
    worst_close = std::max(worst_close, l.closure_error);
    if (l.samples.size() >= 8) {
      const CircleFit fit = leaf_is_circle(l);
      j["circle_deviation"] = fit.max_deviation;
      worst_fit = std::max(worst_fit, fit.max_deviation);
      round += fit.is_circle;
      if (fit.circle) circles.push_back(*fit.circle);
    }
    stored.push_back(j);
  }

  json summary{{"surface", f.to_string()}, {"seed", s.seed}, {"leaves", leaves.size()}, {"closed", closed},
               {"circles", round}, {"max_closure_error", worst_close}, {"max_circle_deviation", worst_fit}};
  double worst_conf = 0.0;
  int undefined = 0;
  for (double r : conformality_scan(field, sample_points(s.seed + 1, s.conformality_points))) {
    if (std::isnan(r)) {
      ++undefined;
    } else {
      worst_conf = std::max(worst_conf, r);
    }
  }
  summary["max_conformality_residual"] = worst_conf;
  summary["conformality_undefined"] = undefined;
  try {
    const FibrationCurve c = fit_curve_from_circles(circles);
    summary["fitted_curve"] = io::to_json(c);
    summary["fitted_degree"] = curve_degree(c);
    const Normalization n = normalize_curve(c);
    summary["normalization"] = io::to_json(n);
  } catch (const Error& e) {
    summary["fit_error"] = e.what();
  }
  const fs::path path = artifact(s, s.leaves_name);
  io::write_file(path.string(), {{"surface", f.to_string()}, {"seed", s.seed}, {"leaves", stored}});
  summary["written"] = path.string();
  out << summary.dump(2) << '\n';
  return closed == static_cast<int>(leaves.size()) && round == static_cast<int>(leaves.size()) ? 0 : 1;
}

int render(const Settings& s, std::ostream& out) {
  const json doc = io::read_file(s.leaves_file);
  const json& list = doc.is_object() && doc.contains("leaves") ? doc["leaves"] : doc;
  if (!list.is_array()) throw Error(ErrorKind::ParseError, "expected a list of leaves");
  std::vector<Leaf> leaves;
  for (const json& j : list) leaves.push_back(io::leaf_from(j));
  RenderOptions opts;
  const Quaternion v = io::parse_quaternion("0," + s.view);
  opts.view = Eigen::Vector3d(v.x, v.y, v.z);
  opts.extent = s.extent;
  const std::string svg = render_svg(leaves, opts);
  const fs::path path = artifact(s, s.svg_out);
  std::ofstream file(path);
  if (!file) throw Error(ErrorKind::DegenerateInput, "cannot write " + path.string());
  file << svg;
  std::size_t paths = 0;
  for (std::size_t at = svg.find("<path"); at != std::string::npos; at = svg.find("<path", at + 1)) ++paths;
  out << json{{"written", path.string()}, {"leaves", leaves.size()}, {"paths", paths}}.dump(2) << '\n';
  return 0;
}

void report_error(std::ostream& err, const std::string& kind, const std::string& message, double value) {
  err << json{{"error", kind}, {"message", message}, {"value", value}}.dump() << '\n';
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Conformal circle geometry on the 3-sphere"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", s.seed, "Seed for every pseudo-random choice");
  app.add_option("--out-dir", s.out_dir, "Directory for written artifacts");

  auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suite");
  verify_cmd->add_option("--scale", s.scale, "Fraction of the full sample counts")->check(CLI::PositiveNumber);

  auto* circle_cmd = app.add_subcommand("circle", "Oriented circles through three points");
  circle_cmd->add_option("--points", s.points, "Three unit quaternions w,x,y,z")->required()->expected(3);
  circle_cmd->add_flag("--normalize", s.normalize_points, "Normalize the points instead of rejecting them");

  auto* incidence_cmd = app.add_subcommand("incidence", "Incidence of a point and a circle");
  incidence_cmd->add_option("--point", s.point, "Unit quaternion w,x,y,z")->required();
  incidence_cmd->add_option("--circle", s.circle, "Bivector as inline JSON or a JSON file")->required();

  auto* fibration_cmd = app.add_subcommand("fibration", "Degree, validity and normal form of a fibration curve");
  fibration_cmd->add_option("--curve", s.curve_file, "JSON list of W coefficient vectors");
  fibration_cmd->add_flag("--hopf", s.hopf, "Use the standard Hopf curve");
  fibration_cmd->add_flag("--normalize", s.normalize, "Compute the normal form");
  fibration_cmd->add_option("--samples", s.samples, "Validation sample count")->check(CLI::PositiveNumber);

  auto* foliate_cmd = app.add_subcommand("foliate", "Integrate leaves of the foliation cut out by a surface");
  foliate_cmd->add_option("--surface", s.surface, "Homogeneous polynomial in z1..z4")->required();
  foliate_cmd->add_option("--seeds", s.seeds, "Number of leaves");
  foliate_cmd->add_option("--step", s.step, "Integration step")->check(CLI::PositiveNumber);
  foliate_cmd->add_option("--max-t", s.max_t, "Maximal arc length per leaf")->check(CLI::PositiveNumber);
  foliate_cmd->add_option("--conformality-points", s.conformality_points, "Points for the conformality scan");
  foliate_cmd->add_option("--stride", s.stride, "Keep every n-th sample in the written leaves");
  foliate_cmd->add_option("--leaves-out", s.leaves_name, "Leaves file name");

  auto* render_cmd = app.add_subcommand("render", "Stereographic SVG of integrated leaves");
  render_cmd->add_option("--leaves", s.leaves_file, "Leaves JSON written by foliate")->required();
  render_cmd->add_option("--out", s.svg_out, "SVG file")->required();
  render_cmd->add_option("--view", s.view, "View direction x,y,z");
  render_cmd->add_option("--extent", s.extent, "Half-width of the viewport")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    report_error(err, "ParseError", e.what(), 0.0);
    return 2;
  }

  try {
    const char* env = std::getenv("CIRCLESPACE_TOL");
    set_active_tolerances(env ? parse_tolerances(env) : Tolerances{});
    if (verify_cmd->parsed()) return verify(s, out);
    if (circle_cmd->parsed()) return circle(s, out);
    if (incidence_cmd->parsed()) return incidence(s, out);
    if (fibration_cmd->parsed()) return fibration(s, out);
    if (foliate_cmd->parsed()) return foliate(s, out);
    return render(s, out);
  } catch (const Error& e) {
    report_error(err, std::string(to_string(e.kind())), e.what(), e.value());
    return e.kind() == ErrorKind::ParseError ? 2 : 1;
  } catch (const std::exception& e) {
    report_error(err, "Failure", e.what(), 0.0);
    return 1;
  }
}

}  // namespace circlespace

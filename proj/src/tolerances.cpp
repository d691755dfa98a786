#include "circlespace/tolerances.hpp"

#include <charconv>
#include <string>

#include "circlespace/error.hpp"

namespace circlespace {
namespace {

Tolerances g_active{};

double* field(Tolerances& t, std::string_view key) {
  if (key == "null") return &t.null;
  if (key == "unit") return &t.unit;
  if (key == "proj") return &t.proj;
  if (key == "incidence") return &t.incidence;
  if (key == "real_point") return &t.real_point;
  if (key == "group") return &t.group;
  if (key == "gcd") return &t.gcd;
  if (key == "root_cluster") return &t.root_cluster;
  if (key == "close") return &t.close;
  if (key == "circle_fit") return &t.circle_fit;
  if (key == "fit_rank") return &t.fit_rank;
  return nullptr;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Tolerances parse_tolerances(std::string_view overrides, Tolerances base) {
  while (!overrides.empty()) {
    const auto comma = overrides.find(',');
    const auto item = trim(overrides.substr(0, comma));
    overrides = comma == std::string_view::npos ? std::string_view{} : overrides.substr(comma + 1);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorKind::ParseError, "tolerance entry without '=': " + std::string(item));
    }
    const auto key = trim(item.substr(0, eq));
    const auto text = trim(item.substr(eq + 1));
    double* slot = field(base, key);
    if (slot == nullptr) {
      throw Error(ErrorKind::ParseError, "unknown tolerance key: " + std::string(key));
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || !(value > 0.0)) {
      throw Error(ErrorKind::ParseError, "bad tolerance value for " + std::string(key));
    }
    *slot = value;
  }
  return base;
}

const Tolerances& active_tolerances() { return g_active; }

void set_active_tolerances(const Tolerances& tol) { g_active = tol; }

}  // namespace circlespace

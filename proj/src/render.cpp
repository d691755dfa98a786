#include "circlespace/render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "circlespace/error.hpp"

namespace circlespace {
namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

Eigen::Vector3d stereographic(const S3Point& x) {
  const Quaternion& q = x.q();
  return Eigen::Vector3d(q.x, q.y, q.z) / (1.0 + q.w);
}

std::string render_svg(const std::vector<Leaf>& leaves, const RenderOptions& options) {
  if (leaves.empty()) throw Error(ErrorKind::EmptyInput, "no leaves to render");
  if (!(options.view.norm() > 0.0)) throw Error(ErrorKind::DegenerateInput, "zero view direction");
  const Eigen::Vector3d w = options.view.normalized();
  const Eigen::Vector3d helper = std::abs(w.z()) < 0.9 ? Eigen::Vector3d::UnitZ() : Eigen::Vector3d::UnitX();
  const Eigen::Vector3d u = helper.cross(w).normalized();
  const Eigen::Vector3d v = w.cross(u);
  const double scale = options.pixels / (2.0 * options.extent);
  const double half = options.pixels / 2.0;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.pixels << "\" height=\"" << options.pixels
      << "\" viewBox=\"0 0 " << options.pixels << ' ' << options.pixels << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    const double hue = 360.0 * static_cast<double>(i) / static_cast<double>(leaves.size());
    const std::string style = "fill=\"none\" stroke=\"hsl(" + fmt(hue) + ",70%,45%)\" stroke-width=\"" +
                              fmt(options.stroke) + "\" data-leaf=\"" + std::to_string(i) + "\"";
    std::vector<std::vector<std::pair<double, double>>> pieces(1);
    bool cut = false;
    for (const S3Point& x : leaves[i].samples) {
      if (std::abs(1.0 + x.q().w) < options.pole_cut) {
        cut = true;
        if (!pieces.back().empty()) pieces.emplace_back();
        continue;
      }
      const Eigen::Vector3d p = stereographic(x);
      pieces.back().emplace_back(half + scale * p.dot(u), half - scale * p.dot(v));
    }
    // A closed leaf without a cut is one closed loop; with a cut, the last
    // piece continues into the first.
    if (cut && leaves[i].closed && pieces.size() > 1 && !pieces.back().empty() && !pieces.front().empty() &&
        std::abs(1.0 + leaves[i].samples.front().q().w) >= options.pole_cut &&
        std::abs(1.0 + leaves[i].samples.back().q().w) >= options.pole_cut) {
      pieces.back().insert(pieces.back().end(), pieces.front().begin(), pieces.front().end());
      pieces.erase(pieces.begin());
    }
    for (const auto& piece : pieces) {
      if (piece.size() < 2) continue;
      svg << "<path d=\"M";
      for (std::size_t k = 0; k < piece.size(); ++k) {
        svg << (k ? " L" : "") << fmt(piece[k].first) << ',' << fmt(piece[k].second);
      }
      if (!cut && leaves[i].closed) svg << " Z";
      svg << "\" " << style << "/>\n";
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace circlespace

#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "circlespace/foliation.hpp"

namespace circlespace {

struct RenderOptions {
  // Orthographic view direction in stereographic R^3.
  Eigen::Vector3d view{1.0, 0.8, 0.6};
  // Half-width of the square viewport in projected units.
  double extent = 3.0;
  int pixels = 800;
  double stroke = 1.5;
  // Polylines are cut where |1 + x0| falls below this.
  double pole_cut = 0.05;
};

// (x1, x2, x3) / (1 + x0).
Eigen::Vector3d stereographic(const S3Point& x);

// One path element per leaf piece, colored by leaf index. Throws
// Error{EmptyInput}.
std::string render_svg(const std::vector<Leaf>& leaves, const RenderOptions& options = {});

}  // namespace circlespace

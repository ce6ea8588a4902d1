#pragma once

#include "traverse/geometry.hpp"
#include "traverse/sweep.hpp"

#include <string>

namespace traverse {

struct FigureOptions {
  int width = 640;
  /// Marching-squares resolution for boundary curves.
  int grid = 240;
  /// Trajectories drawn per parameter interval to tint the slabs.
  int tint_lines = 32;
};

/// SVG of X: slabs tinted per T(v) edge, boundary curves, vertex trajectories
/// and tangency points.
std::string render_svg(const Scene& scene, const TrajectoryGraph& graph, const FigureOptions& options = {});

}  // namespace traverse

#pragma once

#include "traverse/geometry.hpp"
#include "traverse/omega.hpp"
#include "traverse/sweep.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace traverse {

enum class Space { Tv, X, DX };
enum class Location { Trajectory, Boundary, Interior, Mirror };

std::string to_string(Space space);
std::string to_string(Location location);

/// A connected component of a pattern stratum.
struct Stratum {
  std::size_t id = 0;
  int dimension = 0;
  Pattern pattern{std::vector<int>{1, 1}};
  Location location = Location::Trajectory;
  /// vertex, edge, tangency_point, entry_point, exit_point, boundary_arc,
  /// interior_segment or slab.
  std::string kind;
  std::optional<std::size_t> vertex, edge;
  /// Codimension-one strata in the closure, ascending.
  std::vector<std::size_t> faces;
  /// 1-dim strata: oriented endpoints (empty for closed boundary circles).
  std::optional<std::size_t> from, to;
  /// Slabs: bottom and top arcs and the interior segments closing the slab at
  /// its lower and upper parameter ends.
  std::optional<std::size_t> bottom, top;
  std::vector<std::size_t> start_pieces, end_pieces;
};

struct StrataTable {
  std::vector<Stratum> tv, x, dx;
  /// dx_of_x[i] lists the DX strata over X stratum i (one for boundary
  /// strata, interior copy then mirror copy otherwise).
  std::vector<std::vector<std::size_t>> dx_of_x;
  /// For DX strata, the X stratum they come from.
  std::vector<std::size_t> x_of_dx;
  std::size_t holes = 0;

  const std::vector<Stratum>& of(Space space) const;
  std::size_t count(Space space, int dimension) const;
  std::size_t count(Space space, const Pattern& pattern, int dimension) const;
  int top_dimension(Space space) const { return space == Space::Tv ? 1 : 2; }
};

StrataTable build_strata(const TrajectoryGraph& graph, const Scene& scene);

/// Ids of strata of codimension >= j; requires 0 <= j <= 2.
std::vector<std::size_t> filtration(const StrataTable& table, Space space, int j);

struct ComplexityVector {
  /// tc[j]: number of j-dimensional components of T(v).
  std::vector<std::size_t> tc;
  /// sigma_tc[j]: number of j-dimensional strata of DX.
  std::vector<std::size_t> sigma_tc;
  /// Number of components of T(v, w) per pattern.
  std::map<Pattern, std::size_t> components;
  /// sum over |w|' = 1 of #sup(w) * #components(T(v, w)); equals sigma_tc[0].
  std::size_t support_count = 0;
};

ComplexityVector complexity_vectors(const StrataTable& table);

struct MinimalStrata {
  /// Ids in the T(v) table.
  std::vector<std::size_t> ids;
  /// Sum of (#sup - 1) over the minimal strata.
  std::size_t generator_bound = 0;
};

/// Components whose closure contains no deeper component: every vertex, and
/// every edge without vertices.
MinimalStrata minimal_strata(const StrataTable& table);

}  // namespace traverse

#include "traverse/strata.hpp"

#include "traverse/error.hpp"

#include <algorithm>

namespace traverse {

std::string to_string(Space space) {
  switch (space) {
    case Space::Tv: return "Tv";
    case Space::X: return "X";
    case Space::DX: return "DX";
  }
  return "?";
}

std::string to_string(Location location) {
  switch (location) {
    case Location::Trajectory: return "trajectory_space";
    case Location::Boundary: return "boundary";
    case Location::Interior: return "interior";
    case Location::Mirror: return "mirror";
  }
  return "?";
}

const std::vector<Stratum>& StrataTable::of(Space space) const {
  switch (space) {
    case Space::Tv: return tv;
    case Space::X: return x;
    case Space::DX: return dx;
  }
  return tv;
}

std::size_t StrataTable::count(Space space, int dimension) const {
  const auto& list = of(space);
  return static_cast<std::size_t>(
      std::count_if(list.begin(), list.end(), [&](const Stratum& s) { return s.dimension == dimension; }));
}

std::size_t StrataTable::count(Space space, const Pattern& pattern, int dimension) const {
  const auto& list = of(space);
  return static_cast<std::size_t>(std::count_if(list.begin(), list.end(), [&](const Stratum& s) {
    return s.dimension == dimension && s.pattern == pattern;
  }));
}

namespace {

const Pattern kSimple{std::vector<int>{1, 1}};
const Pattern kSingleton{std::vector<int>{2}};
const Pattern kTriple{std::vector<int>{1, 2, 1}};

// X-strata ids of the boundary points and interior segments of one vertex.
struct VertexCells {
  std::size_t tangency = 0;
  std::optional<std::size_t> entry, exit, lower_segment, upper_segment;
};

void sort_faces(std::vector<Stratum>& list) {
  for (auto& s : list) {
    std::sort(s.faces.begin(), s.faces.end());
    s.faces.erase(std::unique(s.faces.begin(), s.faces.end()), s.faces.end());
  }
}

}  // namespace

StrataTable build_strata(const TrajectoryGraph& graph, const Scene& scene) {
  StrataTable table;
  table.holes = scene.holes.size();

  // T(v): vertices then edges.
  for (const auto& v : graph.vertices) {
    Stratum s;
    s.id = table.tv.size();
    s.dimension = 0;
    s.pattern = v.pattern;
    s.kind = "vertex";
    s.vertex = v.id;
    table.tv.push_back(s);
  }
  for (const auto& e : graph.edges) {
    Stratum s;
    s.id = table.tv.size();
    s.dimension = 1;
    s.pattern = kSimple;
    s.kind = "edge";
    s.edge = e.id;
    if (e.start.vertex) s.faces.push_back(*e.start.vertex);
    if (e.end.vertex) s.faces.push_back(*e.end.vertex);
    s.from = e.start.vertex;
    s.to = e.end.vertex;
    table.tv.push_back(s);
  }
  sort_faces(table.tv);

  auto add_x = [&](int dim, const Pattern& p, Location loc, const std::string& kind) -> Stratum& {
    Stratum s;
    s.id = table.x.size();
    s.dimension = dim;
    s.pattern = p;
    s.location = loc;
    s.kind = kind;
    table.x.push_back(s);
    return table.x.back();
  };

  // Boundary points in vertex order, then along the flow.
  std::vector<VertexCells> cells(graph.vertices.size());
  for (const auto& v : graph.vertices) {
    if (v.pattern == kSingleton) {
      auto& t = add_x(0, kSingleton, Location::Boundary, "tangency_point");
      t.vertex = v.id;
      cells[v.id].tangency = t.id;
    } else {
      auto& e = add_x(0, kTriple, Location::Boundary, "entry_point");
      e.vertex = v.id;
      cells[v.id].entry = e.id;
      auto& t = add_x(0, kTriple, Location::Boundary, "tangency_point");
      t.vertex = v.id;
      cells[v.id].tangency = t.id;
      auto& x = add_x(0, kTriple, Location::Boundary, "exit_point");
      x.vertex = v.id;
      cells[v.id].exit = x.id;
    }
  }

  // Endpoints of the bottom and top arcs of a slab at one of its ends.
  auto arc_ends = [&](const SlabEnd& end) -> std::pair<std::optional<std::size_t>, std::optional<std::size_t>> {
    if (!end.vertex) return {std::nullopt, std::nullopt};
    const VertexCells& c = cells[*end.vertex];
    switch (end.role) {
      case SlabEndRole::Singleton: return {c.tangency, c.tangency};
      case SlabEndRole::Whole: return {c.entry, c.exit};
      case SlabEndRole::Lower: return {c.entry, c.tangency};
      case SlabEndRole::Upper: return {c.tangency, c.exit};
      case SlabEndRole::None: break;
    }
    return {std::nullopt, std::nullopt};
  };

  // Boundary arcs, two per edge.
  std::vector<std::pair<std::size_t, std::size_t>> edge_arcs(graph.edges.size());
  for (const auto& e : graph.edges) {
    const auto [b0, t0] = arc_ends(e.start);
    const auto [b1, t1] = arc_ends(e.end);
    auto& bottom = add_x(1, kSimple, Location::Boundary, "boundary_arc");
    bottom.edge = e.id;
    bottom.from = b0;
    bottom.to = b1;
    const std::size_t bottom_id = bottom.id;
    auto& top = add_x(1, kSimple, Location::Boundary, "boundary_arc");
    top.edge = e.id;
    top.from = t0;
    top.to = t1;
    edge_arcs[e.id] = {bottom_id, top.id};
  }
  for (auto& s : table.x) {
    if (s.kind == "boundary_arc") {
      if (s.from) s.faces.push_back(*s.from);
      if (s.to) s.faces.push_back(*s.to);
    }
  }

  // Interior segments of every (121) trajectory: entry to tangency, tangency to exit.
  for (const auto& v : graph.vertices) {
    if (v.pattern != kTriple) continue;
    VertexCells& c = cells[v.id];
    auto& lower = add_x(1, kTriple, Location::Interior, "interior_segment");
    lower.vertex = v.id;
    lower.from = c.entry;
    lower.to = c.tangency;
    lower.faces = {*c.entry, c.tangency};
    c.lower_segment = lower.id;
    auto& upper = add_x(1, kTriple, Location::Interior, "interior_segment");
    upper.vertex = v.id;
    upper.from = c.tangency;
    upper.to = c.exit;
    upper.faces = {c.tangency, *c.exit};
    c.upper_segment = upper.id;
  }

  auto pieces = [&](const SlabEnd& end) {
    std::vector<std::size_t> out;
    if (!end.vertex) return out;
    const VertexCells& c = cells[*end.vertex];
    switch (end.role) {
      case SlabEndRole::Whole: out = {*c.lower_segment, *c.upper_segment}; break;
      case SlabEndRole::Lower: out = {*c.lower_segment}; break;
      case SlabEndRole::Upper: out = {*c.upper_segment}; break;
      default: break;
    }
    return out;
  };

  // Slabs, one per edge.
  for (const auto& e : graph.edges) {
    auto& slab = add_x(2, kSimple, Location::Interior, "slab");
    slab.edge = e.id;
    slab.bottom = edge_arcs[e.id].first;
    slab.top = edge_arcs[e.id].second;
    slab.start_pieces = pieces(e.start);
    slab.end_pieces = pieces(e.end);
    slab.faces = {*slab.bottom, *slab.top};
    slab.faces.insert(slab.faces.end(), slab.start_pieces.begin(), slab.start_pieces.end());
    slab.faces.insert(slab.faces.end(), slab.end_pieces.begin(), slab.end_pieces.end());
  }
  sort_faces(table.x);

  // DX: boundary strata once, interior strata as a copy and its mirror.
  table.dx_of_x.resize(table.x.size());
  for (int copy = 0; copy < 2; ++copy) {
    for (const auto& s : table.x) {
      if (copy == 1 && s.location == Location::Boundary) continue;
      Stratum d = s;
      d.id = table.dx.size();
      if (copy == 1) d.location = Location::Mirror;
      table.dx_of_x[s.id].push_back(d.id);
      table.x_of_dx.push_back(s.id);
      table.dx.push_back(d);
    }
  }
  // Re-index links: faces on the same sheet, boundary faces shared.
  for (auto& d : table.dx) {
    const std::size_t sheet = d.location == Location::Mirror ? 1 : 0;
    auto map = [&](std::size_t xid) {
      const auto& images = table.dx_of_x[xid];
      return images.size() == 1 ? images[0] : images[sheet];
    };
    for (auto& f : d.faces) f = map(f);
    if (d.from) d.from = map(*d.from);
    if (d.to) d.to = map(*d.to);
    if (d.bottom) d.bottom = map(*d.bottom);
    if (d.top) d.top = map(*d.top);
    for (auto& p : d.start_pieces) p = map(p);
    for (auto& p : d.end_pieces) p = map(p);
  }
  sort_faces(table.dx);
  return table;
}

std::vector<std::size_t> filtration(const StrataTable& table, Space space, int j) {
  if (j < 0 || j > 2) throw Error(ErrorCode::InvalidArgument, "filtration index must lie in [0, 2]");
  const int top = table.top_dimension(space);
  std::vector<std::size_t> out;
  for (const auto& s : table.of(space)) {
    if (top - s.dimension >= j) out.push_back(s.id);
  }
  return out;
}

ComplexityVector complexity_vectors(const StrataTable& table) {
  ComplexityVector cv;
  cv.tc = {table.count(Space::Tv, 0), table.count(Space::Tv, 1)};
  cv.sigma_tc = {table.count(Space::DX, 0), table.count(Space::DX, 1), table.count(Space::DX, 2)};
  for (const auto& s : table.tv) ++cv.components[s.pattern];
  for (const auto& [pattern, n] : cv.components) {
    if (pattern.reduced_norm() == 1) cv.support_count += static_cast<std::size_t>(pattern.support()) * n;
  }
  return cv;
}

MinimalStrata minimal_strata(const StrataTable& table) {
  MinimalStrata out;
  for (const auto& s : table.tv) {
    if (s.dimension == 0 || s.faces.empty()) {
      out.ids.push_back(s.id);
      out.generator_bound += static_cast<std::size_t>(s.pattern.support() - 1);
    }
  }
  return out;
}

}  // namespace traverse

#include "traverse/sweep.hpp"

#include "traverse/number_field.hpp"
#include "traverse/parallel.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace traverse {

std::string ParameterWitness::to_string() const {
  std::ostringstream out;
  if (exact) {
    out << "s = " << traverse::to_string(*exact);
  } else {
    out << "s ~ " << approx << " (root of " << polynomial.to_string('s') << " in [" << traverse::to_string(lo) << ", "
        << traverse::to_string(hi) << "])";
  }
  return out.str();
}

ParameterWitness make_witness(RealAlgebraic value) {
  ParameterWitness w;
  w.exact = value.rational_value();
  value.refine_until(Rational(1, 1000000000));
  w.polynomial = value.polynomial();
  w.lo = value.lo();
  w.hi = value.hi();
  w.approx = value.approx();
  return w;
}

DegenerateSceneError::DegenerateSceneError(const std::string& message, std::optional<ParameterWitness> witness,
                                           std::vector<std::size_t> components)
    : Error(ErrorCode::DegenerateScene,
            witness ? message + " at " + witness->to_string() : message),
      witness_(std::move(witness)),
      components_(std::move(components)) {}

std::size_t TrajectoryGraph::count_vertices(const Pattern& p) const {
  return static_cast<std::size_t>(
      std::count_if(vertices.begin(), vertices.end(), [&](const GraphVertex& v) { return v.pattern == p; }));
}

std::size_t TrajectoryGraph::sample_after(std::size_t event) const {
  return radial ? (event + 1) % samples.size() : event + 1;
}

namespace {

const Pattern kSimple{std::vector<int>{1, 1}};
const Pattern kSingleton{std::vector<int>{2}};
const Pattern kTriple{std::vector<int>{1, 2, 1}};

// Restrictions of every boundary component to a line family.
struct Prepared {
  LineFamily family;
  std::optional<Rational> t_lower;
  std::vector<BPoly> restricted;
  std::vector<std::vector<UPoly>> coeffs;
  std::vector<std::vector<UPoly>> second_lie;
  std::vector<UPoly> resultants;
};

Prepared prepare(const Scene& scene, const LineFamily& family) {
  Prepared p{family, std::nullopt, {}, {}, {}, {}};
  if (family.is_radial()) p.t_lower = Rational(0);
  const std::size_t n = scene.component_count();
  p.restricted.resize(n);
  p.coeffs.resize(n);
  p.second_lie.resize(n);
  p.resultants.resize(n);
  parallel_for(n, [&](std::size_t c) {
    const BPoly& f = scene.component(c).implicit;
    const BPoly l1 = lie_derivative(f, scene.field);
    const BPoly l2 = lie_derivative(l1, scene.field);
    p.restricted[c] = family.restrict(f);
    p.coeffs[c] = p.restricted[c].coefficients_in_second();
    p.second_lie[c] = family.restrict(l2).coefficients_in_second();
    p.resultants[c] = resultant_second(p.restricted[c], family.restrict(l1));
  });
  for (std::size_t c = 0; c < n; ++c) {
    if (p.resultants[c].is_zero()) {
      throw DegenerateSceneError(component_name(c) + " is tangent to the field along a whole arc", std::nullopt, {c});
    }
  }
  return p;
}

std::pair<double, double> approx_point(const LineFamily& family, const Rational& s, const Rational& t) {
  return {to_double(family.x()(s, t)), to_double(family.y()(s, t))};
}

Rational representative(const RealAlgebraic& a) { return a.is_exact() ? a.lo() : midpoint(a.lo(), a.hi()); }

struct Tangency {
  std::size_t component;
  NumberField::Poly squarefree;
  RationalInterval position;
};

// Classifies one root of the resultants. Returns nothing for spurious roots
// (complex tangencies, tangencies behind the ray origin, degree drops).
std::optional<TangencyEvent> classify(const Scene& scene, const Prepared& prep, RealAlgebraic alpha) {
  NumberField k(std::move(alpha));
  const std::size_t n = scene.component_count();
  std::vector<NumberField::Poly> lines(n);
  std::vector<Tangency> found;
  auto witness = [&] { return make_witness(k.generator()); };
  for (std::size_t c = 0; c < n; ++c) {
    lines[c] = specialize(prep.coeffs[c]);
    if (k.degree(lines[c]) < 0) {
      throw DegenerateSceneError("a trajectory line lies on " + component_name(c), witness(), {c});
    }
    if (!k.is_zero(prep.resultants[c])) continue;
    NumberField::Poly g = k.gcd(lines[c], k.derivative(lines[c]));
    if (k.degree(g) <= 0) continue;
    NumberField::Poly sf = k.squarefree_part(g);
    const int count = k.count_roots_open(sf, prep.t_lower, std::nullopt);
    if (count == 0) continue;
    if (count > 1) {
      throw DegenerateSceneError("one trajectory is tangent to " + component_name(c) + " at several points", witness(),
                                 {c});
    }
    auto boxes = k.isolate_roots(sf, prep.t_lower, std::nullopt);
    found.push_back({c, std::move(sf), boxes.at(0)});
  }
  if (found.empty()) return std::nullopt;
  if (found.size() > 1) {
    std::vector<std::size_t> comps;
    for (const auto& t : found) comps.push_back(t.component);
    throw DegenerateSceneError("tangencies to " + component_name(found[0].component) + " and " +
                                   component_name(found[1].component) + " share a trajectory",
                               witness(), comps);
  }
  Tangency& tan = found.front();

  // Order of contact: the second Lie derivative must not vanish at the point.
  NumberField::Poly l2 = specialize(prep.second_lie[tan.component]);
  NumberField::Poly common = k.degree(l2) < 0 ? tan.squarefree : k.gcd(tan.squarefree, l2);
  if (k.degree(common) >= 1 && k.count_roots(common, tan.position.lo, tan.position.hi) > 0) {
    throw DegenerateSceneError("tangency of order at least 3 with " + component_name(tan.component), witness(),
                               {tan.component});
  }

  // Shrink the tangency box until no other crossing of the line lies in it.
  std::vector<NumberField::Poly> crossing_sf(n);
  for (std::size_t c = 0; c < n; ++c) crossing_sf[c] = k.squarefree_part(lines[c]);
  for (int iteration = 0;; ++iteration) {
    bool clean = true;
    for (std::size_t c = 0; c < n && clean; ++c) {
      const int inside = k.count_roots(crossing_sf[c], tan.position.lo, tan.position.hi);
      clean = inside == (c == tan.component ? 1 : 0);
    }
    if (clean) break;
    if (iteration == 0) {
      for (std::size_t c = 0; c < n; ++c) {
        if (c == tan.component) continue;
        NumberField::Poly shared = k.gcd(tan.squarefree, crossing_sf[c]);
        if (k.degree(shared) >= 1 && k.count_roots(shared, tan.position.lo, tan.position.hi) > 0) {
          throw DegenerateSceneError("tangency point of " + component_name(tan.component) + " lies on " +
                                         component_name(c),
                                     witness(), {tan.component, c});
        }
      }
    }
    if (iteration > 4000) throw Error(ErrorCode::Internal, "tangency position does not separate from crossings");
    k.refine_root(tan.squarefree, tan.position);
  }

  int before = 0;
  for (std::size_t c = 0; c < n; ++c) before += k.count_roots_open(crossing_sf[c], prep.t_lower, tan.position.lo);

  TangencyEvent ev;
  ev.component = tan.component;
  ev.position = tan.position;
  ev.multiplicity = 2;
  ev.crossings_before = before;
  ev.trajectory_pattern = before % 2 == 0 ? kSingleton : kTriple;
  ev.parameter = k.generator();
  ev.parameter.refine_until(Rational(1, 1000000000));
  RationalInterval tau = ev.position;
  while (tau.hi - tau.lo > Rational(1, 1000000000)) k.refine_root(tan.squarefree, tau);
  std::tie(ev.x, ev.y) = approx_point(prep.family, representative(ev.parameter), midpoint(tau.lo, tau.hi));
  return ev;
}

std::vector<TangencyEvent> events_for(const Scene& scene, const Prepared& prep) {
  std::vector<RealAlgebraic> roots;
  for (const auto& r : prep.resultants) {
    for (auto& a : isolate_real_roots(squarefree_part(r))) roots.push_back(std::move(a));
  }
  std::vector<RealAlgebraic*> order;
  for (auto& r : roots) order.push_back(&r);
  std::stable_sort(order.begin(), order.end(), [](RealAlgebraic* a, RealAlgebraic* b) { return compare(*a, *b) < 0; });
  std::vector<RealAlgebraic> distinct;
  for (auto* r : order) {
    if (distinct.empty() || compare(distinct.back(), *r) != 0) distinct.push_back(*r);
  }
  std::vector<std::optional<TangencyEvent>> classified(distinct.size());
  parallel_for(distinct.size(), [&](std::size_t i) { classified[i] = classify(scene, prep, distinct[i]); });
  std::vector<TangencyEvent> events;
  for (auto& e : classified) {
    if (e) events.push_back(std::move(*e));
  }
  return events;
}

// Whether the ray of the missing chart direction is tangent to some component.
bool chart_direction_is_event(const Scene& scene, const Rational& a, const Rational& b) {
  const Line ray{scene.field.x, scene.field.y, -a, -b, true};
  for (const auto* c : scene.components()) {
    const UPoly g = restrict_to_line(c->implicit, ray);
    if (g.is_zero()) return true;
    const UPoly common = gcd(g, g.derivative());
    if (common.degree() >= 1) {
      for (auto& r : isolate_real_roots(common)) {
        if (compare(r, Rational(0)) > 0) return true;
      }
    }
  }
  return false;
}

LineFamily choose_family(const Scene& scene) {
  if (scene.field.kind == Field::Kind::Constant) return LineFamily::of(scene.field);
  // Rational points of the unit circle; the first whose missing ray is not an event wins.
  const std::pair<long, long> numerators[] = {{5, 0}, {0, 5}, {-5, 0}, {0, -5}, {3, 4}, {4, 3}, {-3, 4},
                                               {-4, 3}, {-3, -4}, {-4, -3}, {3, -4}, {4, -3}};
  for (const auto& [na, nb] : numerators) {
    const Rational a = make_rational(na, 5), b = make_rational(nb, 5);
    if (!chart_direction_is_event(scene, a, b)) return LineFamily::of(scene.field, {a, b});
  }
  throw Error(ErrorCode::Internal, "no admissible radial chart");
}

// Rational strictly between two distinct real algebraic numbers a < b,
// preferring small denominators.
Rational strictly_between(RealAlgebraic& a, RealAlgebraic& b) {
  while (a.hi() >= b.lo()) {
    a.refine();
    b.refine();
  }
  Rational candidate = simplest_between(a.hi(), b.lo());
  if ((candidate == a.hi() && a.is_exact()) || (candidate == b.lo() && b.is_exact())) {
    candidate = midpoint(a.hi(), b.lo());
  }
  return candidate;
}

bool inside_x(const Scene& scene, const LineFamily& family, const Rational& s, const Rational& t) {
  const Rational x = family.x()(s, t), y = family.y()(s, t);
  for (const auto* c : scene.components()) {
    if (sgn(c->implicit(x, y)) * c->inside_sign >= 0) return false;
  }
  return true;
}

std::optional<std::pair<Rational, Rational>> bbox_range(const Line& line, const BoundingBox& box) {
  std::optional<Rational> lo, hi;
  auto clip = [&](const Rational& p, const Rational& d, const Rational& mn, const Rational& mx) {
    if (d == 0) return p >= mn && p <= mx;
    Rational t0 = (mn - p) / d, t1 = (mx - p) / d;
    if (t0 > t1) std::swap(t0, t1);
    if (!lo || t0 > *lo) lo = t0;
    if (!hi || t1 < *hi) hi = t1;
    return true;
  };
  if (!clip(line.px, line.dx, box.xmin, box.xmax) || !clip(line.py, line.dy, box.ymin, box.ymax)) return std::nullopt;
  if (!lo || *lo > *hi) return std::nullopt;
  return std::pair{*lo, *hi};
}

CrossingList crossings_at(const Scene& scene, const LineFamily& family, const Rational& s) {
  CrossingList out;
  out.parameter = s;
  const std::optional<Rational> t_lower = family.is_radial() ? std::optional<Rational>(0) : std::nullopt;
  const Line line = family.line(s);
  const auto range = bbox_range(line, scene.bbox);
  std::vector<Crossing> all;
  for (std::size_t c = 0; c < scene.component_count(); ++c) {
    const UPoly p = family.restrict(scene.component(c).implicit).at_first(s);
    if (p.is_zero()) throw Error(ErrorCode::Internal, "sample line lies on a boundary curve");
    const UPoly common = gcd(p, p.derivative());
    for (auto& r : isolate_real_roots(squarefree_part(p))) {
      if (t_lower && compare(r, *t_lower) <= 0) continue;
      if (common.degree() >= 1 && r.sign_of(common) == 0) {
        throw Error(ErrorCode::Internal, "sample line " + to_string(s) + " is tangent to " + component_name(c));
      }
      if (!range || compare(r, range->first) < 0 || compare(r, range->second) > 0) {
        throw Error(ErrorCode::Validation,
                    component_name(c) + " has points outside the bounding box (line " + to_string(s) + ")");
      }
      all.push_back({c, std::move(r), 0, 0});
    }
  }
  std::vector<RealAlgebraic*> ptrs;
  for (auto& x : all) ptrs.push_back(&x.position);
  if (!separate(ptrs)) throw Error(ErrorCode::Internal, "boundary components cross at a sample line");
  for (auto* p : ptrs) {
    for (auto& x : all) {
      if (&x.position == p) out.crossings.push_back(x);
    }
  }
  for (auto& x : out.crossings) {
    RealAlgebraic t = x.position;
    t.refine_until(Rational(1, 1000000000));
    std::tie(x.x, x.y) = approx_point(family, s, representative(t));
  }
  // Membership alternates: outside before the first crossing, then in and out.
  const std::size_t m = out.crossings.size();
  for (std::size_t gap = 0; gap <= m; ++gap) {
    Rational t;
    if (m == 0) {
      t = t_lower ? Rational(1) : Rational(0);
    } else if (gap == 0) {
      RealAlgebraic& first = out.crossings.front().position;
      t = t_lower ? midpoint(*t_lower, first.lo()) : first.lo() - 1;
      if (t_lower && first.lo() <= *t_lower) {
        RealAlgebraic zero = RealAlgebraic::from_rational(*t_lower);
        t = strictly_between(zero, first);
      }
    } else if (gap == m) {
      t = out.crossings.back().position.hi() + 1;
    } else {
      t = strictly_between(out.crossings[gap - 1].position, out.crossings[gap].position);
    }
    if (inside_x(scene, family, s, t) != (gap % 2 == 1)) {
      throw Error(ErrorCode::Validation, "boundary crossings of line " + to_string(s) + " do not alternate");
    }
  }
  out.segment_patterns.assign(m / 2, kSimple);
  return out;
}

// Minimal union-find over (sample, segment) nodes.
class Partition {
 public:
  explicit Partition(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::vector<TangencyEvent> tangency_events(const Scene& scene) {
  const LineFamily family = choose_family(scene);
  return events_for(scene, prepare(scene, family));
}

CrossingList interval_structure(const Scene& scene, const Rational& parameter) {
  return crossings_at(scene, LineFamily::of(scene.field), parameter);
}

CrossingList interval_structure(const Scene& scene, const LineFamily& family, const Rational& parameter) {
  return crossings_at(scene, family, parameter);
}

TrajectoryGraph build_trajectory_space(const Scene& scene) {
  TrajectoryGraph g;
  const LineFamily family = choose_family(scene);
  g.radial = family.is_radial();
  g.chart = family.chart();
  g.events = events_for(scene, prepare(scene, family));
  const std::size_t n = g.events.size();

  // Sample parameters.
  std::vector<Rational> params;
  if (n == 0) {
    if (!g.radial) throw Error(ErrorCode::Validation, "no tangency events: X is empty or unbounded");
    params.push_back(0);
  } else {
    std::vector<RealAlgebraic*> ptrs;
    for (auto& e : g.events) ptrs.push_back(&e.parameter);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (compare(g.events[i].parameter, g.events[i + 1].parameter) >= 0) {
        throw Error(ErrorCode::Internal, "events are not strictly increasing");
      }
    }
    params.push_back(Rational(floor(g.events.front().parameter.lo()) - 1));
    for (std::size_t i = 0; i + 1 < n; ++i) params.push_back(strictly_between(g.events[i].parameter, g.events[i + 1].parameter));
    if (!g.radial) params.push_back(Rational(ceil(g.events.back().parameter.hi()) + 1));
  }
  g.samples.resize(params.size());
  parallel_for(params.size(), [&](std::size_t i) { g.samples[i] = crossings_at(scene, family, params[i]); });
  if (!g.radial && (!g.samples.front().crossings.empty() || !g.samples.back().crossings.empty())) {
    throw Error(ErrorCode::Validation, "X is not bounded across the sweep direction");
  }

  // Node numbering.
  std::vector<std::size_t> offset(g.samples.size() + 1, 0);
  for (std::size_t i = 0; i < g.samples.size(); ++i) offset[i + 1] = offset[i] + g.samples[i].segment_count();
  const std::size_t nodes = offset.back();
  auto node = [&](std::size_t sample, std::size_t segment) { return offset[sample] + segment; };
  Partition part(nodes);
  std::vector<std::optional<SlabEnd>> start_of(nodes), end_of(nodes);

  for (std::size_t e = 0; e < n; ++e) {
    const TangencyEvent& ev = g.events[e];
    const std::size_t left = g.sample_before(e), right = g.sample_after(e);
    if (left == right) throw Error(ErrorCode::Internal, "event without distinct neighbouring samples");
    const auto& L = g.samples[left].crossings;
    const auto& R = g.samples[right].crossings;
    bool many_right;
    if (R.size() == L.size() + 2) {
      many_right = true;
    } else if (L.size() == R.size() + 2) {
      many_right = false;
    } else {
      throw Error(ErrorCode::MatchingAmbiguous,
                  "crossing counts " + std::to_string(L.size()) + " and " + std::to_string(R.size()) +
                      " around event " + std::to_string(e) + " do not differ by two");
    }
    const auto& many = many_right ? R : L;
    const auto& few = many_right ? L : R;
    const std::size_t many_sample = many_right ? right : left;
    const std::size_t few_sample = many_right ? left : right;
    const std::size_t k = static_cast<std::size_t>(ev.crossings_before);
    bool consistent = k + 1 < many.size() && many[k].component == ev.component && many[k + 1].component == ev.component;
    for (std::size_t i = 0; consistent && i < few.size(); ++i) {
      consistent = few[i].component == many[i < k ? i : i + 2].component;
    }
    if (!consistent) {
      throw Error(ErrorCode::MatchingAmbiguous,
                  "crossing components around event " + std::to_string(e) + " do not determine the matching");
    }
    auto mark = [&](std::size_t sample, std::size_t segment, SlabEndRole role) {
      // Segments on the right of the event start there; on the left they end there.
      auto& slot = (sample == right ? start_of : end_of)[node(sample, segment)];
      if (slot) throw Error(ErrorCode::Internal, "slab end assigned twice");
      slot = SlabEnd{e, role};
    };
    if (k % 2 == 0) {
      const std::size_t born = k / 2;
      for (std::size_t j = 0; j < few.size() / 2; ++j) part.unite(node(few_sample, j), node(many_sample, j < born ? j : j + 1));
      mark(many_sample, born, SlabEndRole::Singleton);
    } else {
      const std::size_t split = (k - 1) / 2;
      for (std::size_t j = 0; j < few.size() / 2; ++j) {
        if (j == split) continue;
        part.unite(node(few_sample, j), node(many_sample, j < split ? j : j + 1));
      }
      mark(few_sample, split, SlabEndRole::Whole);
      mark(many_sample, split, SlabEndRole::Lower);
      mark(many_sample, split + 1, SlabEndRole::Upper);
    }
  }

  // Edges: classes of nodes, numbered by their smallest member.
  std::map<std::size_t, std::size_t> class_to_edge;
  for (std::size_t s = 0; s < g.samples.size(); ++s) {
    for (std::size_t j = 0; j < g.samples[s].segment_count(); ++j) {
      const std::size_t root = part.find(node(s, j));
      auto [it, inserted] = class_to_edge.emplace(root, g.edges.size());
      if (inserted) {
        GraphEdge edge;
        edge.id = g.edges.size();
        g.edges.push_back(edge);
      }
      GraphEdge& edge = g.edges[it->second];
      edge.members.emplace_back(s, j);
      if (const auto& st = start_of[node(s, j)]) {
        if (edge.start.vertex) throw Error(ErrorCode::Internal, "edge with two starts");
        edge.start = *st;
      }
      if (const auto& en = end_of[node(s, j)]) {
        if (edge.end.vertex) throw Error(ErrorCode::Internal, "edge with two ends");
        edge.end = *en;
      }
    }
  }
  for (auto& edge : g.edges) {
    if (edge.start.vertex.has_value() != edge.end.vertex.has_value()) {
      throw Error(ErrorCode::Internal, "edge " + std::to_string(edge.id) + " has a single end");
    }
    edge.start_event = edge.start.vertex;
    edge.end_event = edge.end.vertex;
    if (g.radial && edge.start_event) {
      // List members in sweep order starting after the start event.
      const std::size_t first = g.sample_after(*edge.start_event);
      std::stable_sort(edge.members.begin(), edge.members.end(), [&](const auto& a, const auto& b) {
        const std::size_t m = g.samples.size();
        return (a.first + m - first) % m < (b.first + m - first) % m;
      });
    }
  }

  // Vertices, one per event.
  for (std::size_t e = 0; e < n; ++e) {
    GraphVertex v;
    v.id = e;
    v.event = e;
    v.pattern = g.events[e].trajectory_pattern;
    for (const auto& edge : g.edges) {
      if (edge.start.vertex == e) v.edges.push_back(edge.id);
      if (edge.end.vertex == e) v.edges.push_back(edge.id);
    }
    std::sort(v.edges.begin(), v.edges.end());
    const std::size_t expected = v.pattern == kSingleton ? 1 : 3;
    if (v.edges.size() != expected) {
      throw Error(ErrorCode::Internal, "vertex " + std::to_string(e) + " has degree " + std::to_string(v.edges.size()));
    }
    g.vertices.push_back(std::move(v));
  }
  return g;
}

GenericityReport check_traversally_generic(const Scene& scene) {
  GenericityReport report;
  try {
    auto events = tangency_events(scene);
    std::ostringstream msg;
    msg << events.size() << " tangency events, all of multiplicity 2 on distinct trajectories";
    report.diagnostics.push_back({msg.str(), std::nullopt, {}});
  } catch (const DegenerateSceneError& e) {
    report.passed = false;
    report.diagnostics.push_back({e.what(), e.witness(), e.components()});
  }
  return report;
}

std::string suggest_perturbation(const std::vector<std::size_t>& components, std::uint64_t seed) {
  std::size_t target = 0;
  for (std::size_t c : components) target = std::max(target, c);
  std::mt19937_64 rng(seed);
  auto draw = [&] {
    long k = static_cast<long>(rng() % 199) - 99;
    if (k == 0) k = 1;
    return make_rational(k, 1000);
  };
  const Rational dx = draw(), dy = draw();
  return "translate " + component_name(target) + " by (" + to_string(dx) + ", " + to_string(dy) + ")";
}

}  // namespace traverse

#include <doctest.h>

#include "scenes.hpp"
#include "traverse/error.hpp"
#include "traverse/parallel.hpp"
#include "traverse/sweep.hpp"

#include <algorithm>
#include <cmath>

using namespace traverse;
using testing::q;

namespace {

double eval(const BPoly& f, double x, double y) {
  double v = 0;
  for (const auto& [e, c] : f.terms()) v += to_double(c) * std::pow(x, e.first) * std::pow(y, e.second);
  return v;
}

bool inside(const Scene& s, double x, double y) {
  for (std::size_t c = 0; c < s.component_count(); ++c) {
    const auto& comp = s.component(c);
    if (comp.inside_sign * eval(comp.implicit, x, y) > 0) return false;
  }
  return true;
}

// Runs of X along the vertical line x = s, by dense sampling in doubles.
struct Runs {
  std::vector<double> lengths, gap_mids;
};

Runs runs_on_vertical(const Scene& s, double x) {
  const double y0 = to_double(s.bbox.ymin), y1 = to_double(s.bbox.ymax);
  const int n = 4000;
  Runs r;
  bool in = false;
  double start = 0, last_end = 0;
  bool seen = false;
  for (int k = 0; k <= n; ++k) {
    const double y = y0 + (y1 - y0) * k / n;
    const bool now = inside(s, x, y);
    if (now && !in) {
      if (seen) r.gap_mids.push_back(0.5 * (y + last_end));
      start = y;
    }
    if (!now && in) {
      r.lengths.push_back(y - start);
      last_end = y;
      seen = true;
    }
    in = now;
  }
  return r;
}

struct NumericEvents {
  int singleton = 0, triple = 0;
};

// Independent classification of events of a vertical sweep: scan s, and at
// every change of the run count look at the line with more runs. If one of its
// gaps lies inside X on the other line, a run was split (a (121) event);
// otherwise a new run appeared (a (2) event).
NumericEvents numeric_vertical_events(const Scene& s, int steps) {
  NumericEvents out;
  const double x0 = to_double(s.bbox.xmin), x1 = to_double(s.bbox.xmax);
  double prev_x = x0;
  Runs prev = runs_on_vertical(s, x0);
  for (int k = 1; k <= steps; ++k) {
    const double x = x0 + (x1 - x0) * k / steps;
    Runs cur = runs_on_vertical(s, x);
    if (cur.lengths.size() != prev.lengths.size()) {
      const bool cur_rich = cur.lengths.size() > prev.lengths.size();
      const Runs& rich = cur_rich ? cur : prev;
      const double poor_x = cur_rich ? prev_x : x;
      const bool split = std::any_of(rich.gap_mids.begin(), rich.gap_mids.end(),
                                     [&](double y) { return inside(s, poor_x, y); });
      (split ? out.triple : out.singleton) += 1;
    }
    prev = std::move(cur);
    prev_x = x;
  }
  return out;
}

std::optional<DegenerateSceneError> degeneracy(const Scene& s) {
  try {
    tangency_events(s);
  } catch (const DegenerateSceneError& e) {
    return e;
  }
  return std::nullopt;
}

}  // namespace

TEST_SUITE("sweep") {
  TEST_CASE("unit circle has two vertical tangents") {
    const auto events = tangency_events(testing::disk_scene(1, {}));
    REQUIRE(events.size() == 2);
    auto a = events[0].parameter, b = events[1].parameter;
    CHECK(a.rational_value() == q(-1));
    CHECK(b.rational_value() == q(1));
    for (const auto& e : events) {
      CHECK(e.multiplicity == 2);
      CHECK(e.component == 0);
      CHECK(e.trajectory_pattern == Pattern({2}));
    }
  }

  TEST_CASE("circle tangents match the closed form") {
    // Vertical field: tangent parameters are cx - r and cx + r for every circle.
    const Scene s = testing::fixture("disk_q4");
    std::vector<double> expected{-5, 5};
    for (const auto& h : s.holes) {
      expected.push_back(to_double(h.circle->cx - h.circle->radius));
      expected.push_back(to_double(h.circle->cx + h.circle->radius));
    }
    std::sort(expected.begin(), expected.end());
    auto events = tangency_events(s);
    REQUIRE(events.size() == expected.size());
    for (std::size_t i = 0; i < events.size(); ++i) {
      CHECK(events[i].parameter.rational_value().has_value());
      CHECK(events[i].parameter.approx() == doctest::Approx(expected[i]).epsilon(1e-12));
      CHECK(events[i].trajectory_pattern == (events[i].component == 0 ? Pattern({2}) : Pattern({1, 2, 1})));
    }
  }

  TEST_CASE("radial annulus with three holes has six hole tangencies") {
    const auto events = tangency_events(testing::fixture("annulus3"));
    CHECK(events.size() == 6);
    for (const auto& e : events) {
      CHECK(e.multiplicity == 2);
      CHECK(e.component >= 2);
      CHECK(e.trajectory_pattern == Pattern({1, 2, 1}));
      // Tangent rays from the origin touch a circle of radius 2/5 at distance 5/2.
      CHECK(std::hypot(e.x, e.y) == doctest::Approx(std::sqrt(6.25 - 0.16)).epsilon(1e-9));
    }
  }

  TEST_CASE("two holes tangent to one line are degenerate at s = 1/2") {
    const auto err = degeneracy(testing::fixture("double_tangent"));
    REQUIRE(err.has_value());
    CHECK(err->code() == ErrorCode::DegenerateScene);
    REQUIRE(err->witness().has_value());
    REQUIRE(err->witness()->exact.has_value());
    CHECK(*err->witness()->exact == q(1, 2));
    CHECK(err->components() == std::vector<std::size_t>{1, 2});

    const auto report = check_traversally_generic(testing::fixture("double_tangent"));
    CHECK_FALSE(report.passed);
    REQUIRE(report.diagnostics.size() == 1);
    CHECK(report.diagnostics[0].witness->exact == q(1, 2));
  }

  TEST_CASE("higher order contact is degenerate") {
    // x^4 + y^4 = 1 has fourth order contact with x = +-1.
    Scene s = testing::disk_scene(1, {});
    const BPoly x = BPoly::first(), y = BPoly::second();
    s.outer.implicit = pow(x, 4) + pow(y, 4) - BPoly::constant(1);
    s.outer.circle.reset();
    const auto err = degeneracy(s);
    REQUIRE(err.has_value());
    REQUIRE(err->witness().has_value());
    REQUIRE(err->witness()->exact.has_value());
    CHECK(abs(*err->witness()->exact) == 1);
  }

  TEST_CASE("concentric annulus with a vertical field is generic") {
    // The inner tangents sit at x = +-1 and the outer ones at x = +-2.
    const auto report = check_traversally_generic(testing::fixture("concentric_annulus"));
    CHECK(report.passed);
    const auto events = tangency_events(testing::fixture("concentric_annulus"));
    REQUIRE(events.size() == 4);
    CHECK(events[0].component == 0);
    CHECK(events[1].component == 1);
    CHECK(events[2].component == 1);
    CHECK(events[3].component == 0);
  }

  TEST_CASE("generic fixtures pass the genericity check") {
    for (const auto& name : testing::generic_fixtures()) {
      CAPTURE(name);
      CHECK(check_traversally_generic(testing::fixture(name)).passed);
    }
  }

  TEST_CASE("interval structure") {
    const Scene disk = testing::disk_scene(1, {});
    const auto one = interval_structure(disk, 0);
    CHECK(one.crossings.size() == 2);
    CHECK(one.segment_patterns == std::vector<Pattern>{Pattern({1, 1})});
    CHECK(one.crossings[0].y < one.crossings[1].y);

    const Scene holed = testing::disk_scene(3, {{q(0), q(0), q(1)}});
    const auto two = interval_structure(holed, q(1, 3));
    CHECK(two.segment_count() == 2);
    CHECK(two.crossings.size() == 4);
    for (const auto& p : two.segment_patterns) CHECK(p == Pattern({1, 1}));
    CHECK(interval_structure(holed, 2).segment_count() == 1);
    CHECK(interval_structure(holed, 4).segment_count() == 0);
  }

  TEST_CASE("samples agree with dense numeric sampling") {
    for (const auto* name : {"disk_q4", "fig1", "concentric_annulus"}) {
      CAPTURE(name);
      const Scene s = testing::fixture(name);
      const auto g = build_trajectory_space(s);
      for (const auto& sample : g.samples) {
        CHECK(runs_on_vertical(s, to_double(sample.parameter)).lengths.size() == sample.segment_count());
      }
    }
  }

  TEST_CASE("event classification agrees with a numeric sweep") {
    const Scene s = testing::fixture("fig1");
    const auto g = build_trajectory_space(s);
    const auto numeric = numeric_vertical_events(s, 600);
    CHECK(numeric.singleton == static_cast<int>(g.count_vertices(Pattern({2}))));
    CHECK(numeric.triple == static_cast<int>(g.count_vertices(Pattern({1, 2, 1}))));
    CHECK(g.count_vertices(Pattern({2})) == 3);
    CHECK(g.count_vertices(Pattern({1, 2, 1})) == 9);
  }

  TEST_CASE("crossing counts change by two and trajectory counts by one across events") {
    for (const auto& name : testing::generic_fixtures()) {
      CAPTURE(name);
      const auto g = build_trajectory_space(testing::fixture(name));
      for (std::size_t e = 0; e < g.events.size(); ++e) {
        const auto& before = g.samples[g.sample_before(e)];
        const auto& after = g.samples[g.sample_after(e)];
        const long dc = static_cast<long>(after.crossings.size()) - static_cast<long>(before.crossings.size());
        const long ds = static_cast<long>(after.segment_count()) - static_cast<long>(before.segment_count());
        CHECK(std::abs(dc) == 2);
        CHECK(std::abs(ds) == 1);
      }
    }
  }

  TEST_CASE("graph degree law and Euler characteristic") {
    for (const auto& name : testing::generic_fixtures()) {
      CAPTURE(name);
      const Scene s = testing::fixture(name);
      const auto g = build_trajectory_space(s);
      for (const auto& v : g.vertices) {
        CHECK(v.edges.size() == (v.pattern == Pattern({2}) ? 1u : 3u));
        CHECK(v.pattern == g.events[v.event].trajectory_pattern);
      }
      for (const auto& e : g.edges) CHECK(e.pattern == Pattern({1, 1}));
      // Loop edges carry no vertex; count them as a vertex-edge pair.
      long loops = 0;
      for (const auto& e : g.edges) loops += !e.start.vertex && !e.end.vertex;
      const long chi = static_cast<long>(g.vertices.size()) + loops - static_cast<long>(g.edges.size());
      CHECK(chi == 1 - static_cast<long>(s.holes.size()));
    }
  }

  TEST_CASE("annulus graph is trivalent with six vertices and nine edges") {
    const auto g = build_trajectory_space(testing::fixture("annulus3"));
    CHECK(g.radial);
    CHECK(g.vertices.size() == 6);
    CHECK(g.edges.size() == 9);
    CHECK(g.samples.size() == 6);
  }

  TEST_CASE("radial annulus without holes is a single loop") {
    const auto g = build_trajectory_space(testing::fixture("annulus_radial"));
    CHECK(g.events.empty());
    CHECK(g.vertices.empty());
    REQUIRE(g.edges.size() == 1);
    CHECK_FALSE(g.edges[0].start.vertex.has_value());
    CHECK(g.edges[0].start.role == SlabEndRole::None);
  }

  TEST_CASE("sweep is deterministic across thread counts") {
    for (const auto* name : {"annulus3", "fig1"}) {
      CAPTURE(name);
      const Scene s = testing::fixture(name);
      set_thread_count(1);
      const auto a = build_trajectory_space(s);
      set_thread_count(4);
      const auto b = build_trajectory_space(s);
      set_thread_count(0);
      REQUIRE(a.events.size() == b.events.size());
      for (std::size_t i = 0; i < a.events.size(); ++i) {
        CHECK(a.events[i].parameter.lo() == b.events[i].parameter.lo());
        CHECK(a.events[i].parameter.hi() == b.events[i].parameter.hi());
        CHECK(a.events[i].component == b.events[i].component);
      }
      REQUIRE(a.edges.size() == b.edges.size());
      for (std::size_t i = 0; i < a.edges.size(); ++i) {
        CHECK(a.edges[i].members == b.edges[i].members);
        CHECK(a.edges[i].start.vertex == b.edges[i].start.vertex);
        CHECK(a.edges[i].end.vertex == b.edges[i].end.vertex);
      }
    }
  }

  TEST_CASE("perturbation hints") {
    const std::string a = suggest_perturbation({1, 2}, 7);
    CHECK(a == suggest_perturbation({1, 2}, 7));
    CHECK(a.rfind("translate hole2 by (", 0) == 0);
    CHECK(suggest_perturbation({0}, 7).rfind("translate outer", 0) == 0);
  }

  TEST_CASE("witness text") {
    const auto w = make_witness(RealAlgebraic::from_rational(q(1, 2)));
    CHECK(w.to_string() == "s = 1/2");
    auto roots = isolate_real_roots(UPoly{q(-2), q(0), q(1)});
    const auto irrational = make_witness(roots[1]);
    CHECK_FALSE(irrational.exact.has_value());
    CHECK(irrational.approx == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
  }
}

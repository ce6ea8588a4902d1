#pragma once

#include "traverse/geometry.hpp"
#include "traverse/scene_io.hpp"

#include <string>
#include <utility>
#include <vector>

namespace testing {

using traverse::BPoly;
using traverse::BoundaryComponent;
using traverse::ComponentRole;
using traverse::Field;
using traverse::Rational;
using traverse::Scene;

inline Rational q(long n, long d = 1) { return traverse::make_rational(n, d); }

inline BoundaryComponent circle(const Rational& cx, const Rational& cy, const Rational& r, ComponentRole role) {
  BoundaryComponent c;
  c.implicit = BPoly::circle(cx, cy, r);
  c.role = role;
  c.inside_sign = role == ComponentRole::Outer ? 1 : -1;
  c.circle = traverse::Circle{cx, cy, r};
  return c;
}

struct HoleSpec {
  Rational cx, cy, r;
};

/// Outer circle about the origin plus circular holes.
inline Scene disk_scene(const Rational& radius, const std::vector<HoleSpec>& holes, Field field = Field::constant(0, 1)) {
  Scene s;
  s.outer = circle(0, 0, radius, ComponentRole::Outer);
  for (const auto& h : holes) s.holes.push_back(circle(h.cx, h.cy, h.r, ComponentRole::Hole));
  s.field = std::move(field);
  const Rational m = radius + 1;
  s.bbox = {-m, -m, m, m};
  return s;
}

inline Scene fixture(const std::string& name) {
  return traverse::load_scene(std::string(TRAVERSE_FIXTURE_DIR) + "/" + name + ".json");
}

/// Fixtures that validate and are traversally generic.
inline const std::vector<std::string>& generic_fixtures() {
  static const std::vector<std::string> names{"disk",     "disk_q1",        "disk_q2",           "disk_q3",
                                              "disk_q4",  "annulus3",       "annulus_radial",    "fig1",
                                              "concentric_annulus"};
  return names;
}

/// Holes of the q-hole disk fixtures, for scenes built in code.
inline std::vector<HoleSpec> disk_holes(std::size_t count) {
  const std::vector<HoleSpec> all{{q(-3), q(1), q(1, 2)}, {q(-6, 5), q(-2), q(1, 2)},
                                  {q(7, 10), q(3, 2), q(1, 2)}, {q(13, 5), q(-1), q(1, 2)}};
  return {all.begin(), all.begin() + static_cast<long>(count)};
}

}  // namespace testing

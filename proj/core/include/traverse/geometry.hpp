#pragma once

#include "traverse/bpoly.hpp"
#include "traverse/rational.hpp"
#include "traverse/upoly.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace traverse {

enum class ComponentRole { Outer, Hole };

struct Circle {
  Rational cx, cy, radius;
};

/// One boundary curve F = 0; X lies locally on the side inside_sign * F <= 0.
struct BoundaryComponent {
  BPoly implicit;
  int inside_sign = 1;
  ComponentRole role = ComponentRole::Outer;
  /// Set when the curve was given as a circle.
  std::optional<Circle> circle;
};

struct Field {
  enum class Kind { Constant, Radial };
  Kind kind = Kind::Constant;
  /// Direction for constant fields, center for radial ones.
  Rational x, y;

  static Field constant(Rational dx, Rational dy) { return {Kind::Constant, std::move(dx), std::move(dy)}; }
  static Field radial(Rational cx, Rational cy) { return {Kind::Radial, std::move(cx), std::move(cy)}; }
};

struct BoundingBox {
  Rational xmin, ymin, xmax, ymax;
};

struct Scene {
  BoundaryComponent outer;
  std::vector<BoundaryComponent> holes;
  Field field;
  BoundingBox bbox;

  /// Outer first, then holes in file order; indices are component ids.
  std::vector<const BoundaryComponent*> components() const;
  std::size_t component_count() const { return holes.size() + 1; }
  const BoundaryComponent& component(std::size_t id) const { return id == 0 ? outer : holes.at(id - 1); }
};

/// Stable short name of a component id: "outer", "hole1", ...
std::string component_name(std::size_t id);

/// L_v F: d . grad F for constant fields, (x - cx) F_x + (y - cy) F_y for radial ones.
BPoly lie_derivative(const BPoly& f, const Field& field);

/// A rational line {point + t * direction}.
struct Line {
  Rational px, py, dx, dy;
  /// Rays start at t = 0.
  bool ray = false;
};

/// One-parameter family of trajectory lines, as polynomial maps (s, t) -> (x, y).
/// Constant field d: x = s*dy + t*dx, y = -s*dx + t*dy, so t grows along the flow
/// and s sweeps the perpendicular axis (vertical field: x = s, y = t).
/// Radial field about c in the chart rotated by the rational unit (a, b):
/// x = cx + t*(a(1 - s^2) - 2bs), y = cy + t*(b(1 - s^2) + 2as), t > 0. The chart
/// covers every ray direction except -(a, b), reached as s -> +-infinity.
class LineFamily {
 public:
  static LineFamily constant(const Rational& dx, const Rational& dy);
  static LineFamily radial(const Rational& cx, const Rational& cy, const Rational& a, const Rational& b);
  static LineFamily of(const Field& field, const std::pair<Rational, Rational>& chart = {1, 0});

  bool is_radial() const { return radial_; }
  const BPoly& x() const { return x_; }
  const BPoly& y() const { return y_; }
  const std::pair<Rational, Rational>& chart() const { return chart_; }

  /// F(x(s, t), y(s, t)) as a polynomial in (s, t).
  BPoly restrict(const BPoly& f) const { return f.substitute(x_, y_); }
  Line line(const Rational& s) const;
  /// Direction of the missing ray for radial charts.
  std::pair<Rational, Rational> missing_direction() const { return {-chart_.first, -chart_.second}; }

 private:
  bool radial_ = false;
  BPoly x_, y_;
  std::pair<Rational, Rational> chart_{1, 0};
};

/// Trajectory through a parameter value; radial fields use chart 0 (rotation
/// (1, 0), missing the ray towards -x) or chart 1 (rotation (-1, 0)).
Line trajectory_line(const Field& field, const Rational& parameter, int chart = 0);

/// F(point + t * direction).
UPoly restrict_to_line(const BPoly& f, const Line& line);

struct ValidationCheck {
  std::string name;
  bool passed = true;
  /// CURVE_SINGULAR, COMPONENTS_INTERSECT, HOLE_OUTSIDE, FIELD_VANISHES or BBOX_VIOLATION.
  std::string code;
  std::string witness;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;

  bool ok() const;
  /// First failing check, if any.
  const ValidationCheck* first_failure() const;
};

/// Exact checks of the scene invariants; never throws on invalid geometry.
ValidationReport validate_scene(const Scene& scene);

}  // namespace traverse

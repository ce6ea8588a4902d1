#include "traverse/geometry.hpp"

#include "traverse/number_field.hpp"
#include "traverse/real_roots.hpp"

#include <sstream>

namespace traverse {

std::vector<const BoundaryComponent*> Scene::components() const {
  std::vector<const BoundaryComponent*> out{&outer};
  for (const auto& h : holes) out.push_back(&h);
  return out;
}

std::string component_name(std::size_t id) { return id == 0 ? "outer" : "hole" + std::to_string(id); }

BPoly lie_derivative(const BPoly& f, const Field& field) {
  if (field.kind == Field::Kind::Constant) return field.x * f.partial_first() + field.y * f.partial_second();
  const BPoly rx = BPoly::first() - BPoly::constant(field.x);
  const BPoly ry = BPoly::second() - BPoly::constant(field.y);
  return rx * f.partial_first() + ry * f.partial_second();
}

LineFamily LineFamily::constant(const Rational& dx, const Rational& dy) {
  LineFamily fam;
  const BPoly s = BPoly::first(), t = BPoly::second();
  fam.x_ = dy * s + dx * t;
  fam.y_ = -dx * s + dy * t;
  return fam;
}

LineFamily LineFamily::radial(const Rational& cx, const Rational& cy, const Rational& a, const Rational& b) {
  LineFamily fam;
  fam.radial_ = true;
  fam.chart_ = {a, b};
  const BPoly s = BPoly::first(), t = BPoly::second();
  const BPoly one_minus_s2 = BPoly::constant(1) - s * s;
  const BPoly dir_x = a * one_minus_s2 - Rational(2) * b * s;
  const BPoly dir_y = b * one_minus_s2 + Rational(2) * a * s;
  fam.x_ = BPoly::constant(cx) + t * dir_x;
  fam.y_ = BPoly::constant(cy) + t * dir_y;
  return fam;
}

LineFamily LineFamily::of(const Field& field, const std::pair<Rational, Rational>& chart) {
  if (field.kind == Field::Kind::Constant) return constant(field.x, field.y);
  return radial(field.x, field.y, chart.first, chart.second);
}

Line LineFamily::line(const Rational& s) const {
  // Both coordinates are affine in t.
  const UPoly xs = x_.at_first(s), ys = y_.at_first(s);
  return {xs.coefficient(0), ys.coefficient(0), xs.coefficient(1), ys.coefficient(1), radial_};
}

Line trajectory_line(const Field& field, const Rational& parameter, int chart) {
  const std::pair<Rational, Rational> rotation = chart == 0 ? std::pair<Rational, Rational>{1, 0}
                                                            : std::pair<Rational, Rational>{-1, 0};
  return LineFamily::of(field, rotation).line(parameter);
}

UPoly restrict_to_line(const BPoly& f, const Line& line) {
  const BPoly t = BPoly::second();
  const BPoly x = BPoly::constant(line.px) + line.dx * t;
  const BPoly y = BPoly::constant(line.py) + line.dy * t;
  return f.substitute(x, y).at_first(0);
}

bool ValidationReport::ok() const { return first_failure() == nullptr; }

const ValidationCheck* ValidationReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

namespace {

std::string format_point(const Rational& x, const Rational& y) {
  return "(" + to_string(x) + ", " + to_string(y) + ")";
}

std::string describe(RealAlgebraic& a) {
  std::ostringstream out;
  if (auto r = a.rational_value()) {
    out << to_string(*r);
  } else {
    a.refine_until(Rational(1, 1000000));
    out << "root of " << a.polynomial().to_string('x') << " in [" << to_string(a.lo()) << ", " << to_string(a.hi())
        << "] ~ " << a.approx();
  }
  return out.str();
}

// Real roots of p in the closed interval [lo, hi].
std::vector<RealAlgebraic> roots_in(const UPoly& p, const Rational& lo, const Rational& hi) {
  std::vector<RealAlgebraic> out;
  if (p.degree() <= 0) return out;
  for (auto& r : isolate_real_roots(squarefree_part(p))) {
    if (compare(r, lo) >= 0 && compare(r, hi) <= 0) out.push_back(std::move(r));
  }
  return out;
}

// Whether the polynomials in y, with coefficients in x evaluated at alpha, have
// a common real root with y in [lo, hi].
bool common_root_over(const RealAlgebraic& alpha, const std::vector<BPoly>& polys, const Rational& lo,
                      const Rational& hi) {
  NumberField k(alpha);
  NumberField::Poly g;
  bool first = true;
  for (const auto& p : polys) {
    NumberField::Poly q = specialize(p.coefficients_in_second());
    g = first ? q : k.gcd(g, q);
    first = false;
  }
  if (k.degree(g) < 0) return true;  // every y is a root
  if (k.degree(g) == 0) return false;
  return k.count_roots(g, lo, hi) > 0;
}

int sign_in_x(const BoundaryComponent& c, const Rational& x, const Rational& y) {
  return sgn(c.implicit(x, y)) * c.inside_sign;
}

ValidationCheck check_field(const Scene& scene) {
  ValidationCheck check{"field nonvanishing on X", true, "", ""};
  if (scene.field.kind == Field::Kind::Constant) {
    if (scene.field.x == 0 && scene.field.y == 0) {
      check.passed = false;
      check.code = "FIELD_VANISHES";
      check.witness = "constant direction is zero";
    }
    return check;
  }
  const Rational& cx = scene.field.x;
  const Rational& cy = scene.field.y;
  bool outside = sign_in_x(scene.outer, cx, cy) > 0;
  for (const auto& h : scene.holes) outside = outside || sign_in_x(h, cx, cy) > 0;
  if (!outside) {
    check.passed = false;
    check.code = "FIELD_VANISHES";
    check.witness = "radial center " + format_point(cx, cy) + " lies in X";
  }
  return check;
}

ValidationCheck check_bbox(const Scene& scene, std::size_t id) {
  const auto& c = scene.component(id);
  const auto& b = scene.bbox;
  ValidationCheck check{component_name(id) + " inside bounding box", true, "", ""};
  auto fail = [&](std::string witness) {
    check.passed = false;
    check.code = "BBOX_VIOLATION";
    check.witness = std::move(witness);
  };
  if (b.xmin >= b.xmax || b.ymin >= b.ymax) {
    fail("empty bounding box");
    return check;
  }
  const struct {
    UPoly restriction;
    Rational lo, hi;
    const char* edge;
  } edges[] = {
      {c.implicit.at_first(b.xmin), b.ymin, b.ymax, "x = xmin"},
      {c.implicit.at_first(b.xmax), b.ymin, b.ymax, "x = xmax"},
      {c.implicit.at_second(b.ymin), b.xmin, b.xmax, "y = ymin"},
      {c.implicit.at_second(b.ymax), b.xmin, b.xmax, "y = ymax"},
  };
  for (const auto& e : edges) {
    if (e.restriction.is_zero() || count_roots(e.restriction, e.lo, e.hi) > 0) {
      fail(std::string("curve meets the edge ") + e.edge);
      return check;
    }
  }
  if (id == 0) {
    for (const auto& [x, y] : {std::pair{b.xmin, b.ymin}, std::pair{b.xmin, b.ymax}, std::pair{b.xmax, b.ymin},
                               std::pair{b.xmax, b.ymax}}) {
      bool excluded = sign_in_x(scene.outer, x, y) > 0;
      for (const auto& h : scene.holes) excluded = excluded || sign_in_x(h, x, y) > 0;
      if (!excluded) {
        fail("corner " + format_point(x, y) + " lies in X");
        return check;
      }
    }
  }
  return check;
}

ValidationCheck check_smooth(const Scene& scene, std::size_t id) {
  const auto& f = scene.component(id).implicit;
  ValidationCheck check{component_name(id) + " smooth", true, "", ""};
  auto fail = [&](std::string witness) {
    check.passed = false;
    check.code = "CURVE_SINGULAR";
    check.witness = std::move(witness);
  };
  if (f.total_degree() <= 0) {
    fail("constant polynomial");
    return check;
  }
  std::vector<BPoly> system{f};
  UPoly candidates;
  for (const BPoly& d : {f.partial_first(), f.partial_second()}) {
    if (d.is_zero()) continue;
    system.push_back(d);
    UPoly r = resultant_second(f, d);
    if (r.is_zero()) {
      fail("polynomial shares a factor with its gradient");
      return check;
    }
    candidates = candidates.is_zero() ? r : gcd(candidates, r);
  }
  const auto& b = scene.bbox;
  for (auto& alpha : roots_in(candidates, b.xmin, b.xmax)) {
    if (common_root_over(alpha, system, b.ymin, b.ymax)) {
      fail("singular point with x = " + describe(alpha));
      return check;
    }
  }
  return check;
}

ValidationCheck check_disjoint(const Scene& scene, std::size_t i, std::size_t j) {
  const auto& f = scene.component(i).implicit;
  const auto& h = scene.component(j).implicit;
  ValidationCheck check{component_name(i) + " disjoint from " + component_name(j), true, "", ""};
  UPoly r = resultant_second(f, h);
  const auto& b = scene.bbox;
  if (r.is_zero()) {
    check.passed = false;
    check.code = "COMPONENTS_INTERSECT";
    check.witness = "curves share a common factor";
    return check;
  }
  for (auto& alpha : roots_in(r, b.xmin, b.xmax)) {
    if (common_root_over(alpha, {f, h}, b.ymin, b.ymax)) {
      check.passed = false;
      check.code = "COMPONENTS_INTERSECT";
      check.witness = "common point with x = " + describe(alpha);
      return check;
    }
  }
  return check;
}

// Every oval of the hole crosses some vertical line between consecutive
// x-critical values, so sampling one line per cell reaches every oval.
ValidationCheck check_hole_inside(const Scene& scene, std::size_t id) {
  const auto& hole = scene.component(id);
  ValidationCheck check{component_name(id) + " inside X's outer boundary and outside other holes", true, "", ""};
  const auto& b = scene.bbox;
  UPoly critical = resultant_second(hole.implicit, hole.implicit.partial_second());
  const auto lc = hole.implicit.coefficients_in_second();
  if (!lc.empty()) critical *= lc.back();
  std::vector<Rational> cuts{b.xmin};
  if (!critical.is_zero()) {
    auto roots = roots_in(critical, b.xmin, b.xmax);
    for (auto& r : roots) r.refine_until(Rational(1, 1 << 20));
    std::vector<RealAlgebraic*> ptrs;
    for (auto& r : roots) ptrs.push_back(&r);
    separate(ptrs);
    for (auto* r : ptrs) {
      cuts.push_back(r->lo());
      cuts.push_back(r->hi());
    }
  }
  cuts.push_back(b.xmax);
  bool any_point = false;
  for (std::size_t k = 0; k + 1 < cuts.size(); k += 2) {
    if (cuts[k] >= cuts[k + 1]) continue;
    const Rational x0 = midpoint(cuts[k], cuts[k + 1]);
    for (auto& beta : roots_in(hole.implicit.at_first(x0), b.ymin, b.ymax)) {
      any_point = true;
      for (std::size_t other = 0; other < scene.component_count(); ++other) {
        if (other == id) continue;
        const auto& c = scene.component(other);
        if (beta.sign_of(c.implicit.at_first(x0)) * c.inside_sign >= 0) {
          check.passed = false;
          check.code = "HOLE_OUTSIDE";
          check.witness = "hole point with x = " + to_string(x0) + ", y ~ " + std::to_string(beta.approx()) +
                          " is not in the interior side of " + component_name(other);
          return check;
        }
      }
    }
  }
  if (!any_point) {
    check.passed = false;
    check.code = "HOLE_OUTSIDE";
    check.witness = "hole curve has no real points in the bounding box";
  }
  return check;
}

}  // namespace

ValidationReport validate_scene(const Scene& scene) {
  ValidationReport report;
  report.checks.push_back(check_field(scene));
  for (std::size_t i = 0; i < scene.component_count(); ++i) report.checks.push_back(check_bbox(scene, i));
  for (std::size_t i = 0; i < scene.component_count(); ++i) report.checks.push_back(check_smooth(scene, i));
  for (std::size_t i = 0; i < scene.component_count(); ++i) {
    for (std::size_t j = i + 1; j < scene.component_count(); ++j) report.checks.push_back(check_disjoint(scene, i, j));
  }
  for (std::size_t i = 1; i < scene.component_count(); ++i) report.checks.push_back(check_hole_inside(scene, i));
  return report;
}

}  // namespace traverse

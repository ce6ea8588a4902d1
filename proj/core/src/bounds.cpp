#include "traverse/bounds.hpp"

#include <algorithm>

namespace traverse {

Rational surface_simplicial_volume(int genus) {
  if (genus <= 1) return 0;
  return Rational(4 * genus - 4);
}

HDeltaRanks hdelta_ranks_surface(std::size_t holes) {
  HDeltaRanks r;
  r.dx = {1, 0, holes >= 2 ? 1 : 0};
  r.x = {1, 0, 0};
  return r;
}

bool BoundsReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.passed; });
}

namespace {

BoundCheck compare(std::string name, std::string statement, const Rational& lhs, const Rational& rhs) {
  BoundCheck c;
  c.name = std::move(name);
  c.statement = std::move(statement);
  c.lhs = lhs;
  c.rhs = rhs;
  c.passed = lhs >= rhs;
  return c;
}

}  // namespace

BoundsReport check_all(const StrataTable& table, const ComplexityVector& complexity,
                       const MinimalStrata& minimal) {
  BoundsReport r;
  const std::size_t q = table.holes;
  r.genus = static_cast<int>(q);
  r.volume = surface_simplicial_volume(r.genus);
  r.hdelta = hdelta_ranks_surface(q);

  const std::size_t vertices = complexity.tc.empty() ? 0 : complexity.tc[0];
  const std::size_t points = complexity.sigma_tc.empty() ? 0 : complexity.sigma_tc[0];

  r.checks.push_back(compare("rank_bound", "#(0-dim strata of DX) >= rk H^D_2(DX)", Rational(points),
                             Rational(r.hdelta.dx[2])));

  if (r.volume > 0) {
    r.rho_ratio = Rational(vertices) / r.volume;
    auto c = compare("rho_ratio", "#T(v)_{-1} / ||[DX]|| >= 0", *r.rho_ratio, 0);
    c.note = "empirical upper bound for rho(1)";
    r.checks.push_back(c);
  } else {
    auto c = compare("rho_ratio", "#T(v)_{-1} >= 0 (volume vanishes)", Rational(vertices), 0);
    c.vacuous = true;
    c.note = "no ratio: ||[DX]|| = 0";
    r.checks.push_back(c);
  }

  r.checks.push_back(compare("generator_bound", "sum over minimal strata of (#sup - 1) >= c_gen = q",
                             Rational(minimal.generator_bound), Rational(q)));

  r.checks.push_back(compare("component_bound", "#S_min >= (m - 1) / (n + 1) with m = q + 1, n = 1",
                             Rational(minimal.ids.size()), make_rational(static_cast<long>(q), 2)));

  auto convex = compare("convexity_obstruction", "||[DX]|| > 0 implies #T(v)_{-1} >= 1", Rational(vertices),
                        r.volume > 0 ? Rational(1) : Rational(0));
  convex.vacuous = r.volume == 0;
  r.checks.push_back(convex);

  r.notes.push_back("H^D_k(X) = 0 for k >= 1: X is homotopy equivalent to a wedge of circles, so the X-side "
                    "rank bounds are vacuous");
  r.notes.push_back("theta(omega*) >= 2^n + n for the deepest pattern; doubled form 2(2^n + n)");
  return r;
}

std::optional<Rational> empirical_rho_bound(const std::vector<BoundsReport>& reports) {
  std::optional<Rational> best;
  for (const auto& r : reports) {
    if (r.rho_ratio && (!best || *r.rho_ratio < *best)) best = r.rho_ratio;
  }
  return best;
}

}  // namespace traverse

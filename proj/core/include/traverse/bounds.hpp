#pragma once

#include "traverse/rational.hpp"
#include "traverse/strata.hpp"

#include <optional>
#include <string>
#include <vector>

namespace traverse {

/// Simplicial volume of the fundamental class of a closed orientable surface.
Rational surface_simplicial_volume(int genus);

struct HDeltaRanks {
  /// Indexed by degree 0..2.
  std::vector<int> dx;
  std::vector<int> x;
};

/// Ranks of homology modulo zero-norm classes for a planar domain with
/// `holes` holes and its double (genus = holes).
HDeltaRanks hdelta_ranks_surface(std::size_t holes);

struct BoundCheck {
  std::string name;
  /// Human-readable inequality being checked, lhs >= rhs.
  std::string statement;
  Rational lhs, rhs;
  bool passed = false;
  /// The hypothesis of the check does not apply to this scene.
  bool vacuous = false;
  std::string note;
};

struct BoundsReport {
  int genus = 0;
  Rational volume;
  HDeltaRanks hdelta;
  std::vector<BoundCheck> checks;
  /// #T(v)_{-1} / volume, when the volume is nonzero.
  std::optional<Rational> rho_ratio;
  std::vector<std::string> notes;

  bool all_passed() const;
};

BoundsReport check_all(const StrataTable& table, const ComplexityVector& complexity,
                       const MinimalStrata& minimal);

/// Running minimum of the reported ratios; scenes without a ratio are skipped.
std::optional<Rational> empirical_rho_bound(const std::vector<BoundsReport>& reports);

}  // namespace traverse

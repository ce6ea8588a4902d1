#pragma once

#include "traverse/omega.hpp"
#include "traverse/rational.hpp"
#include "traverse/real_roots.hpp"
#include "traverse/upoly.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace traverse {

/// prod_i [(u - i)^{w_i} + sum_{l <= w_i - 2} x_{i,l} (u - i)^l] with centers
/// i = 1..len(w).
struct ModelPolynomial {
  Pattern pattern;
  /// Keyed by (center index i starting at 1, exponent l).
  std::map<std::pair<int, int>, Rational> parameters;

  /// The factor attached to center i.
  UPoly factor(int i) const;
  UPoly expand() const;
};

/// All parameters present and zero.
ModelPolynomial build_model(const Pattern& w);

/// Pattern sequence cut out by {p <= 0} for a monic even-degree p.
PatternSequence trajectory_patterns(const UPoly& p);

/// A sampled trajectory of the model, with the root labels of its two ends:
/// (center index, position among that factor's real roots).
struct LabelledTrajectory {
  std::pair<int, int> first;
  std::pair<int, int> last;
  friend auto operator<=>(const LabelledTrajectory&, const LabelledTrajectory&) = default;
};

struct OracleReport {
  Pattern pattern;
  int samples = 0;
  Rational magnitude;
  std::uint64_t seed = 0;
  std::set<PatternSequence> observed;
  std::set<PatternSequence> expected;
  bool contained = false;
  /// Distinct observed sequences whose patterns are all (11).
  int all_simple_sequences = 0;
  /// Distinct end-labelled (11) trajectories over all-simple samples: the
  /// top-dimensional cells swept by the perturbation.
  int chamber_count = 0;
  /// 2^n + n for n = |w|', the expected top-cell count when w is (1 2 ... 2 1).
  int expected_chambers = 0;
};

/// Parameter vectors with entries d * k / 1000, k uniform in [-1000, 1000] \ {0}.
/// Deterministic for a seed; evaluation runs in parallel.
std::set<PatternSequence> sampled_patterns(const Pattern& w, int sample_count, const Rational& magnitude,
                                           std::uint64_t seed = 0);

/// Sampling plus containment and chamber statistics. Throws Error(InvalidArgument)
/// for sample_count < 1 or magnitude <= 0.
OracleReport run_oracle(const Pattern& w, int sample_count, const Rational& magnitude, std::uint64_t seed = 0);

}  // namespace traverse

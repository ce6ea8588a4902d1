#pragma once

#include <compare>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace traverse {

/// True iff the multiplicity sequence is a tangency pattern: a single even
/// entry, or odd first and last entries with every interior entry even.
bool is_admissible(std::span<const int> entries);

/// An admissible tangency pattern: the multiplicities of the boundary points of
/// one trajectory, in flow order.
class Pattern {
 public:
  /// Throws Error(InvalidArgument) unless the entries are admissible.
  explicit Pattern(std::vector<int> entries);

  /// Accepts "121", "(121)", or comma separated "1,12,1".
  static Pattern parse(std::string_view text);

  const std::vector<int>& entries() const { return entries_; }
  int norm() const;
  int reduced_norm() const;
  int support() const { return static_cast<int>(entries_.size()); }
  bool is_singleton() const { return entries_.size() == 1; }

  std::string to_string() const;

  /// Canonical order: reduced norm, then norm, then lexicographic.
  friend std::strong_ordering operator<=>(const Pattern& a, const Pattern& b);
  friend bool operator==(const Pattern& a, const Pattern& b) = default;

 private:
  std::vector<int> entries_;
};

/// Trajectory patterns of a one-parameter family member, in flow order.
using PatternSequence = std::vector<Pattern>;

std::string to_string(const PatternSequence& seq);

/// Admissible patterns with reduced norm <= n, canonically ordered.
std::vector<Pattern> enumerate_patterns(int n);

/// Components of {p <= 0} for a monic even-degree p whose real roots have the
/// given multiplicities in increasing order. Throws Error(InvalidArgument) if
/// the number of odd multiplicities is odd.
PatternSequence segment_patterns(std::span<const int> multiplicities);

/// Pattern sequences realised by small perturbations of the local model of w:
/// each entry keeps w_i - 2c_i real roots (c_i complex pairs escape) in any
/// composition, and the concatenation is segmented.
std::set<PatternSequence> resolutions(const Pattern& w);

/// Poset on the patterns of reduced norm <= n. A relation (deep, shallow)
/// means the shallow pattern occurs near the deep one; deeper patterns have
/// larger reduced norm.
struct PatternPoset {
  int n = 0;
  std::vector<Pattern> elements;
  /// Index pairs into elements.
  std::vector<std::pair<int, int>> relations;
};

/// Requires 0 <= n <= 6.
PatternPoset build_poset(int n);

/// Hasse diagram (covering relations) as a DOT digraph; node labels read
/// "w | |w| | |w|'".
std::string export_hasse_dot(const PatternPoset& poset);

}  // namespace traverse

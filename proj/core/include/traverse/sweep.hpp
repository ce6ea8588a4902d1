#pragma once

#include "traverse/error.hpp"
#include "traverse/geometry.hpp"
#include "traverse/omega.hpp"
#include "traverse/rational.hpp"
#include "traverse/real_roots.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace traverse {

/// Exact description of an algebraic sweep parameter for reports and errors.
struct ParameterWitness {
  UPoly polynomial;
  Rational lo, hi;
  std::optional<Rational> exact;
  double approx = 0;

  std::string to_string() const;
};

ParameterWitness make_witness(RealAlgebraic value);

/// Raised for scenes that are not traversally generic; carries the sweep
/// parameter of the offending trajectory and the components involved.
class DegenerateSceneError : public Error {
 public:
  DegenerateSceneError(const std::string& message, std::optional<ParameterWitness> witness,
                       std::vector<std::size_t> components);
  const std::optional<ParameterWitness>& witness() const { return witness_; }
  const std::vector<std::size_t>& components() const { return components_; }

 private:
  std::optional<ParameterWitness> witness_;
  std::vector<std::size_t> components_;
};

struct TangencyEvent {
  RealAlgebraic parameter;
  std::size_t component = 0;
  /// Isolating interval of the tangency position along the trajectory.
  RationalInterval position;
  double x = 0, y = 0;
  int multiplicity = 0;
  /// Crossings (all components) strictly before the tangency on its trajectory.
  int crossings_before = 0;
  Pattern trajectory_pattern{std::vector<int>{2}};
};

struct Crossing {
  std::size_t component = 0;
  RealAlgebraic position;
  double x = 0, y = 0;
};

/// Boundary crossings of one trajectory line, ordered along the flow, and the
/// trajectories (X-segments) they bound: segment i runs from crossing 2i to 2i + 1.
struct CrossingList {
  Rational parameter;
  std::vector<Crossing> crossings;
  std::vector<Pattern> segment_patterns;

  std::size_t segment_count() const { return crossings.size() / 2; }
};

/// How a slab (edge of T(v)) ends at a vertex.
enum class SlabEndRole {
  /// Loop edge without vertices (radial wrap).
  None,
  /// A (2) vertex: the slab shrinks to the tangency point.
  Singleton,
  /// A (121) vertex on the side where one trajectory spans E..T..X'.
  Whole,
  /// A (121) vertex, the piece E..T of the split trajectory.
  Lower,
  /// A (121) vertex, the piece T..X'.
  Upper,
};

struct SlabEnd {
  std::optional<std::size_t> vertex;
  SlabEndRole role = SlabEndRole::None;
};

struct GraphVertex {
  std::size_t id = 0;
  Pattern pattern{std::vector<int>{2}};
  std::size_t event = 0;
  std::vector<std::size_t> edges;  // incident edge ids, with multiplicity for loops
};

struct GraphEdge {
  std::size_t id = 0;
  Pattern pattern{std::vector<int>{1, 1}};
  /// Samples covered, in sweep order, with the segment index in each.
  std::vector<std::pair<std::size_t, std::size_t>> members;
  /// Events bounding the parameter interval; empty for loop edges.
  std::optional<std::size_t> start_event, end_event;
  /// Slab ends at the lower and upper parameter side.
  SlabEnd start, end;
};

struct TrajectoryGraph {
  bool radial = false;
  std::pair<Rational, Rational> chart{1, 0};
  std::vector<TangencyEvent> events;
  /// Constant fields: samples[i] lies between events i - 1 and i (n + 1 samples).
  /// Radial fields: samples[i] lies between events i - 1 and i cyclically (n samples,
  /// at least one); samples[0] is also the sample after the last event.
  std::vector<CrossingList> samples;
  std::vector<GraphVertex> vertices;
  std::vector<GraphEdge> edges;

  std::size_t count_vertices(const Pattern& p) const;
  /// Sample before and after event i.
  std::size_t sample_before(std::size_t event) const { return event; }
  std::size_t sample_after(std::size_t event) const;
};

/// Tangency events sorted by parameter. Throws DegenerateSceneError when the
/// scene is not traversally generic.
std::vector<TangencyEvent> tangency_events(const Scene& scene);

/// Crossings and trajectories of the line at a non-event parameter, for the
/// default line family (radial chart rotation (1, 0)).
CrossingList interval_structure(const Scene& scene, const Rational& parameter);
CrossingList interval_structure(const Scene& scene, const LineFamily& family, const Rational& parameter);

/// Full sweep. Throws DegenerateSceneError, or Error(MatchingAmbiguous) when
/// crossing continuity does not determine the matching across an event.
TrajectoryGraph build_trajectory_space(const Scene& scene);

struct GenericityDiagnostic {
  std::string message;
  std::optional<ParameterWitness> witness;
  std::vector<std::size_t> components;
};

struct GenericityReport {
  bool passed = true;
  std::vector<GenericityDiagnostic> diagnostics;
};

GenericityReport check_traversally_generic(const Scene& scene);

/// A small random rational translation of the last component involved in a
/// degeneracy (the outer curve only when no hole is involved).
std::string suggest_perturbation(const std::vector<std::size_t>& components, std::uint64_t seed);

}  // namespace traverse

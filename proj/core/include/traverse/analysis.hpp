#pragma once

#include "traverse/bounds.hpp"
#include "traverse/geometry.hpp"
#include "traverse/homology.hpp"
#include "traverse/strata.hpp"
#include "traverse/sweep.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace traverse {

struct AnalysisOptions {
  std::uint64_t seed = 0;
  /// Invariant cross-check failures become errors.
  bool strict = false;
  /// Attach a perturbation hint to genericity rejections.
  bool suggest_perturbation = false;
};

struct InvariantCheck {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct AnalysisError {
  /// PARSE, IO, VALIDATION, DEGENERATE_SCENE, CHECK_FAILED, INVARIANT_VIOLATED, ...
  std::string code;
  std::string message;
};

struct Analysis {
  AnalysisOptions options;
  std::optional<Scene> scene;
  std::optional<ValidationReport> validation;
  std::optional<GenericityReport> genericity;
  std::optional<std::string> perturbation_hint;
  std::optional<TrajectoryGraph> graph;
  std::optional<StrataTable> strata;
  std::optional<ComplexityVector> complexity;
  std::optional<MinimalStrata> minimal;
  std::optional<ChainComplex> tv_complex, dx_complex;
  std::optional<HomologyGroups> tv_homology, dx_homology;
  std::optional<BoundsReport> bounds;
  std::vector<InvariantCheck> invariants;
  std::optional<AnalysisError> error;
  /// 0 all checks pass, 2 genericity rejection, 1 any other failure.
  int exit_code = 0;
};

/// validate, sweep, strata, homology, bounds and invariant cross-checks.
/// Never throws; failures are recorded in `error` and `exit_code`.
Analysis analyze(const Scene& scene, const AnalysisOptions& options = {});
Analysis analyze_file(const std::filesystem::path& path, const AnalysisOptions& options = {});

/// Invariants of a finished pipeline: Euler characteristics, Betti numbers,
/// the vertex-degree law, the doubling identity and the strata count formula.
std::vector<InvariantCheck> check_invariants(const Analysis& analysis);

}  // namespace traverse

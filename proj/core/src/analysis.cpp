#include "traverse/analysis.hpp"

#include "traverse/error.hpp"
#include "traverse/scene_io.hpp"

#include <sstream>

namespace traverse {

namespace {

void fail(Analysis& a, std::string code, std::string message, int exit_code = 1) {
  a.error = AnalysisError{std::move(code), std::move(message)};
  a.exit_code = exit_code;
}

template <class T>
std::string join(const std::vector<T>& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i];
  out << ")";
  return out.str();
}

InvariantCheck make_check(std::string name, bool passed, std::string detail) {
  return InvariantCheck{std::move(name), passed, std::move(detail)};
}

}  // namespace

std::vector<InvariantCheck> check_invariants(const Analysis& a) {
  std::vector<InvariantCheck> out;
  if (!a.graph || !a.strata || !a.tv_homology || !a.dx_homology || !a.complexity) return out;
  const auto q = static_cast<int>(a.strata->holes);

  const int tv_chi = a.tv_homology->euler;
  out.push_back(make_check("tv_euler", tv_chi == 1 - q,
                           "chi(T(v)) = " + std::to_string(tv_chi) + ", expected " + std::to_string(1 - q)));

  const std::vector<std::size_t> tv_expected{1, static_cast<std::size_t>(q)};
  out.push_back(make_check("tv_homology_equivalent_to_x", a.tv_homology->betti == tv_expected,
                           "H(T(v)) ranks " + join(a.tv_homology->betti) + ", expected " + join(tv_expected)));

  const std::vector<std::size_t> dx_expected{1, static_cast<std::size_t>(2 * q), 1};
  bool torsion_free = true;
  for (const auto& t : a.dx_homology->torsion) torsion_free = torsion_free && t.empty();
  out.push_back(make_check("dx_betti", a.dx_homology->betti == dx_expected && torsion_free,
                           "Betti(DX) " + join(a.dx_homology->betti) + ", expected " + join(dx_expected) +
                               (torsion_free ? ", torsion-free" : ", torsion present")));

  const int dx_chi = a.dx_homology->euler;
  out.push_back(make_check("doubling_euler", dx_chi == 2 * (1 - q),
                           "chi(DX) = " + std::to_string(dx_chi) + ", 2 chi(X) = " + std::to_string(2 * (1 - q))));

  bool doubling = true;
  std::ostringstream counts;
  for (int d = 0; d <= 2; ++d) {
    std::size_t boundary = 0;
    for (const auto& s : a.strata->x) {
      if (s.dimension == d && s.location == Location::Boundary) ++boundary;
    }
    const std::size_t x = a.strata->count(Space::X, d), dx = a.strata->count(Space::DX, d);
    doubling = doubling && dx == 2 * x - boundary;
    counts << (d ? ", " : "") << "dim " << d << ": " << dx << " = 2*" << x << " - " << boundary;
  }
  out.push_back(make_check("doubling_counts", doubling, counts.str()));

  const auto& cv = *a.complexity;
  const std::size_t points = cv.sigma_tc.empty() ? 0 : cv.sigma_tc[0];
  out.push_back(make_check("count_formula", points == cv.support_count,
                           "#(0-dim DX strata) = " + std::to_string(points) +
                               ", sum #sup * #components = " + std::to_string(cv.support_count)));

  bool degree_law = true;
  for (const auto& v : a.graph->vertices) {
    const std::size_t expected = v.pattern.is_singleton() ? 1 : 3;
    degree_law = degree_law && v.edges.size() == expected;
  }
  out.push_back(make_check("degree_law", degree_law, "univalent vertices are (2), trivalent vertices are (121)"));
  return out;
}

Analysis analyze(const Scene& scene, const AnalysisOptions& options) {
  Analysis a;
  a.options = options;
  a.scene = scene;
  try {
    a.validation = validate_scene(scene);
    if (const auto* f = a.validation->first_failure()) {
      fail(a, "VALIDATION", f->code + ": " + f->witness);
      return a;
    }
    try {
      a.graph = build_trajectory_space(scene);
      GenericityReport g;
      std::ostringstream msg;
      msg << a.graph->events.size() << " tangency events, all of multiplicity 2 on distinct trajectories";
      g.diagnostics.push_back({msg.str(), std::nullopt, {}});
      a.genericity = g;
    } catch (const DegenerateSceneError& e) {
      GenericityReport g;
      g.passed = false;
      g.diagnostics.push_back({e.what(), e.witness(), e.components()});
      a.genericity = g;
      if (options.suggest_perturbation) a.perturbation_hint = suggest_perturbation(e.components(), options.seed);
      fail(a, "DEGENERATE_SCENE", e.what(), 2);
      return a;
    }
    a.strata = build_strata(*a.graph, scene);
    a.complexity = complexity_vectors(*a.strata);
    a.minimal = minimal_strata(*a.strata);
    a.tv_complex = mho_complex_of_graph(*a.graph);
    a.dx_complex = cw_complex_of_double(*a.strata);
    a.tv_homology = compute_homology(*a.tv_complex);
    a.dx_homology = compute_homology(*a.dx_complex);
    a.bounds = check_all(*a.strata, *a.complexity, *a.minimal);
    a.invariants = check_invariants(a);

    if (!a.bounds->all_passed()) {
      for (const auto& c : a.bounds->checks) {
        if (!c.passed) {
          fail(a, "CHECK_FAILED", c.name + ": " + c.statement + " fails with lhs " + to_string(c.lhs) + ", rhs " +
                                      to_string(c.rhs));
          break;
        }
      }
    } else if (options.strict) {
      for (const auto& c : a.invariants) {
        if (!c.passed) {
          fail(a, "INVARIANT_VIOLATED", c.name + ": " + c.detail);
          break;
        }
      }
    }
  } catch (const Error& e) {
    fail(a, std::string(to_string(e.code())), e.what(), e.code() == ErrorCode::DegenerateScene ? 2 : 1);
  } catch (const std::exception& e) {
    fail(a, "INTERNAL", e.what());
  }
  return a;
}

Analysis analyze_file(const std::filesystem::path& path, const AnalysisOptions& options) {
  try {
    return analyze(load_scene(path), options);
  } catch (const Error& e) {
    Analysis a;
    a.options = options;
    fail(a, std::string(to_string(e.code())), e.what());
    return a;
  }
}

}  // namespace traverse

#include "traverse/analysis.hpp"
#include "traverse/local_model.hpp"
#include "traverse/omega.hpp"
#include "traverse/parallel.hpp"
#include "traverse/report.hpp"
#include "traverse/scene_io.hpp"
#include "traverse/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace traverse;

namespace {

constexpr double kSceneSeconds = 10.0;
constexpr double kOracleSeconds = 60.0;
constexpr int kOracleSamples = 200;
constexpr int kOracleMaxNorm = 8;

const std::string kFixtures = TRAVERSE_FIXTURE_DIR;

const std::vector<std::string> kGeneric = {"disk",   "disk_q1",        "disk_q2", "disk_q3",
                                           "disk_q4", "annulus3",      "annulus_radial", "fig1",
                                           "concentric_annulus"};

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

struct Criterion {
  int number;
  std::string title;
  bool passed = true;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      failures.push_back(what);
    }
  }
};

Scene load(const std::string& name) { return load_scene(kFixtures + "/" + name + ".json"); }

struct Timed {
  Analysis analysis;
  double seconds = 0;
};

Timed run(const std::string& name) {
  Timer t;
  Analysis a = analyze_file(kFixtures + "/" + name + ".json");
  return {std::move(a), t.seconds()};
}

std::string str(const Rational& r) { return r.get_str(); }

template <typename T>
std::string list(const std::vector<T>& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ")";
  return out.str();
}

bool analyzed(Criterion& c, const std::string& name, const Timed& t) {
  c.expect(t.seconds < kSceneSeconds, name + " took " + std::to_string(t.seconds) + " s");
  const Analysis& a = t.analysis;
  if (a.exit_code != 0 || !a.graph || !a.strata || !a.bounds || !a.dx_homology || !a.tv_homology) {
    c.expect(false, name + " analysis failed" + (a.error ? ": " + a.error->code + " " + a.error->message : ""));
    return false;
  }
  return true;
}

bool valid_parity(const std::vector<int>& w) {
  if (w.size() == 1) return w[0] % 2 == 0;
  if (w.front() % 2 == 0 || w.back() % 2 == 0) return false;
  for (std::size_t i = 1; i + 1 < w.size(); ++i)
    if (w[i] % 2 != 0) return false;
  return true;
}

/// Every parity-valid multiplicity sequence with norm <= max_norm.
std::vector<Pattern> patterns_up_to_norm(int max_norm) {
  std::vector<Pattern> out;
  std::vector<int> cur;
  std::function<void(int)> grow = [&](int sum) {
    if (!cur.empty() && valid_parity(cur)) out.emplace_back(cur);
    for (int m = 1; sum + m <= max_norm; ++m) {
      cur.push_back(m);
      grow(sum + m);
      cur.pop_back();
    }
  };
  grow(0);
  return out;
}

Criterion radial_example() {
  Criterion c{1, "radial annulus3: 6 (121) vertices, V=6 E=9 trivalent, 18 points, volume 12, ratio 1/2"};
  const Timed t = run("annulus3");
  if (!analyzed(c, "annulus3", t)) return c;
  const Analysis& a = t.analysis;
  const auto& g = *a.graph;
  c.expect(g.vertices.size() == 6, "vertex trajectories " + std::to_string(g.vertices.size()));
  c.expect(g.count_vertices(Pattern({1, 2, 1})) == 6, "(121) vertices " +
                                                         std::to_string(g.count_vertices(Pattern({1, 2, 1}))));
  c.expect(g.edges.size() == 9, "edges " + std::to_string(g.edges.size()));
  for (const auto& v : g.vertices) c.expect(v.edges.size() == 3, "vertex of degree " + std::to_string(v.edges.size()));
  c.expect(a.strata->count(Space::DX, 0) == 18, "0-dim DX strata " + std::to_string(a.strata->count(Space::DX, 0)));
  c.expect(a.bounds->volume == 12, "volume " + str(a.bounds->volume));
  c.expect(a.bounds->rho_ratio && *a.bounds->rho_ratio == make_rational(1, 2),
           "ratio " + (a.bounds->rho_ratio ? str(*a.bounds->rho_ratio) : std::string("none")));
  return c;
}

Criterion fig1_example() {
  Criterion c{2, "fig1: 12 vertex trajectories split (3,9), 30 points, ratio 1"};
  const Timed t = run("fig1");
  if (!analyzed(c, "fig1", t)) return c;
  const Analysis& a = t.analysis;
  const auto& g = *a.graph;
  const auto t2 = g.count_vertices(Pattern({2})), t121 = g.count_vertices(Pattern({1, 2, 1}));
  c.expect(g.vertices.size() == 12, "vertex trajectories " + std::to_string(g.vertices.size()));
  c.expect(t2 == 3 && t121 == 9, "split (" + std::to_string(t2) + "," + std::to_string(t121) + ")");
  c.expect(a.strata->count(Space::DX, 0) == 30, "0-dim DX strata " + std::to_string(a.strata->count(Space::DX, 0)));
  c.expect(a.bounds->rho_ratio && *a.bounds->rho_ratio == 1,
           "ratio " + (a.bounds->rho_ratio ? str(*a.bounds->rho_ratio) : std::string("none")));
  return c;
}

Criterion homology_suite() {
  Criterion c{3, "homology: Betti(DX) = (1,2q,1) torsion-free, chi = 2-2q, H(T(v)) ranks (1,q), q = 0..4"};
  const std::vector<std::string> names = {"disk", "disk_q1", "disk_q2", "disk_q3", "disk_q4"};
  for (std::size_t q = 0; q < names.size(); ++q) {
    const Timed t = run(names[q]);
    if (!analyzed(c, names[q], t)) continue;
    const auto& dx = *t.analysis.dx_homology;
    const auto& tv = *t.analysis.tv_homology;
    const std::vector<std::size_t> want_dx{1, 2 * q, 1}, want_tv{1, q};
    c.expect(dx.betti == want_dx, names[q] + " Betti(DX) " + list(dx.betti));
    for (const auto& tors : dx.torsion) c.expect(tors.empty(), names[q] + " has torsion");
    c.expect(dx.euler == 2 - 2 * static_cast<int>(q), names[q] + " chi(DX) " + std::to_string(dx.euler));
    c.expect(tv.betti == want_tv, names[q] + " H(T(v)) " + list(tv.betti));
  }
  return c;
}

Criterion enumeration() {
  Criterion c{4, "enumeration: n=1 is {(11),(2),(121)}; n=3 contains (12221),(123),(321),(141),(4); parity holds"};
  const auto one = enumerate_patterns(1);
  const std::set<Pattern> got(one.begin(), one.end());
  const std::set<Pattern> want{Pattern({1, 1}), Pattern({2}), Pattern({1, 2, 1})};
  c.expect(one.size() == 3 && got == want, "n=1 listing has " + std::to_string(one.size()) + " entries");
  const auto three = enumerate_patterns(3);
  for (const auto& w : {Pattern({1, 2, 2, 2, 1}), Pattern({1, 2, 3}), Pattern({3, 2, 1}), Pattern({1, 4, 1}), Pattern({4})}) {
    c.expect(std::find(three.begin(), three.end(), w) != three.end(), "n=3 lacks " + w.to_string());
  }
  for (int n = 0; n <= 6; ++n) {
    for (const auto& w : enumerate_patterns(n)) {
      c.expect(valid_parity(w.entries()), w.to_string() + " violates parity");
      c.expect(w.reduced_norm() <= n, w.to_string() + " exceeds reduced norm " + std::to_string(n));
    }
  }
  return c;
}

Criterion oracle_containment() {
  Criterion c{5, "oracle: observed sequences within resolutions for |w| <= 8 at 200 samples; (1221) has 6 chambers"};
  Timer t;
  const Rational magnitude = make_rational(1, 1000);
  const auto patterns = patterns_up_to_norm(kOracleMaxNorm);
  for (const auto& w : patterns) {
    const OracleReport r = run_oracle(w, kOracleSamples, magnitude, 0);
    c.expect(r.contained, w.to_string() + " produced a sequence outside its resolutions");
  }
  const OracleReport a = run_oracle(Pattern({1, 2, 2, 1}), kOracleSamples, magnitude, 0);
  const OracleReport b = run_oracle(Pattern({1, 2, 2, 1}), kOracleSamples, magnitude, 0);
  c.expect(a.chamber_count == 6, "(1221) chamber count " + std::to_string(a.chamber_count));
  c.expect(a.observed == b.observed && a.chamber_count == b.chamber_count, "oracle is not deterministic");
  c.expect(t.seconds() < kOracleSeconds, "oracle took " + std::to_string(t.seconds()) + " s");
  c.title += " [" + std::to_string(patterns.size()) + " patterns]";
  return c;
}

Criterion bound_checks() {
  Criterion c{6, "bound checks (a)-(e) pass on every generic fixture"};
  for (const auto& name : kGeneric) {
    const Timed t = run(name);
    if (!analyzed(c, name, t)) continue;
    const auto& b = *t.analysis.bounds;
    c.expect(b.checks.size() == 5, name + " has " + std::to_string(b.checks.size()) + " checks");
    for (const auto& check : b.checks) {
      c.expect(check.passed, name + " " + check.name + ": " + str(check.lhs) + " < " + str(check.rhs));
      c.expect(check.passed == (check.lhs >= check.rhs), name + " " + check.name + " verdict disagrees");
    }
    const std::size_t q = t.analysis.strata->holes;
    const auto& g = *t.analysis.graph;
    const auto t2 = g.count_vertices(Pattern({2})), t121 = g.count_vertices(Pattern({1, 2, 1}));
    if (q >= 2) c.expect(!g.vertices.empty(), name + " has no vertex trajectories");
    // With every minimal stratum a vertex the generator and component checks
    // reduce to vertex counts.
    if (t.analysis.minimal->ids.size() == g.vertices.size()) {
      c.expect(2 * t121 >= q, name + " 2 t121 < q");
      c.expect(2 * (t2 + t121) >= q, name + " t2 + t121 < q/2");
    }
  }
  return c;
}

Criterion structural() {
  Criterion c{7, "structural invariants: boundary squares to zero, degree law, doubling identity, thread determinism"};
  for (const auto& name : kGeneric) {
    const Timed t = run(name);
    if (!analyzed(c, name, t)) continue;
    const Analysis& a = t.analysis;
    c.expect(a.dx_complex->boundary_squares_to_zero(), name + " DX boundary does not square to zero");
    c.expect(a.tv_complex->boundary_squares_to_zero(), name + " T(v) boundary does not square to zero");
    for (const auto& v : a.graph->vertices) {
      const std::size_t want = v.pattern == Pattern({2}) ? 1 : v.pattern == Pattern({1, 2, 1}) ? 3 : 0;
      c.expect(v.edges.size() == want, name + " vertex " + v.pattern.to_string() + " has degree " +
                                           std::to_string(v.edges.size()));
    }
    const auto& st = *a.strata;
    for (int j = 0; j <= 2; ++j) {
      std::size_t doubled = 0;
      for (const auto& s : st.x)
        if (s.dimension == j) doubled += s.location == Location::Boundary ? 1 : 2;
      c.expect(st.count(Space::DX, j) == doubled, name + " doubling identity fails in dimension " + std::to_string(j));
    }
    c.expect(a.dx_homology->euler == 2 * (1 - static_cast<int>(st.holes)), name + " chi(DX) != 2 chi(X)");
    for (const auto& inv : a.invariants) c.expect(inv.passed, name + " invariant " + inv.name + ": " + inv.detail);

    const Scene s = load(name);
    set_thread_count(1);
    const std::string serial = report_json(analyze(s));
    set_thread_count(4);
    const std::string parallel = report_json(analyze(s));
    set_thread_count(0);
    c.expect(serial == parallel, name + " report differs across thread counts");
  }
  return c;
}

Criterion degeneracy() {
  Criterion c{8, "degenerate scenes: concentric annulus and double tangent rejected with a witness"};
  struct Case {
    std::string name;
    std::optional<Rational> witness;
  };
  for (const auto& [name, expected] : std::vector<Case>{{"concentric_annulus", std::nullopt},
                                                        {"double_tangent", make_rational(1, 2)}}) {
    const Timed t = run(name);
    const Analysis& a = t.analysis;
    const bool rejected = a.exit_code == 2 && a.error && a.error->code == "DEGENERATE_SCENE";
    if (!rejected) {
      std::string params;
      if (a.graph)
        for (auto e : a.graph->events) {
          const auto exact = e.parameter.rational_value();
          params += " " + (exact ? str(*exact) : std::to_string(e.parameter.approx()));
        }
      c.expect(false, name + " not rejected (exit " + std::to_string(a.exit_code) + "); tangency parameters" + params);
      continue;
    }
    const auto& diags = a.genericity->diagnostics;
    c.expect(!diags.empty() && diags.front().witness, name + " has no witness");
    if (expected && !diags.empty() && diags.front().witness) {
      const auto& w = *diags.front().witness;
      c.expect(w.exact && *w.exact == *expected, name + " witness is not " + str(*expected));
    }
  }
  return c;
}

}  // namespace

int main() {
  std::vector<Criterion> results;
  results.push_back(radial_example());
  results.push_back(fig1_example());
  results.push_back(homology_suite());
  results.push_back(enumeration());
  results.push_back(oracle_containment());
  results.push_back(bound_checks());
  results.push_back(structural());
  results.push_back(degeneracy());

  bool all = true;
  for (const auto& c : results) {
    std::cout << (c.passed ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << "\n";
    for (const auto& f : c.failures) std::cout << "    " << f << "\n";
    all = all && c.passed;
  }
  return all ? 0 : 1;
}

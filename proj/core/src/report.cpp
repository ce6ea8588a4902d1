#include "traverse/report.hpp"

#include "traverse/scene_io.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>

namespace traverse {

using json = nlohmann::ordered_json;

std::string_view version() { return TRAVERSE_VERSION; }

namespace {

double rounded(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return std::strtod(buf, nullptr);
}

json witness_json(const ParameterWitness& w) {
  json j;
  j["polynomial"] = w.polynomial.to_string('s');
  j["interval"] = {to_string(w.lo), to_string(w.hi)};
  j["exact"] = w.exact ? json(to_string(*w.exact)) : json(nullptr);
  j["approx"] = rounded(w.approx);
  j["text"] = w.to_string();
  return j;
}

json components_json(const std::vector<std::size_t>& ids) {
  json j = json::array();
  for (auto id : ids) j.push_back(component_name(id));
  return j;
}

json validation_json(const ValidationReport& v) {
  json j;
  j["ok"] = v.ok();
  j["checks"] = json::array();
  for (const auto& c : v.checks) {
    j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"code", c.code}, {"witness", c.witness}});
  }
  return j;
}

json genericity_json(const Analysis& a) {
  json j;
  j["passed"] = a.genericity->passed;
  j["diagnostics"] = json::array();
  for (const auto& d : a.genericity->diagnostics) {
    json dj;
    dj["message"] = d.message;
    dj["witness"] = d.witness ? witness_json(*d.witness) : json(nullptr);
    dj["components"] = components_json(d.components);
    j["diagnostics"].push_back(dj);
  }
  if (a.perturbation_hint) j["suggestion"] = *a.perturbation_hint;
  return j;
}

json graph_json(const TrajectoryGraph& g) {
  json j;
  j["field"] = g.radial ? "radial" : "constant";
  if (g.radial) j["chart"] = {to_string(g.chart.first), to_string(g.chart.second)};
  j["V"] = g.vertices.size();
  j["E"] = g.edges.size();
  json counts;
  for (const auto& p : {Pattern({2}), Pattern({1, 2, 1})}) counts[p.to_string()] = g.count_vertices(p);
  j["vertex_patterns"] = counts;
  j["events"] = json::array();
  for (const auto& e : g.events) {
    json ej;
    ej["parameter"] = witness_json(make_witness(e.parameter));
    ej["component"] = component_name(e.component);
    ej["point"] = {rounded(e.x), rounded(e.y)};
    ej["multiplicity"] = e.multiplicity;
    ej["crossings_before"] = e.crossings_before;
    ej["pattern"] = e.trajectory_pattern.to_string();
    j["events"].push_back(ej);
  }
  j["vertices"] = json::array();
  for (const auto& v : g.vertices) {
    j["vertices"].push_back(
        {{"id", v.id}, {"pattern", v.pattern.to_string()}, {"event", v.event}, {"degree", v.edges.size()}});
  }
  j["edges"] = json::array();
  for (const auto& e : g.edges) {
    json ej{{"id", e.id}, {"pattern", e.pattern.to_string()}};
    ej["start"] = e.start.vertex ? json(*e.start.vertex) : json(nullptr);
    ej["end"] = e.end.vertex ? json(*e.end.vertex) : json(nullptr);
    ej["samples"] = e.members.size();
    j["edges"].push_back(ej);
  }
  return j;
}

json optional_id(const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); }

json strata_list(const std::vector<Stratum>& list) {
  json arr = json::array();
  for (const auto& s : list) {
    json j{{"id", s.id}, {"dim", s.dimension}, {"pattern", s.pattern.to_string()},
           {"location", to_string(s.location)}, {"kind", s.kind}, {"faces", s.faces}};
    if (s.dimension == 1) {
      j["from"] = optional_id(s.from);
      j["to"] = optional_id(s.to);
    }
    arr.push_back(j);
  }
  return arr;
}

json strata_json(const StrataTable& t) {
  json j;
  json counts;
  for (Space sp : {Space::Tv, Space::X, Space::DX}) {
    json per;
    for (int d = 0; d <= t.top_dimension(sp); ++d) per.push_back(t.count(sp, d));
    counts[to_string(sp)] = per;
  }
  j["counts"] = counts;
  j["Tv"] = strata_list(t.tv);
  j["X"] = strata_list(t.x);
  return j;
}

json complexity_json(const ComplexityVector& cv, const MinimalStrata& m) {
  json j;
  j["tc"] = cv.tc;
  j["sigma_tc"] = cv.sigma_tc;
  json comps;
  for (const auto& [p, n] : cv.components) comps[p.to_string()] = n;
  j["components"] = comps;
  j["support_count"] = cv.support_count;
  j["minimal_strata"] = {{"count", m.ids.size()}, {"generator_bound", m.generator_bound}};
  return j;
}

json homology_json(const ChainComplex& c, const HomologyGroups& h) {
  json j;
  j["ranks"] = c.ranks();
  j["betti"] = h.betti;
  json tors = json::array();
  for (const auto& t : h.torsion) {
    json tj = json::array();
    for (const auto& d : t) tj.push_back(d.get_str());
    tors.push_back(tj);
  }
  j["torsion"] = tors;
  j["euler"] = h.euler;
  return j;
}

json bounds_json(const BoundsReport& b) {
  json j;
  j["simplicial_volume_DX"] = to_string(b.volume);
  j["genus_DX"] = b.genus;
  j["hdelta_ranks"] = {{"DX", b.hdelta.dx}, {"X", b.hdelta.x}};
  j["checks"] = json::array();
  for (const auto& c : b.checks) {
    j["checks"].push_back({{"name", c.name},
                           {"statement", c.statement},
                           {"lhs", to_string(c.lhs)},
                           {"rhs", to_string(c.rhs)},
                           {"verdict", c.passed ? "PASS" : "FAIL"},
                           {"vacuous", c.vacuous},
                           {"note", c.note}});
  }
  j["rho1_ratio"] = b.rho_ratio ? json(to_string(*b.rho_ratio)) : json(nullptr);
  j["notes"] = b.notes;
  return j;
}

}  // namespace

std::string report_json(const Analysis& a, int indent) {
  json j;
  j["tool"] = {{"name", "traverse"}, {"version", std::string(version())}};
  j["seed"] = a.options.seed;
  j["strict"] = a.options.strict;
  j["scene"] = a.scene ? json::parse(scene_to_json(*a.scene)) : json(nullptr);
  j["validation"] = a.validation ? validation_json(*a.validation) : json(nullptr);
  j["genericity"] = a.genericity ? genericity_json(a) : json(nullptr);
  j["trajectory_graph"] = a.graph ? graph_json(*a.graph) : json(nullptr);
  j["strata"] = a.strata ? strata_json(*a.strata) : json(nullptr);
  j["complexity"] = a.complexity && a.minimal ? complexity_json(*a.complexity, *a.minimal) : json(nullptr);
  json hom;
  if (a.tv_homology) hom["Tv"] = homology_json(*a.tv_complex, *a.tv_homology);
  if (a.dx_homology) hom["DX"] = homology_json(*a.dx_complex, *a.dx_homology);
  j["homology"] = a.tv_homology ? hom : json(nullptr);
  j["bounds"] = a.bounds ? bounds_json(*a.bounds) : json(nullptr);
  json inv = json::array();
  for (const auto& c : a.invariants) inv.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j["invariants"] = inv;
  j["verdict"] = a.exit_code == 0 ? "PASS" : (a.exit_code == 2 ? "DEGENERATE" : "FAIL");
  j["exit_code"] = a.exit_code;
  j["error"] = a.error ? json{{"code", a.error->code}, {"message", a.error->message}} : json(nullptr);
  return j.dump(indent) + "\n";
}

std::string oracle_json(const OracleReport& r, int indent) {
  auto seqs = [](const std::set<PatternSequence>& s) {
    json arr = json::array();
    for (const auto& seq : s) arr.push_back(to_string(seq));
    return arr;
  };
  json j;
  j["tool"] = {{"name", "traverse"}, {"version", std::string(version())}};
  j["pattern"] = r.pattern.to_string();
  j["samples"] = r.samples;
  j["magnitude"] = to_string(r.magnitude);
  j["seed"] = r.seed;
  j["observed"] = seqs(r.observed);
  j["resolutions"] = seqs(r.expected);
  j["containment"] = r.contained ? "PASS" : "FAIL";
  j["all_simple_sequences"] = r.all_simple_sequences;
  j["chamber_count"] = r.chamber_count;
  j["expected_chambers"] = r.expected_chambers;
  return j.dump(indent) + "\n";
}

std::string trajectory_graph_dot(const TrajectoryGraph& g) {
  std::ostringstream out;
  out << "graph Tv {\n  node [shape=circle, fontsize=10];\n";
  for (const auto& v : g.vertices) {
    out << "  v" << v.id << " [label=\"" << v.pattern.to_string() << "\"";
    if (v.pattern.is_singleton()) out << ", shape=box";
    out << "];\n";
  }
  for (const auto& e : g.edges) {
    if (!e.start.vertex && !e.end.vertex) {
      out << "  loop" << e.id << " [label=\"\", shape=point];\n";
      out << "  loop" << e.id << " -- loop" << e.id << " [label=\"e" << e.id << "\"];\n";
      continue;
    }
    const std::string a = e.start.vertex ? "v" + std::to_string(*e.start.vertex) : "v" + std::to_string(*e.end.vertex);
    const std::string b = e.end.vertex ? "v" + std::to_string(*e.end.vertex) : a;
    out << "  " << a << " -- " << b << " [label=\"e" << e.id << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace traverse

#include "traverse/analysis.hpp"
#include "traverse/error.hpp"
#include "traverse/figures.hpp"
#include "traverse/local_model.hpp"
#include "traverse/omega.hpp"
#include "traverse/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace traverse;

int report_error(std::string_view code, const std::string& message) {
  std::cerr << "error: " << code << ": " << message << "\n";
  return 1;
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << text;
  return static_cast<bool>(out);
}

struct AnalyzeArgs {
  std::string scene;
  std::string out, svg, dot;
  std::uint64_t seed = 0;
  bool strict = false;
  bool suggest = false;
};

int write_figures(const Analysis& a, const std::string& svg, const std::string& dot) {
  if ((svg.empty() && dot.empty()) || !a.graph || !a.scene) return 0;
  if (!dot.empty() && !write_file(dot, trajectory_graph_dot(*a.graph))) {
    return report_error("IO", "cannot write " + dot);
  }
  if (!svg.empty() && !write_file(svg, render_svg(*a.scene, *a.graph))) {
    return report_error("IO", "cannot write " + svg);
  }
  return 0;
}

int run_analyze(const AnalyzeArgs& args) {
  AnalysisOptions opts;
  opts.seed = args.seed;
  opts.strict = args.strict;
  opts.suggest_perturbation = args.suggest;
  const Analysis a = analyze_file(args.scene, opts);
  const std::string doc = report_json(a);
  if (args.out.empty()) {
    std::cout << doc;
  } else if (!write_file(args.out, doc)) {
    return report_error("IO", "cannot write " + args.out);
  }
  if (a.error) {
    std::cerr << "error: " << a.error->code << ": " << a.error->message << "\n";
    if (a.perturbation_hint) std::cerr << "hint: " << *a.perturbation_hint << "\n";
  }
  if (int rc = write_figures(a, args.svg, args.dot)) return rc;
  return a.exit_code;
}

int run_export(const std::string& scene, const std::string& svg, const std::string& dot) {
  if (svg.empty() && dot.empty()) return report_error("INVALID_ARGUMENT", "export needs --svg or --dot");
  const Analysis a = analyze_file(scene);
  if (!a.graph) {
    std::cerr << "error: " << a.error->code << ": " << a.error->message << "\n";
    return a.exit_code == 0 ? 1 : a.exit_code;
  }
  return write_figures(a, svg, dot);
}

int run_enumerate(int n, bool dot) {
  if (n < 0 || n > 6) return report_error("INVALID_ARGUMENT", "--n must lie in 0..6");
  if (dot) {
    std::cout << export_hasse_dot(build_poset(n));
    return 0;
  }
  for (const auto& p : enumerate_patterns(n)) {
    std::cout << p.to_string() << "\tnorm=" << p.norm() << "\treduced=" << p.reduced_norm();
    if (p.is_singleton() && p.norm() >= 4) std::cout << "\tflag=even-singleton-above-surface";
    std::cout << "\n";
  }
  return 0;
}

int run_oracle_cmd(const std::string& pattern, int samples, const std::string& magnitude, std::uint64_t seed) {
  std::optional<Pattern> w;
  Rational mag;
  try {
    w = Pattern::parse(pattern);
    mag = parse_rational(magnitude);
  } catch (const Error& e) {
    return report_error(to_string(e.code()), e.what());
  }
  const OracleReport r = run_oracle(*w, samples, mag, seed);
  std::cout << oracle_json(r);
  return r.contained ? 0 : report_error("CHECK_FAILED", "observed pattern sequences outside resolutions");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of traversing flows on planar domains"};
  app.set_version_flag("--version", std::string(traverse::version()));
  app.require_subcommand(1);

  AnalyzeArgs an;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze a scene and emit the JSON report");
  analyze_cmd->add_option("scene", an.scene, "Scene file")->required();
  analyze_cmd->add_option("--out", an.out, "Report path (default stdout)");
  analyze_cmd->add_option("--svg", an.svg, "Also write an SVG figure");
  analyze_cmd->add_option("--dot", an.dot, "Also write the DOT graph of T(v)");
  analyze_cmd->add_option("--seed", an.seed, "Seed for randomized hints");
  analyze_cmd->add_flag("--strict", an.strict, "Treat invariant cross-check failures as errors");
  analyze_cmd->add_flag("--suggest-perturbation", an.suggest, "Suggest a perturbation for degenerate scenes");

  int n = 1;
  bool poset_dot = false;
  auto* enum_cmd = app.add_subcommand("enumerate-omega", "List tangency patterns of reduced norm <= n");
  enum_cmd->add_option("--n", n, "Maximal reduced norm (0..6)")->required();
  enum_cmd->add_flag("--dot", poset_dot, "Emit the Hasse diagram as DOT");

  std::string ex_scene, ex_svg, ex_dot;
  auto* export_cmd = app.add_subcommand("export", "Write figures for a scene");
  export_cmd->add_option("scene", ex_scene, "Scene file")->required();
  export_cmd->add_option("--svg", ex_svg, "SVG output path");
  export_cmd->add_option("--dot", ex_dot, "DOT output path");

  std::string pattern, magnitude = "1/1000";
  int samples = 200;
  std::uint64_t oracle_seed = 0;
  auto* oracle_cmd = app.add_subcommand("oracle", "Sample perturbations of a local model");
  oracle_cmd->add_option("--pattern", pattern, "Pattern, e.g. 1221")->required();
  oracle_cmd->add_option("--samples", samples, "Number of samples")->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--magnitude", magnitude, "Perturbation magnitude (rational)");
  oracle_cmd->add_option("--seed", oracle_seed, "Sampling seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*analyze_cmd) return run_analyze(an);
    if (*enum_cmd) return run_enumerate(n, poset_dot);
    if (*export_cmd) return run_export(ex_scene, ex_svg, ex_dot);
    if (*oracle_cmd) return run_oracle_cmd(pattern, samples, magnitude, oracle_seed);
  } catch (const traverse::Error& e) {
    return report_error(traverse::to_string(e.code()), e.what());
  } catch (const std::exception& e) {
    return report_error("INTERNAL", e.what());
  }
  return 1;
}

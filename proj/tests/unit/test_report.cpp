#include <doctest.h>

#include "scenes.hpp"
#include "traverse/analysis.hpp"
#include "traverse/figures.hpp"
#include "traverse/parallel.hpp"
#include "traverse/report.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>

using namespace traverse;
using json = nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t count_matches(const std::string& text, const std::string& pattern) {
  const std::regex re(pattern);
  return static_cast<std::size_t>(std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator()));
}

// Set TRAVERSE_UPDATE_GOLDEN=1 to rewrite the golden files.
void check_golden(const std::string& name) {
  const std::string path = std::string(TRAVERSE_GOLDEN_DIR) + "/" + name + ".json";
  const std::string actual = report_json(analyze(testing::fixture(name)));
  if (std::getenv("TRAVERSE_UPDATE_GOLDEN")) {
    std::ofstream(path, std::ios::binary) << actual;
  }
  const std::string expected = read_file(path);
  REQUIRE_FALSE(expected.empty());
  CHECK(actual == expected);
}

}  // namespace

TEST_SUITE("report") {
  TEST_CASE("golden reports") {
    check_golden("disk");
    check_golden("annulus3");
  }

  TEST_CASE("report fields for the radial scene") {
    const auto doc = json::parse(report_json(analyze(testing::fixture("annulus3"))));
    CHECK(doc["verdict"] == "PASS");
    CHECK(doc["exit_code"] == 0);
    CHECK(doc["error"].is_null());
    CHECK(doc["complexity"]["tc"] == json::array({6, 9}));
    CHECK(doc["homology"]["DX"]["betti"] == json::array({1, 8, 1}));
    CHECK(doc["bounds"]["rho1_ratio"] == "1/2");
    CHECK(doc["bounds"]["simplicial_volume_DX"] == "12");
    CHECK(doc["strata"]["counts"]["DX"][0] == 18);
    CHECK(doc["tool"]["version"] == std::string(version()));
    for (const auto& c : doc["invariants"]) CHECK(c["passed"] == true);
  }

  TEST_CASE("reports are identical across thread counts") {
    for (const auto* name : {"annulus3", "fig1", "double_tangent"}) {
      CAPTURE(name);
      const Scene s = testing::fixture(name);
      set_thread_count(1);
      const std::string a = report_json(analyze(s));
      set_thread_count(6);
      const std::string b = report_json(analyze(s));
      set_thread_count(0);
      CHECK(a == b);
    }
  }

  TEST_CASE("error reports") {
    const auto parse = analyze_file(std::string(TRAVERSE_FIXTURE_DIR) + "/malformed.json");
    REQUIRE(parse.error.has_value());
    CHECK(parse.error->code == "PARSE");
    CHECK(parse.exit_code == 1);
    const auto doc = json::parse(report_json(parse));
    CHECK(doc["error"]["code"] == "PARSE");
    CHECK(doc["scene"].is_null());

    const auto io = analyze_file("/nonexistent.json");
    CHECK(io.error->code == "IO");

    AnalysisOptions opts;
    opts.suggest_perturbation = true;
    opts.seed = 3;
    const auto degenerate = analyze(testing::fixture("double_tangent"), opts);
    CHECK(degenerate.exit_code == 2);
    CHECK(degenerate.error->code == "DEGENERATE_SCENE");
    REQUIRE(degenerate.perturbation_hint.has_value());
    const auto ddoc = json::parse(report_json(degenerate));
    CHECK(ddoc["genericity"]["diagnostics"][0]["witness"]["exact"] == "1/2");
    CHECK(ddoc["genericity"]["suggestion"] == *degenerate.perturbation_hint);

    Scene invalid = testing::disk_scene(5, {{testing::q(0), testing::q(0), testing::q(1)},
                                            {testing::q(1), testing::q(0), testing::q(1)}});
    const auto v = analyze(invalid);
    CHECK(v.exit_code == 1);
    CHECK(v.error->code == "VALIDATION");
  }

  TEST_CASE("DOT export") {
    const auto a = analyze(testing::fixture("annulus3"));
    const std::string dot = trajectory_graph_dot(*a.graph);
    CHECK(count_matches(dot, R"re(\[label="\(121\)"\])re") == 6);
    CHECK(count_matches(dot, " -- ") == 9);
    const auto d = analyze(testing::fixture("disk"));
    CHECK(count_matches(trajectory_graph_dot(*d.graph), R"re(label="\(2\)", shape=box)re") == 2);
  }

  TEST_CASE("SVG export") {
    const auto d = analyze(testing::fixture("disk"));
    const std::string disk = render_svg(*d.scene, *d.graph);
    CHECK(count_matches(disk, "class=\"tangency\"") == 2);
    CHECK(disk.rfind("<svg", 0) == 0);
    const auto a = analyze(testing::fixture("annulus3"));
    const std::string ann = render_svg(*a.scene, *a.graph);
    CHECK(count_matches(ann, "class=\"tangency\"") == 6);
    CHECK(count_matches(ann, "stroke=\"#c00\"") == 6);
    CHECK(count_matches(ann, "class=\"slab\"") > 0);
  }

  TEST_CASE("oracle document") {
    const auto r = run_oracle(Pattern({1, 2, 1}), 50, Rational(1, 1000), 1);
    const auto doc = json::parse(oracle_json(r));
    CHECK(doc["pattern"] == "(121)");
    CHECK(doc["containment"] == "PASS");
    CHECK(doc["chamber_count"] == r.chamber_count);
  }
}

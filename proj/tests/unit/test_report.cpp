#include <doctest.h>

#include "thetamatch/report.hpp"
#include "thetamatch/verify.hpp"

using namespace thetamatch;

namespace {

Theta th(long v) { return Theta::rational(Rational(v)); }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("analysis of the nine-cycle") {
    AnalysisReport r = analyze(cycle_graph(9), th(1));
    CHECK(r.order == 9);
    CHECK(r.size == 9);
    CHECK(r.components == 1);
    CHECK(r.mult == 0);
    CHECK(r.super_positive);
    CHECK(r.elementary == true);
    CHECK(r.base == true);
    REQUIRE(r.barriers.has_value());
    CHECK(r.barriers->sets.size() == 3);
    REQUIRE(r.decomposition.has_value());
    CHECK(r.decomposition->removed_edges.empty());
    CHECK(r.decomposition->rejoin_matches);
  }

  TEST_CASE("analysis of the bridged graph") {
    AnalysisReport r = analyze(figure_graph(Figure::Fig1), th(1));
    CHECK(r.super_positive);
    CHECK(r.elementary == false);
    REQUIRE(r.decomposition.has_value());
    CHECK(r.decomposition->components_graph6.size() == 2);
    CHECK(r.decomposition->components_graph6[1] == "Bw");
  }

  TEST_CASE("an edge at zero") {
    AnalysisReport r = analyze(complete_graph(2), th(0));
    CHECK(r.super_positive);
    CHECK(r.polynomial == "x^2 - 1");
  }

  TEST_CASE("large graphs skip the barrier answers") {
    AnalysisReport r = analyze(cycle_graph(20), th(1));
    CHECK_FALSE(r.elementary.has_value());
    CHECK_FALSE(r.barriers.has_value());
    Json j = to_json(r);
    CHECK(j["elementary"].is_null());
  }

  TEST_CASE("JSON output is deterministic and ordered") {
    Graph g = figure_graph(Figure::Fig5);
    std::string a = to_json(analyze(g, th(1))).dump();
    std::string b = to_json(analyze(g, th(1))).dump();
    CHECK(a == b);
    Json j = Json::parse(a);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"graph", "theta", "mult", "polynomial", "partition", "classes",
                                           "super_positive", "elementary", "base", "barriers", "decomposition"});
    CHECK(j["decomposition"]["removed_edges"] == Json::parse("[[0,3]]"));
  }

  TEST_CASE("text output carries the same facts") {
    std::string text = to_text(analyze(cycle_graph(9), th(1)));
    CHECK(text.find("super positive: yes") != std::string::npos);
    CHECK(text.find("elementary: yes") != std::string::npos);
    CHECK(text.find("{0, 3, 6}") != std::string::npos);
  }

  TEST_CASE("edge checksum ignores order") {
    std::vector<Edge> a{Edge(0, 1), Edge(1, 2)};
    std::vector<Edge> b{Edge(2, 1), Edge(1, 0)};
    CHECK(edge_checksum(a) == edge_checksum(b));
    CHECK(edge_checksum(a) != edge_checksum({Edge(0, 1)}));
  }

  TEST_CASE("verify suites are listed and run") {
    CHECK(verify::suite_names().size() == 10);
    verify::Options opts;
    opts.cases = 5;
    opts.max_n = 7;
    verify::SuiteResult r = verify::run_suite("trees", opts);
    CHECK(r.passed());
    CHECK(r.checks.front().cases == 5);
    CHECK_THROWS(verify::run_suite("nope", opts));
  }

  TEST_CASE("random generators") {
    verify::Rng rng(1);
    for (int n = 1; n <= 12; ++n) {
      Graph t = verify::random_tree(rng, n);
      CHECK(t.order() == n);
      CHECK(t.size() == n - 1);
      CHECK(is_connected(t));
    }
    Graph j = verify::random_cycle_join(rng, 12);
    CHECK(j.order() <= 12);
    CHECK(is_super_positive(j, th(1)));
  }
}

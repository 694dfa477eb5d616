#include <doctest.h>

#include "thetamatch/classify.hpp"
#include "thetamatch/verify.hpp"

using namespace thetamatch;

namespace {

Theta th(long v) { return Theta::rational(Rational(v)); }

}  // namespace

TEST_SUITE("classify") {
  TEST_CASE("path on three vertices at zero") {
    DpanPartition p = dpan_partition(path_graph(3), th(0));
    CHECK(p.mult == 1);
    CHECK(p.essential == VertexSet{0, 2});
    CHECK(p.special == VertexSet{1});
    CHECK(p.positive.empty());
    CHECK(p.neutral.empty());
    CHECK(classify_vertex(path_graph(3), th(0), 1) == VertexClass{VertexKind::Positive, true});
  }

  TEST_CASE("path on three vertices at one has a neutral centre") {
    DpanPartition p = dpan_partition(path_graph(3), th(1));
    CHECK(p.mult == 0);
    CHECK(p.positive == VertexSet{0, 2});
    CHECK(p.neutral == VertexSet{1});
    CHECK(classify_vertex(path_graph(3), th(1), 1).kind == VertexKind::Neutral);
  }

  TEST_CASE("an edge at zero is all positive") {
    auto classes = classify_all(complete_graph(2), th(0));
    REQUIRE(classes.size() == 2);
    for (const auto& c : classes) CHECK(c == VertexClass{VertexKind::Positive, false});
  }

  TEST_CASE("to_string of kinds") {
    CHECK(to_string(VertexKind::Essential) == "essential");
    CHECK(to_string(VertexKind::Neutral) == "neutral");
    CHECK(to_string(VertexKind::Positive) == "positive");
  }

  TEST_CASE("critical graphs") {
    CHECK(is_theta_critical(Graph(1), th(0)));
    CHECK(is_theta_critical(complete_graph(2), th(1)));
    CHECK(is_theta_critical(cycle_graph(3), Theta::parse_polynomial("x^2 - 3")));
    CHECK_FALSE(is_theta_critical(cycle_graph(3), th(-1)));  // mult 0
    CHECK_FALSE(is_theta_critical(named_graph("K2+K2"), th(1)));  // mult 2
    CHECK_FALSE(is_theta_critical(path_graph(3), th(0)));  // centre is not essential
    CHECK(critical_component_count(named_graph("K2+K1+K2"), th(1)) == 2);
    CHECK(critical_component_count(named_graph("K1+K1+P3"), th(0)) == 2);
  }

  TEST_CASE("Gallai-Edmonds structure of a star") {
    // K_{1,3}: centre special, leaves essential, three critical singletons.
    Graph star(4, {Edge(0, 1), Edge(0, 2), Edge(0, 3)});
    GallaiEdmondsReport r = gallai_edmonds(star, th(0));
    CHECK(r.partition.mult == 2);
    CHECK(r.partition.special == VertexSet{0});
    CHECK(r.partition.essential == VertexSet{1, 2, 3});
    CHECK(r.critical_count == 3);
    REQUIRE(r.components_after_special.size() == 3);
    for (const auto& c : r.components_after_special) CHECK(c.critical);
  }

  TEST_CASE("Gallai-Edmonds holds on random graphs for every theta in the pool") {
    verify::Rng rng(11);
    for (int i = 0; i < 60; ++i) {
      Graph g = verify::random_graph(rng, 2 + i % 9, 0.35);
      Theta t = verify::random_theta(rng);
      GallaiEdmondsReport r = gallai_edmonds(g, t);
      CHECK(r.critical_count == static_cast<int>(r.partition.special.size()) + r.partition.mult);
    }
  }

  TEST_CASE("no neutral vertices at zero") {
    verify::Rng rng(5);
    for (int i = 0; i < 40; ++i) {
      Graph g = verify::random_graph(rng, 1 + i % 10, 0.4);
      CHECK(dpan_partition(g, th(0)).neutral.empty());
    }
  }

  TEST_CASE("mask forms match graph forms") {
    Graph g = figure_graph(Figure::Fig1);
    ThetaContext ctx(g, th(1));
    CHECK(dpan_partition(ctx, g.all()) == dpan_partition(g, th(1)));
    CHECK(is_super_positive(ctx, g.all()));
    VertexMask sub = g.all().without(0);
    CHECK(dpan_partition(ctx, sub).mult == 1);
  }
}

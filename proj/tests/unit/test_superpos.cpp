#include <doctest.h>

#include "thetamatch/errors.hpp"
#include "thetamatch/matching.hpp"
#include "thetamatch/superpos.hpp"
#include "thetamatch/verify.hpp"

using namespace thetamatch;

namespace {

Theta th(long v) { return Theta::rational(Rational(v)); }

bool is_cycle(const Graph& g) {
  if (!is_connected(g) || g.order() < 3) return false;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

}  // namespace

TEST_SUITE("superpos") {
  TEST_CASE("super positivity") {
    CHECK(is_super_positive(complete_graph(2), th(0)));
    CHECK_FALSE(is_super_positive(path_graph(3), th(0)));
    CHECK(is_super_positive(path_graph(4), th(0)));
    CHECK(is_super_positive(cycle_graph(3), th(1)));
    CHECK_FALSE(is_super_positive(cycle_graph(4), th(1)));
    for (auto f : {Figure::Fig1, Figure::Fig3, Figure::Fig5, Figure::Fig6})
      CHECK(is_super_positive(figure_graph(f), th(1)));
  }

  TEST_CASE("extreme edges") {
    CHECK(theta_extreme_edges(figure_graph(Figure::Fig1), th(1)) == std::vector<Edge>{Edge(5, 6)});
    CHECK(theta_extreme_edges(figure_graph(Figure::Fig5), th(1)) == std::vector<Edge>{Edge(0, 3)});
    CHECK(theta_extreme_edges(cycle_graph(9), th(1)).empty());
    CHECK_THROWS_AS(theta_extreme_edges(path_graph(3), th(1)), PreconditionError);
  }

  TEST_CASE("base graphs") {
    CHECK(is_base(cycle_graph(9), th(1)));
    CHECK(is_base(cycle_graph(3), th(1)));
    CHECK_FALSE(is_base(figure_graph(Figure::Fig3), th(1)));
    CHECK_FALSE(is_base(figure_graph(Figure::Fig5), th(1)));
    CHECK_FALSE(is_base(path_graph(3), th(1)));
  }

  TEST_CASE("decomposition of the chorded nine-cycle") {
    BaseDecomposition d = decompose_to_base(figure_graph(Figure::Fig5), th(1));
    CHECK(d.removed_edges == std::vector<Edge>{Edge(0, 3)});
    REQUIRE(d.base_components.size() == 1);
    CHECK(d.base_components[0].same_structure(cycle_graph(9)));
  }

  TEST_CASE("decomposition of the bridged graph") {
    BaseDecomposition d = decompose_to_base(figure_graph(Figure::Fig1), th(1));
    CHECK(d.removed_edges == std::vector<Edge>{Edge(5, 6)});
    REQUIRE(d.base_components.size() == 2);
    CHECK(d.base_components[0].order() == 6);
    CHECK(d.base_components[1].order() == 3);
    for (const auto& c : d.base_components) CHECK(is_cycle(c));
  }

  TEST_CASE("decomposition of a base graph removes nothing") {
    BaseDecomposition d = decompose_to_base(cycle_graph(3), th(1));
    CHECK(d.removed_edges.empty());
    REQUIRE(d.base_components.size() == 1);
    CHECK(d.base_components[0] == cycle_graph(3));
  }

  TEST_CASE("decomposition rejects a bad order") {
    std::vector<Edge> wrong{Edge(0, 1)};
    CHECK_THROWS_AS(decompose_to_base(figure_graph(Figure::Fig5), th(1), wrong), PreconditionError);
  }

  TEST_CASE("joining two cycles") {
    std::vector<CrossEdge> cross{{0, 0}, {3, 1}};
    Graph g = join_super_positive(cycle_graph(6), {0, 3}, cycle_graph(3), {0}, th(1),
                                  std::vector<CrossEdge>{{0, 0}});
    CHECK(g.order() == 9);
    CHECK(g.has_edge(0, 6));
    CHECK(is_super_positive(g, th(1)));
    CHECK_THROWS_AS(join_super_positive(cycle_graph(6), {0, 3}, cycle_graph(3), {0}, th(1), cross), PreconditionError);
    CHECK_THROWS_AS(join_super_positive(cycle_graph(6), {0, 1}, cycle_graph(3), {0}, th(1),
                                        std::vector<CrossEdge>{{0, 0}}),
                    PreconditionError);
    CHECK_THROWS_AS(join_super_positive(cycle_graph(4), {0}, cycle_graph(3), {0}, th(1),
                                        std::vector<CrossEdge>{{0, 0}}),
                    PreconditionError);
    CHECK_THROWS_AS(
        join_super_positive(cycle_graph(6), {0, 3}, cycle_graph(3), {0}, th(1), std::vector<CrossEdge>{}),
        PreconditionError);
  }

  TEST_CASE("adding an extreme edge") {
    Graph g = add_extreme_edge(cycle_graph(9), th(1), 0, 3);
    CHECK(g == figure_graph(Figure::Fig5));
    CHECK_THROWS_AS(add_extreme_edge(cycle_graph(9), th(1), 0, 1), PreconditionError);
    CHECK_THROWS_AS(add_extreme_edge(cycle_graph(9), th(1), 0, 2), PreconditionError);
  }

  TEST_CASE("random joins decompose back into their parts") {
    verify::Rng rng(9);
    for (int i = 0; i < 10; ++i) {
      Graph g = verify::random_cycle_join(rng, 15);
      BaseDecomposition d = decompose_to_base(g, th(1));
      int total = 0;
      for (const auto& c : d.base_components) total += c.order();
      CHECK(total == g.order());
      CHECK_FALSE(d.removed_edges.empty());
    }
  }

  TEST_CASE("super positive at every root") {
    CHECK(super_positive_for_all_roots(cycle_graph(4), matching_polynomial(path_graph(3))));
    CHECK(super_positive_for_all_roots(complete_graph(4), matching_polynomial(complete_graph(3))));
    CHECK_FALSE(super_positive_for_all_roots(path_graph(3), parse_polynomial("x")));
    CHECK(super_positive_for_all_roots(cycle_graph(5), parse_polynomial("7")));
    CHECK_THROWS_AS(super_positive_for_all_roots(cycle_graph(5), IntPolynomial{}), InputError);
  }

  TEST_CASE("trees") {
    CHECK(tree_super_positive_verdict(path_graph(4), th(0)));
    CHECK_FALSE(tree_super_positive_verdict(path_graph(3), th(0)));
    CHECK_FALSE(tree_super_positive_verdict(path_graph(4), th(1)));
    CHECK_FALSE(tree_super_positive_verdict(Graph(1), th(1)));
    CHECK_THROWS_AS(tree_super_positive_verdict(cycle_graph(4), th(0)), PreconditionError);
    CHECK_THROWS_AS(tree_super_positive_verdict(named_graph("P2+P2"), th(0)), PreconditionError);
  }
}

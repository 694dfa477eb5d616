#include <doctest.h>

#include "thetamatch/errors.hpp"
#include "thetamatch/matching.hpp"

using namespace thetamatch;

namespace {

MatchingProfile counts(std::initializer_list<long> cs) {
  MatchingProfile out;
  for (long c : cs) out.emplace_back(c);
  return out;
}

Theta th(long v) { return Theta::rational(Rational(v)); }

}  // namespace

TEST_SUITE("matching-poly") {
  TEST_CASE("small matching counts") {
    CHECK(matching_counts_bruteforce(cycle_graph(6)) == counts({1, 6, 9, 2}));
    CHECK(matching_counts_bruteforce(path_graph(4)) == counts({1, 3, 1}));
    CHECK(matching_counts_bruteforce(complete_graph(4)) == counts({1, 6, 3}));
    CHECK(matching_counts_bruteforce(Graph(3)) == counts({1, 0}));
  }

  TEST_CASE("known polynomials") {
    CHECK(to_string(matching_polynomial(cycle_graph(6))) == "x^6 - 6x^4 + 9x^2 - 2");
    CHECK(to_string(matching_polynomial(path_graph(4))) == "x^4 - 3x^2 + 1");
    CHECK(to_string(matching_polynomial(complete_graph(3))) == "x^3 - 3x");
    CHECK(to_string(matching_polynomial(Graph(0))) == "1");
    CHECK(to_string(matching_polynomial(Graph(2))) == "x^2");
  }

  TEST_CASE("recurrence agrees with exhaustive counting on fixed graphs") {
    for (auto f : {Figure::Fig1, Figure::Fig3, Figure::Fig5, Figure::Fig6}) {
      Graph g = figure_graph(f);
      CHECK(matching_polynomial(g) == polynomial_from_counts(matching_counts_bruteforce(g), g.order()));
    }
    Graph k7 = complete_graph(7);
    CHECK(matching_polynomial(k7) == polynomial_from_counts(matching_counts_bruteforce(k7, 21), 7));
  }

  TEST_CASE("exhaustive counting refuses large inputs") {
    CHECK_THROWS_AS(matching_counts_bruteforce(complete_graph(8)), BoundError);
  }

  TEST_CASE("disjoint unions multiply") {
    CHECK(matching_polynomial(named_graph("C6+C3")) ==
          matching_polynomial(cycle_graph(6)) * matching_polynomial(cycle_graph(3)));
  }

  TEST_CASE("multiplicity") {
    CHECK(mult(path_graph(3), th(0)) == 1);
    CHECK(mult(complete_graph(2), th(0)) == 0);
    CHECK(mult(Graph(4), th(0)) == 4);
    CHECK(mult(complete_graph(2), th(1)) == 1);
    CHECK(mult(cycle_graph(3), th(-1)) == 0);
    CHECK(mult(cycle_graph(3), Theta::parse_polynomial("x^2 - 3")) == 1);
    CHECK(mult(complete_graph(4), Theta::parse_polynomial("x^2 - 3")) == 0);
    CHECK(mult(path_graph(3), Theta::parse_polynomial("x^2 - 2")) == 1);
    CHECK(mult(named_graph("P3+P3"), Theta::parse_polynomial("x^2 - 2")) == 2);
  }

  TEST_CASE("context memo is consistent with direct computation") {
    Graph g = figure_graph(Figure::Fig1);
    ThetaContext ctx(g, th(1));
    CHECK(ctx.mult() == mult(g, th(1)));
    for (Vertex v = 0; v < g.order(); ++v) CHECK(ctx.mult(g.all().without(v)) == mult(delete_vertex(g, v), th(1)));
    CHECK(ctx.poly(g.all()) == matching_polynomial(g));
  }

  TEST_CASE("Heilmann-Lieb identity on fixed graphs") {
    for (auto f : {Figure::Fig1, Figure::Fig3}) {
      Graph g = figure_graph(f);
      for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v) CHECK(heilmann_lieb_check(g, u, v));
    }
    CHECK_THROWS_AS(heilmann_lieb_check(cycle_graph(4), 1, 1), InputError);
  }
}

#include <doctest.h>

#include "thetamatch/barrier.hpp"
#include "thetamatch/errors.hpp"
#include "thetamatch/verify.hpp"

using namespace thetamatch;

namespace {

Theta th(long v) { return Theta::rational(Rational(v)); }

std::vector<VertexSet> sets(std::initializer_list<VertexSet> s) {
  std::vector<VertexSet> out(s);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE("barrier-sets") {
  TEST_CASE("C9 at one: the three residue classes") {
    BarrierFamily fam = enumerate_barrier_sets(cycle_graph(9), th(1));
    CHECK(fam.includes_empty);
    CHECK(fam.sets == sets({{0, 3, 6}, {1, 4, 7}, {2, 5, 8}}));
    CHECK(fam.is_partition);
  }

  TEST_CASE("C9 plus one chord") {
    BarrierFamily fam = enumerate_barrier_sets(figure_graph(Figure::Fig5), th(1));
    CHECK(fam.includes_empty);
    CHECK(fam.sets == sets({{1}, {2}, {4, 7}, {5, 8}, {0, 3, 6}}));
    CHECK(fam.is_partition);
  }

  TEST_CASE("six-vertex elementary graph") {
    BarrierFamily fam = enumerate_barrier_sets(figure_graph(Figure::Fig3), th(1));
    CHECK(fam.sets == sets({{0}, {1}, {2, 3}, {4}, {5}}));
    CHECK(fam.is_partition);
  }

  TEST_CASE("pruned and exhaustive enumeration agree on fixed graphs") {
    for (auto f : {Figure::Fig1, Figure::Fig3, Figure::Fig5}) {
      Graph g = figure_graph(f);
      for (long t : {0L, 1L, -1L, 2L}) {
        BarrierFamily a = enumerate_barrier_sets(g, th(t));
        BarrierFamily b = enumerate_barrier_sets_bruteforce(g, th(t));
        CHECK(a.sets == b.sets);
        CHECK(a.includes_empty == b.includes_empty);
      }
    }
  }

  TEST_CASE("pruned and exhaustive enumeration agree on random graphs") {
    verify::Rng rng(3);
    for (int i = 0; i < 40; ++i) {
      Graph g = verify::random_graph(rng, 1 + i % 9, 0.4);
      Theta t = verify::random_theta(rng);
      BarrierFamily a = enumerate_barrier_sets(g, t);
      BarrierFamily b = enumerate_barrier_sets_bruteforce(g, t);
      CHECK(a.sets == b.sets);
      CHECK(a.includes_empty == b.includes_empty);
    }
  }

  TEST_CASE("bounds") {
    CHECK_THROWS_AS(enumerate_barrier_sets(cycle_graph(18), th(1)), BoundError);
    CHECK_NOTHROW(enumerate_barrier_sets(cycle_graph(18), th(1), 18));
    CHECK_THROWS_AS(enumerate_barrier_sets_bruteforce(cycle_graph(13), th(1)), BoundError);
  }

  TEST_CASE("extreme and barrier predicates") {
    Graph c6 = cycle_graph(6);
    CHECK(is_extreme_set(c6, th(1), {0, 3}));
    CHECK(is_barrier_set(c6, th(1), {0, 3}));
    CHECK_FALSE(is_extreme_set(c6, th(1), {0, 1}));
    CHECK(is_extreme_set(c6, th(1), {}));
    // P3 at zero: the centre is the Tutte set.
    CHECK(is_barrier_set(path_graph(3), th(0), {1}));
    CHECK_FALSE(is_barrier_set(path_graph(3), th(0), {0}));
  }

  TEST_CASE("elementary routes") {
    for (int n = 3; n <= 12; ++n) {
      ElementaryRoutes r = elementary_routes(cycle_graph(n), th(1));
      CHECK(r.agree());
      CHECK(r.by_definition == (n % 3 == 0));
    }
    CHECK_FALSE(is_elementary(figure_graph(Figure::Fig1), th(1)));
    CHECK(is_elementary(figure_graph(Figure::Fig3), th(1)));
    CHECK(is_elementary(complete_graph(2), th(0)));
    CHECK_FALSE(is_elementary(Graph(1), th(1)));
    CHECK_FALSE(is_elementary(path_graph(4), th(0)));
  }

  TEST_CASE("component witness") {
    Graph c9 = cycle_graph(9);
    BarrierWitness w = barrier_partition_witness(c9, th(1), {0, 3, 6});
    CHECK(w.member);
    CHECK(w.components == 3);
    CHECK(w.all_critical);
    CHECK(w.subsets_checked == 7);
    CHECK_FALSE(barrier_partition_witness(c9, th(1), {0, 1}).member);
    CHECK_THROWS_AS(barrier_partition_witness(figure_graph(Figure::Fig1), th(1), {0}), PreconditionError);
  }
}

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "thetamatch/barrier.hpp"
#include "thetamatch/matching.hpp"
#include "thetamatch/superpos.hpp"
#include "thetamatch/verify.hpp"

using namespace thetamatch;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

Theta th(long v) { return Theta::rational(Rational(v)); }

std::vector<VertexSet> sorted(std::vector<VertexSet> s) {
  std::sort(s.begin(), s.end());
  return s;
}

Outcome path_table() {
  Outcome o;
  static constexpr int kTable[6] = {1, 1, 0, -1, -1, 0};
  for (int n = 1; n <= 60; ++n) {
    o.expect(evaluate(matching_polynomial(path_graph(n)), Rational(1)) == kTable[n % 6],
             "mu(P" + std::to_string(n) + ", 1)");
  }
  return o;
}

Outcome cycle_table() {
  Outcome o;
  static constexpr int kTable[6] = {2, 1, -1, -2, -1, 1};
  for (int n = 3; n <= 60; ++n) {
    o.expect(evaluate(matching_polynomial(cycle_graph(n)), Rational(1)) == kTable[n % 6],
             "mu(C" + std::to_string(n) + ", 1)");
  }
  return o;
}

Outcome cycle_elementary() {
  Outcome o;
  for (int n = 3; n <= 24; ++n) {
    ElementaryRoutes r = elementary_routes(cycle_graph(n), th(1), n);
    const bool want = n % 3 == 0;
    o.expect(r.by_definition == want && r.by_neighbourhood_classes == want && r.by_barrier_partition == want,
             "C" + std::to_string(n) + " routes " + std::to_string(r.by_definition) +
                 std::to_string(r.by_neighbourhood_classes) + std::to_string(r.by_barrier_partition));
  }
  return o;
}

Outcome cycle_barriers() {
  Outcome o;
  for (int k = 1; k <= 4; ++k) {
    const int n = 3 * k;
    BarrierFamily fam = enumerate_barrier_sets(cycle_graph(n), th(1), n);
    std::vector<VertexSet> want;
    for (int r = 0; r < 3; ++r) {
      std::vector<Vertex> cls;
      for (Vertex v = r; v < n; v += 3) cls.push_back(v);
      want.emplace_back(cls);
    }
    o.expect(fam.sets == sorted(want), "C" + std::to_string(n) + " barrier sets");
  }
  return o;
}

Outcome figures() {
  Outcome o;
  const Theta one = th(1);

  Graph f1 = figure_graph(Figure::Fig1);
  o.expect(is_super_positive(f1, one), "figure 1 super positive");
  o.expect(!is_elementary(f1, one), "figure 1 not elementary");

  Graph f3 = figure_graph(Figure::Fig3);
  o.expect(is_elementary(f3, one), "figure 3 elementary");
  o.expect(enumerate_barrier_sets(f3, one).sets == sorted({{0}, {1}, {2, 3}, {4}, {5}}), "figure 3 barrier sets");
  o.expect(!is_base(f3, one), "figure 3 not base");

  // 1-based labels 1..9 are vertices 0..8.
  Graph f5 = figure_graph(Figure::Fig5);
  o.expect(enumerate_barrier_sets(f5, one).sets == sorted({{0, 3, 6}, {4, 7}, {5, 8}, {1}, {2}}),
           "figure 5 barrier sets");
  BaseDecomposition d = decompose_to_base(f5, one);
  o.expect(d.removed_edges == std::vector<Edge>{Edge(0, 3)}, "figure 5 removed edge");
  o.expect(d.base_components.size() == 1 && d.base_components[0].same_structure(cycle_graph(9)),
           "figure 5 decomposes to C9");

  o.expect(is_super_positive(figure_graph(Figure::Fig6), one), "figure 6 super positive");
  return o;
}

Outcome oracles() {
  Outcome o;
  verify::Rng rng(kSeed);
  for (int i = 0; i < 200; ++i) {
    const int n = std::uniform_int_distribution<int>(1, 10)(rng);
    const double p = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
    Graph g = verify::random_graph(rng, n, p);
    o.expect(matching_polynomial(g) == polynomial_from_counts(matching_counts_bruteforce(g, g.size()), n),
             "coefficients, graph6 " + serialize_graph(g, GraphFormat::Graph6));
  }
  const long thetas[3] = {0, 1, -1};
  for (int i = 0; i < 100; ++i) {
    const int n = std::uniform_int_distribution<int>(1, 8)(rng);
    const double p = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
    Graph g = verify::random_graph(rng, n, p);
    Theta t = th(thetas[i % 3]);
    BarrierFamily a = enumerate_barrier_sets(g, t);
    BarrierFamily b = enumerate_barrier_sets_bruteforce(g, t);
    o.expect(a.sets == b.sets && a.includes_empty == b.includes_empty,
             "barrier sets, graph6 " + serialize_graph(g, GraphFormat::Graph6) + " theta " + t.to_string());
  }
  return o;
}

Outcome invariants() {
  Outcome o;
  verify::Options opts{12, kSeed, 500};
  const std::vector<std::function<verify::CheckResult(const verify::Options&)>> checks = {
      verify::check_vertex_interlacing,
      verify::check_path_interlacing,
      verify::check_edge_rule,
      verify::check_derivative_rule,
      verify::check_union_rule,
      verify::check_heilmann_lieb,
      verify::check_special_deletion_stability,
      verify::check_gallai_lemma,
      verify::check_gallai_edmonds_counts,
      verify::check_neutral_free_after_deletion,
      verify::check_tree_verdict,
  };
  for (const auto& check : checks) {
    verify::CheckResult r = check(opts);
    o.expect(r.cases == 500, r.name + " ran " + std::to_string(r.cases) + " cases");
    o.expect(r.passed(), r.passed() ? "" : r.failures.front());
  }
  return o;
}

Outcome decomposition() {
  Outcome o;
  verify::CheckResult r = verify::check_decomposition_uniqueness(verify::Options{18, kSeed, 100}, 50);
  o.expect(r.cases == 100, "ran " + std::to_string(r.cases) + " graphs");
  o.expect(r.passed(), r.passed() ? "" : r.failures.front());
  return o;
}

Outcome vertex_transitive() {
  Outcome o;
  for (int n : {4, 5, 9, 12}) {
    Graph c = cycle_graph(n);
    o.expect(super_positive_for_all_roots(c, matching_polynomial(delete_vertex(c, 0))), "C" + std::to_string(n));
  }
  return o;
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  Outcome (*run)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "path values at 1, n <= 60", 5, path_table},
      {2, "cycle values at 1, n <= 60", 5, cycle_table},
      {3, "C_n elementary iff 3 | n, n <= 24, three routes agree", 60, cycle_elementary},
      {4, "C_3k barrier sets are the residue classes, k <= 4", 60, cycle_barriers},
      {5, "figure graphs", 30, figures},
      {6, "recurrence and pruned enumeration match exhaustive oracles", 300, oracles},
      {7, "invariant checks, 500 cases each, n <= 12", 600, invariants},
      {8, "decomposition independent of deletion order, 100 joins x 50 orders", 300, decomposition},
      {9, "cycles super positive at every root of mu(C_n - v)", 10, vertex_transitive},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs > c.limit_seconds) {
      o.ok = false;
      o.detail = "over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit";
    }
    std::printf("%s criterion %d: %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.title, secs,
                o.ok ? "" : " - ", o.detail.c_str());
    if (!o.ok) ++failed;
  }
  std::printf("%d of 9 criteria passed\n", 9 - failed);
  return failed == 0 ? 0 : 1;
}

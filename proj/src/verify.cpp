#include "thetamatch/verify.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "thetamatch/barrier.hpp"
#include "thetamatch/classify.hpp"
#include "thetamatch/errors.hpp"
#include "thetamatch/matching.hpp"
#include "thetamatch/superpos.hpp"

namespace thetamatch::verify {

namespace {

struct CheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Case {
 public:
  explicit Case(Rng& rng) : rng(rng) {}

  void on(const Graph& g) { graph = serialize_graph(g, GraphFormat::Graph6); }
  void on(const Theta& t) { theta = t.to_string(); }
  void require(bool ok, const std::string& what) {
    ++checks;
    if (!ok) throw CheckFailed(what);
  }

  Rng& rng;
  long checks = 0;
  std::string graph = "-";
  std::string theta = "-";
};

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

CheckResult run_check(std::string name, const Options& opts, int cases,
                      const std::function<void(Case&, int)>& body) {
  CheckResult out;
  out.name = std::move(name);
  Rng rng(opts.seed ^ fnv1a(out.name));
  for (int i = 0; i < cases; ++i) {
    Case c(rng);
    try {
      body(c, i);
    } catch (const std::exception& e) {
      out.failures.push_back(out.name + ": graph6 " + c.graph + " theta " + c.theta + ": " + e.what());
    }
    out.checks += c.checks;
    ++out.cases;
  }
  return out;
}

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

double random_density(Rng& rng) {
  static constexpr double kDensities[] = {0.2, 0.3, 0.4, 0.5, 0.6, 0.8};
  return kDensities[uniform(rng, 0, 5)];
}

Graph random_small_graph(Rng& rng, int max_n) {
  return random_graph(rng, uniform(rng, 1, std::max(1, max_n)), random_density(rng));
}

Theta theta_of(long v) { return Theta::rational(Rational(v)); }

std::string set_text(const VertexSet& s) {
  std::string out = "{";
  for (Vertex v : s) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

/// A theta-super positive sample, or nullopt when this attempt found none.
std::optional<std::pair<Graph, Theta>> super_positive_sample(Rng& rng, int max_n, int index) {
  switch (index % 3) {
    case 0: {
      // At theta = 0, super positive means a perfect matching exists.
      for (int attempt = 0; attempt < 50; ++attempt) {
        int n = 2 * uniform(rng, 1, std::max(1, max_n / 2));
        Graph g = random_graph(rng, n, random_density(rng));
        if (is_super_positive(g, theta_of(0))) return std::pair{g, theta_of(0)};
      }
      return std::nullopt;
    }
    case 1:
      if (max_n < 6) return std::pair{cycle_graph(3), theta_of(1)};
      return std::pair{random_cycle_join(rng, max_n), theta_of(1)};
    default: {
      Graph g = random_small_graph(rng, max_n);
      Theta t = random_theta(rng);
      if (is_super_positive(g, t)) return std::pair{g, t};
      return std::nullopt;
    }
  }
}

/// Edge list of a graph whose labels refer to a parent graph.
std::vector<Edge> lifted_edges(const Graph& component) {
  std::vector<Edge> out;
  for (const Edge& e : component.edges()) out.push_back(Edge(component.label(e.u), component.label(e.v)));
  return out;
}

}  // namespace

bool SuiteResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

Graph random_graph(Rng& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph random_tree(Rng& rng, int n) {
  if (n < 1) throw InputError("random_tree needs at least one vertex");
  if (n == 1) return Graph(1);
  if (n == 2) return Graph(2, {Edge(0, 1)});
  std::vector<int> code(n - 2);
  for (int& c : code) c = uniform(rng, 0, n - 1);
  std::vector<int> degree(n, 1);
  for (int c : code) ++degree[c];
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.insert(v);
  std::vector<Edge> edges;
  for (int c : code) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(leaf, c);
    if (--degree[c] == 1) leaves.insert(c);
  }
  int a = *leaves.begin();
  int b = *std::next(leaves.begin());
  edges.emplace_back(a, b);
  return Graph(n, edges);
}

Theta random_theta(Rng& rng) {
  switch (uniform(rng, 0, 6)) {
    case 0: return theta_of(0);
    case 1: return theta_of(1);
    case 2: return theta_of(-1);
    case 3: return theta_of(2);
    case 4: return Theta::algebraic(IntPolynomial{-2, 0, 1});
    case 5: return Theta::algebraic(IntPolynomial{-3, 0, 1});
    default: return Theta::algebraic(IntPolynomial{-1, -1, 1});
  }
}

Graph random_cycle_join(Rng& rng, int max_n) {
  if (max_n < 6) throw InputError("random_cycle_join needs room for at least six vertices");
  const Theta one = theta_of(1);
  std::vector<int> sizes;
  do {
    sizes.assign(uniform(rng, 2, 3), 0);
    for (int& s : sizes) s = 3 * uniform(rng, 1, 3);
  } while (std::accumulate(sizes.begin(), sizes.end(), 0) > max_n);

  auto pick = [&](const BarrierFamily& fam) {
    return fam.sets[uniform(rng, 0, static_cast<int>(fam.sets.size()) - 1)];
  };

  Graph g = cycle_graph(sizes[0]);
  for (std::size_t i = 1; i < sizes.size(); ++i) {
    Graph c = cycle_graph(sizes[i]);
    VertexSet s1 = pick(enumerate_barrier_sets(g, one, g.order()));
    VertexSet s2 = pick(enumerate_barrier_sets(c, one, c.order()));
    std::vector<CrossEdge> all;
    for (Vertex a : s1)
      for (Vertex b : s2) all.emplace_back(a, b);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(uniform(rng, 1, std::min<int>(3, static_cast<int>(all.size()))));
    g = join_super_positive(g, s1, c, s2, one, all);
  }
  return g;
}

// recurrences

CheckResult check_coefficients_vs_bruteforce(const Options& opts) {
  return run_check("coefficients-vs-bruteforce", opts, opts.cases, [&](Case& c, int) {
    Graph g = random_small_graph(c.rng, opts.max_n);
    c.on(g);
    MatchingProfile counts = matching_counts_bruteforce(g, g.size());
    c.require(polynomial_from_counts(counts, g.order()) == matching_polynomial(g),
              "recurrence disagrees with exhaustive matching count");
  });
}

CheckResult check_edge_rule(const Options& opts) {
  return run_check("edge-rule", opts, opts.cases, [&](Case& c, int) {
    Graph g = random_small_graph(c.rng, opts.max_n);
    c.on(g);
    IntPolynomial mu = matching_polynomial(g);
    for (const Edge& e : g.edges()) {
      IntPolynomial rhs =
          matching_polynomial(delete_edge(g, e)) - matching_polynomial(delete_vertices(g, {e.u, e.v}));
      c.require(mu == rhs, "edge recurrence fails at (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    }
  });
}

CheckResult check_derivative_rule(const Options& opts) {
  return run_check("derivative-rule", opts, opts.cases, [&](Case& c, int) {
    Graph g = random_small_graph(c.rng, opts.max_n);
    c.on(g);
    SubgraphPolynomials polys(g);
    IntPolynomial sum;
    g.all().for_each([&](Vertex v) { sum += polys.of(g.all().without(v)); });
    c.require(poly_derivative(polys.of(g.all())) == sum, "derivative is not the sum of vertex-deleted polynomials");
  });
}

CheckResult check_union_rule(const Options& opts) {
  return run_check("union-rule", opts, opts.cases, [&](Case& c, int) {
    Graph a = random_small_graph(c.rng, std::max(1, opts.max_n / 2));
    Graph b = random_small_graph(c.rng, std::max(1, opts.max_n / 2));
    Graph u = disjoint_union(a, b);
    c.on(u);
    c.require(matching_polynomial(u) == matching_polynomial(a) * matching_polynomial(b),
              "polynomial of a disjoint union is not the product");
  });
}

// interlacing

CheckResult check_vertex_interlacing(const Options& opts) {
  return run_check("vertex-interlacing", opts, opts.cases, [&](Case& c, int) {
    Graph g = random_small_graph(c.rng, opts.max_n);
    Theta t = random_theta(c.rng);
    c.on(g);
    c.on(t);
    ThetaContext ctx(g, t);
    const int base = ctx.mult();
    g.all().for_each([&](Vertex v) {
      c.require(std::abs(ctx.mult(g.all().without(v)) - base) <= 1,
                "deleting vertex " + std::to_string(v) + " moves mult by more than one");
    });
  });
}

CheckResult check_path_interlacing(const Options& opts) {
  const int cap = std::min(opts.max_n, 9);
  return run_check("path-interlacing", opts, opts.cases, [&](Case& c, int) {
    Graph g = random_small_graph(c.rng, cap);
    Theta t = random_theta(c.rng);
    c.on(g);
    c.on(t);
    ThetaContext ctx(g, t);
    const int base = ctx.mult();
    const int n = g.order();
    for (int pair = 0; pair < 3; ++pair) {
      Vertex u = uniform(c.rng, 0, n - 1);
      Vertex v = uniform(c.rng, 0, n - 1);
      std::vector<std::vector<Vertex>> paths = u == v ? std::vector<std::vector<Vertex>>{{u}} : enumerate_paths(g, u, v);
      for (const auto& p : paths) {
        VertexMask rest = g.all();
        for (Vertex w : p) rest.reset(w);
        c.require(ctx.mult(rest) >= base - 1, "deleting a path drops mult by more than one");
      }
    }
  });
}

CheckResult check_heilmann_lieb(const Options& opts) {
  const int cap = std::min(opts.max_n, 8);
  return run_check("heilmann-lieb", opts, opts.cases, [&](Case& c, int) {
    Graph g = random_small_graph(c.rng, cap);
    c.on(g);
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v = u + 1; v < g.order(); ++v)
        c.require(heilmann_lieb_check(g, u, v),
                  "identity fails for pair (" + std::to_string(u) + "," + std::to_string(v) + ")");
  });
}

// stability

CheckResult check_special_deletion_stability(const Options& opts) {
  return run_check("special-deletion-stability", opts, opts.cases, [&](Case& c, int) {
    Graph g = random_small_graph(c.rng, opts.max_n);
    Theta t = random_theta(c.rng);
    c.on(g);
    c.on(t);
    ThetaContext ctx(g, t);
    DpanPartition part = dpan_partition(ctx, g.all());
    for (Vertex u : part.special) {
      DpanPartition sub = dpan_partition(ctx, g.all().without(u));
      std::vector<Vertex> rest;
      for (Vertex a : part.special)
        if (a != u) rest.push_back(a);
      const std::string at = " after deleting special vertex " + std::to_string(u);
      c.require(sub.mult == part.mult + 1, "mult did not rise" + at);
      c.require(sub.essential == part.essential, "essential set changed" + at);
      c.require(sub.positive == part.positive, "positive set changed" + at);
      c.require(sub.neutral == part.neutral, "neutral set changed" + at);
      c.require(sub.special == VertexSet(rest), "special set is not the old one minus the vertex" + at);
    }
  });
}

// gallai

CheckResult check_gallai_lemma(const Options& opts) {
  return run_check("gallai-lemma", opts, opts.cases, [&](Case& c, int) {
    Graph g = random_small_graph(c.rng, opts.max_n);
    Theta t = random_theta(c.rng);
    c.on(g);
    c.on(t);
    ThetaContext ctx(g, t);
    DpanPartition part = dpan_partition(ctx, g.all());
    std::vector<VertexMask> pieces = component_masks(g, g.all());
    for (const VertexMask& m : component_masks(g, g.all() - VertexMask::from(g.order(), part.special)))
      pieces.push_back(m);
    for (const VertexMask& m : pieces) {
      auto classes = classify_vertices(ctx, m);
      bool all_essential = true;
      m.for_each([&](Vertex v) { all_essential = all_essential && classes[v].kind == VertexKind::Essential; });
      if (all_essential) c.require(ctx.mult(m) == 1, "connected graph with every vertex essential has mult != 1");
    }
  });
}

CheckResult check_gallai_edmonds_counts(const Options& opts) {
  return run_check("gallai-edmonds-counts", opts, opts.cases, [&](Case& c, int) {
    Graph g = random_small_graph(c.rng, opts.max_n);
    Theta t = random_theta(c.rng);
    c.on(g);
    c.on(t);
    GallaiEdmondsReport r = gallai_edmonds(g, t);
    c.require(r.critical_count == static_cast<int>(r.partition.special.size()) + r.partition.mult,
              "critical components after deleting the special set != |A| + mult");
  });
}

CheckResult check_hamiltonian_special(const Options& opts) {
  return run_check("hamiltonian-special", opts, opts.cases, [&](Case& c, int i) {
    Graph g;
    const int n = uniform(c.rng, 1, std::max(1, opts.max_n));
    switch (i % 4) {
      case 0: g = path_graph(n); break;
      case 1: g = n >= 3 ? cycle_graph(n) : path_graph(n); break;
      case 2: g = complete_graph(n); break;
      default: {
        // A random Hamiltonian path plus random chords.
        std::vector<Vertex> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), c.rng);
        g = random_graph(c.rng, n, random_density(c.rng) / 2);
        for (int k = 0; k + 1 < n; ++k)
          if (!g.has_edge(order[k], order[k + 1])) g = add_edge(g, order[k], order[k + 1]);
      }
    }
    Theta t = random_theta(c.rng);
    c.on(g);
    c.on(t);
    DpanPartition part = dpan_partition(g, t);
    if (part.mult >= 1) {
      c.require(part.positive.empty() && part.neutral.empty(),
                "graph with a Hamiltonian path and mult >= 1 has a non-special, non-essential vertex");
    }
  });
}

// barriers

CheckResult check_pruned_vs_bruteforce_barriers(const Options& opts) {
  const int cap = std::min(opts.max_n, kBruteForceBound);
  return run_check("pruned-vs-bruteforce", opts, opts.cases, [&](Case& c, int) {
    Graph g = random_small_graph(c.rng, cap);
    Theta t = random_theta(c.rng);
    c.on(g);
    c.on(t);
    BarrierFamily fast = enumerate_barrier_sets(g, t, cap);
    BarrierFamily slow = enumerate_barrier_sets_bruteforce(g, t, cap);
    c.require(fast.sets == slow.sets, "pruned enumeration differs from exhaustive search");
    c.require(fast.includes_empty == slow.includes_empty, "empty-set membership differs");
  });
}

CheckResult check_barrier_properties(const Options& opts) {
  const int cap = std::min(opts.max_n, 10);
  return run_check("barrier-properties", opts, opts.cases, [&](Case& c, int) {
    Graph g = random_small_graph(c.rng, cap);
    Theta t = random_theta(c.rng);
    c.on(g);
    c.on(t);
    ThetaContext ctx(g, t);
    const int n = g.order();
    DpanPartition part = dpan_partition(ctx, g.all());
    BarrierFamily fam = enumerate_barrier_sets(ctx);

    const VertexMask special = VertexMask::from(n, part.special);
    c.require(is_barrier_set(ctx, special), "special set is not a barrier set");

    VertexMask allowed = special;
    allowed |= VertexMask::from(n, part.positive);
    for (const VertexSet& x : fam.sets) {
      const VertexMask xm = VertexMask::from(n, x);
      c.require(!(VertexMask(xm) -= allowed).any(), "barrier set " + set_text(x) + " leaves the positive vertices");
      const auto& mem = x.members();
      for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << mem.size()); ++bits) {
        VertexMask y(n);
        for (std::size_t k = 0; k < mem.size(); ++k)
          if ((bits >> k) & 1U) y.set(mem[k]);
        c.require(is_extreme_set(ctx, y), "subset of barrier set " + set_text(x) + " is not extreme");
        // X \ Y is a barrier set of G \ Y.
        VertexMask rest = xm;
        rest -= y;
        const VertexMask remaining = VertexMask(g.all()) -= y;
        c.require(ctx.mult(remaining) == ctx.critical_components(remaining - rest) - rest.count(),
                  "removing part of barrier set " + set_text(x) + " leaves a non-barrier remainder");
      }
    }

    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
      VertexMask e(n);
      for (Vertex v = 0; v < n; ++v)
        if ((bits >> v) & 1U) e.set(v);
      if (!is_extreme_set(ctx, e)) continue;
      const VertexSet es = e.to_set();
      bool covered = std::any_of(fam.sets.begin(), fam.sets.end(), [&](const VertexSet& x) {
        return std::includes(x.begin(), x.end(), es.begin(), es.end());
      });
      c.require(covered, "extreme set " + set_text(es) + " lies in no barrier set");
    }
  });
}

// elementary

CheckResult check_elementary_routes(const Options& opts) {
  return run_check("elementary-routes", opts, opts.cases, [&](Case& c, int i) {
    Graph g;
    Theta t = theta_of(1);
    switch (i % 4) {
      case 0:
        g = cycle_graph(uniform(c.rng, 3, std::max(3, opts.max_n)));
        t = uniform(c.rng, 0, 1) ? theta_of(1) : theta_of(0);
        break;
      case 1:
        if (opts.max_n >= 6) {
          g = random_cycle_join(c.rng, opts.max_n);
        } else {
          g = cycle_graph(3);
        }
        break;
      case 2: g = figure_graph(static_cast<Figure>(uniform(c.rng, 0, 3))); break;
      default:
        g = random_small_graph(c.rng, opts.max_n);
        t = random_theta(c.rng);
    }
    c.on(g);
    c.on(t);
    ElementaryRoutes r = elementary_routes(g, t, std::max(kDefaultEnumerationBound, g.order()));
    c.require(r.agree(), "definition=" + std::to_string(r.by_definition) + " classes=" +
                             std::to_string(r.by_neighbourhood_classes) +
                             " partition=" + std::to_string(r.by_barrier_partition));
    if (r.by_definition) {
      ThetaContext ctx(g, t);
      for (const VertexSet& s : enumerate_barrier_sets(ctx).sets) {
        BarrierWitness w = barrier_partition_witness(g, t, s);
        c.require(w.member, "barrier set " + set_text(s) + " fails the component witness");
      }
    }
  });
}

CheckResult check_neutral_free_after_deletion(const Options& opts) {
  return run_check("neutral-free-after-deletion", opts, opts.cases, [&](Case& c, int i) {
    auto sample = super_positive_sample(c.rng, opts.max_n, i);
    if (!sample) return;
    const auto& [g, t] = *sample;
    c.on(g);
    c.on(t);
    ThetaContext ctx(g, t);
    g.all().for_each([&](Vertex v) {
      c.require(dpan_partition(ctx, g.all().without(v)).neutral.empty(),
                "neutral vertex after deleting vertex " + std::to_string(v));
    });
  });
}

CheckResult check_adjacent_zero_pair(const Options& opts) {
  return run_check("adjacent-zero-pair", opts, opts.cases, [&](Case& c, int i) {
    auto sample = super_positive_sample(c.rng, opts.max_n, i);
    if (!sample) return;
    const auto& [g, t] = *sample;
    c.on(g);
    c.on(t);
    ThetaContext ctx(g, t);
    g.all().for_each([&](Vertex v) {
      bool found = false;
      for (Vertex u : g.neighbors(v)) found = found || ctx.mult(g.all().without(u).without(v)) == 0;
      c.require(found, "vertex " + std::to_string(v) + " has no neighbour u with mult(G-uv) = 0");
    });
  });
}

// decomposition

CheckResult check_decomposition_uniqueness(const Options& opts, int orders_per_graph) {
  if (opts.max_n < 6) throw InputError("decomposition checks need max_n >= 6");
  return run_check("decomposition-uniqueness", opts, opts.cases, [&](Case& c, int) {
    const Theta t = theta_of(1);
    Graph g = random_cycle_join(c.rng, opts.max_n);
    c.on(g);
    c.on(t);
    BaseDecomposition first = decompose_to_base(g, t);
    std::vector<Edge> order = first.removed_edges;
    for (int k = 0; k < orders_per_graph; ++k) {
      std::shuffle(order.begin(), order.end(), c.rng);
      c.require(decompose_to_base(g, t, order) == first, "deletion order changed the decomposition");
    }

    std::vector<Edge> rejoined = first.removed_edges;
    for (const Graph& comp : first.base_components) {
      std::vector<Edge> es = lifted_edges(comp);
      rejoined.insert(rejoined.end(), es.begin(), es.end());
      c.require(is_elementary(comp, t, std::max(kDefaultEnumerationBound, comp.order())),
                "connected base component is not elementary");
    }
    std::sort(rejoined.begin(), rejoined.end());
    c.require(rejoined == g.edges(), "components plus extreme edges do not rebuild the input");
  });
}

// trees

CheckResult check_tree_verdict(const Options& opts) {
  return run_check("tree-verdict", opts, opts.cases, [&](Case& c, int i) {
    Graph g = random_tree(c.rng, uniform(c.rng, 1, std::max(1, opts.max_n)));
    Theta t = i % 2 == 0 ? theta_of(0) : random_theta(c.rng);
    c.on(g);
    c.on(t);
    const bool verdict = tree_super_positive_verdict(g, t);
    MatchingProfile counts = matching_counts_bruteforce(g, g.size());
    const int n = g.order();
    const bool perfect = n % 2 == 0 && static_cast<int>(counts.size()) > n / 2 && counts[n / 2] > 0;
    c.require(verdict == (t.is_zero() && perfect), "tree verdict does not match theta = 0 with a perfect matching");
  });
}

// cycles

CheckResult check_path_values(const Options& opts) {
  const int top = std::max(1, opts.max_n);
  return run_check("path-values", opts, top, [&](Case& c, int i) {
    const int n = i + 1;
    Graph g = path_graph(n);
    c.on(g);
    c.on(theta_of(1));
    static constexpr int kTable[6] = {1, 1, 0, -1, -1, 0};
    c.require(evaluate(matching_polynomial(g), Rational(1)) == kTable[n % 6],
              "mu(P" + std::to_string(n) + ", 1) differs from the period-6 table");
  });
}

CheckResult check_cycle_values(const Options& opts) {
  const int count = std::max(0, opts.max_n - 2);
  return run_check("cycle-values", opts, count, [&](Case& c, int i) {
    const int n = i + 3;
    Graph g = cycle_graph(n);
    c.on(g);
    c.on(theta_of(1));
    static constexpr int kTable[6] = {2, 1, -1, -2, -1, 1};
    c.require(evaluate(matching_polynomial(g), Rational(1)) == kTable[n % 6],
              "mu(C" + std::to_string(n) + ", 1) differs from the period-6 table");
  });
}

CheckResult check_cycle_elementary(const Options& opts) {
  const int count = std::max(0, std::min(opts.max_n, 24) - 2);
  return run_check("cycle-elementary", opts, count, [&](Case& c, int i) {
    const int n = i + 3;
    Graph g = cycle_graph(n);
    c.on(g);
    c.on(theta_of(1));
    c.require(is_elementary(g, theta_of(1), n) == (n % 3 == 0), "elementary verdict wrong for C" + std::to_string(n));
  });
}

CheckResult check_cycle_barriers(const Options& opts) {
  const int count = std::max(0, std::min(opts.max_n, 24) / 3);
  return run_check("cycle-barriers", opts, count, [&](Case& c, int i) {
    const int n = 3 * (i + 1);
    Graph g = cycle_graph(n);
    c.on(g);
    c.on(theta_of(1));
    BarrierFamily fam = enumerate_barrier_sets(g, theta_of(1), n);
    std::vector<VertexSet> expected;
    for (int r = 0; r < 3; ++r) {
      std::vector<Vertex> cls;
      for (Vertex v = r; v < n; v += 3) cls.push_back(v);
      expected.emplace_back(cls);
    }
    std::sort(expected.begin(), expected.end());
    c.require(fam.includes_empty, "empty set missing from the barrier family");
    c.require(fam.sets == expected, "barrier sets are not the residue classes mod 3");
  });
}

CheckResult check_vertex_transitive_roots(const Options& opts) {
  const int cycles = std::max(0, std::min(opts.max_n, 16) - 2);
  const int completes = std::max(0, std::min(opts.max_n, 8) - 1);
  return run_check("vertex-transitive-roots", opts, cycles + completes, [&](Case& c, int i) {
    Graph g;
    IntPolynomial f;
    if (i < cycles) {
      g = cycle_graph(i + 3);
      f = matching_polynomial(path_graph(i + 2));
    } else {
      const int n = i - cycles + 2;
      g = complete_graph(n);
      f = matching_polynomial(complete_graph(n - 1));
    }
    c.on(g);
    c.require(super_positive_for_all_roots(g, f), "not super positive at some root of a vertex-deleted polynomial");
  });
}

// suites

namespace {

using CheckFn = std::function<CheckResult(const Options&)>;

const std::map<std::string, std::vector<CheckFn>, std::less<>>& suite_table() {
  static const std::map<std::string, std::vector<CheckFn>, std::less<>> table = {
      {"recurrences",
       {check_coefficients_vs_bruteforce, check_edge_rule, check_derivative_rule, check_union_rule}},
      {"interlacing", {check_vertex_interlacing, check_path_interlacing}},
      {"stability", {check_special_deletion_stability}},
      {"gallai", {check_gallai_lemma, check_gallai_edmonds_counts, check_hamiltonian_special}},
      {"heilmann-lieb", {check_heilmann_lieb}},
      {"barriers", {check_pruned_vs_bruteforce_barriers, check_barrier_properties}},
      {"elementary", {check_elementary_routes, check_neutral_free_after_deletion, check_adjacent_zero_pair}},
      {"decomposition", {[](const Options& o) { return check_decomposition_uniqueness(o); }}},
      {"trees", {check_tree_verdict}},
      {"cycles",
       {check_path_values, check_cycle_values, check_cycle_elementary, check_cycle_barriers,
        check_vertex_transitive_roots}},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"recurrences", "interlacing",  "stability", "gallai",
                                                 "heilmann-lieb", "barriers",   "elementary", "decomposition",
                                                 "trees",         "cycles"};
  return names;
}

SuiteResult run_suite(std::string_view suite, const Options& opts) {
  const auto& table = suite_table();
  auto it = table.find(suite);
  if (it == table.end()) throw InputError("unknown suite: " + std::string(suite));
  SuiteResult out{it->first, {}};
  for (const auto& fn : it->second) out.checks.push_back(fn(opts));
  return out;
}

}  // namespace thetamatch::verify

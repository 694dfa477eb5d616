#include "thetamatch/superpos.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "thetamatch/classify.hpp"
#include "thetamatch/errors.hpp"
#include "thetamatch/matching.hpp"

namespace thetamatch {

namespace {

std::vector<Edge> extreme_edges(ThetaContext& ctx) {
  std::vector<Edge> out;
  const VertexMask all = ctx.all();
  for (const Edge& e : ctx.graph().edges()) {
    if (ctx.mult(all.without(e.u).without(e.v)) == 2) out.push_back(e);
  }
  return out;
}

std::string edge_text(const Edge& e) { return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")"; }

}  // namespace

bool is_super_positive(const Graph& g, const Theta& t) {
  ThetaContext ctx(g, t);
  return is_super_positive(ctx, g.all());
}

std::vector<Edge> theta_extreme_edges(const Graph& g, const Theta& t) {
  ThetaContext ctx(g, t);
  if (!is_super_positive(ctx, g.all())) {
    throw PreconditionError("extreme edges are defined for theta-super positive graphs only");
  }
  return extreme_edges(ctx);
}

bool is_base(const Graph& g, const Theta& t, int max_vertices) {
  if (g.order() > max_vertices) {
    throw BoundError("base test: " + std::to_string(g.order()) + " vertices exceeds bound " +
                     std::to_string(max_vertices));
  }
  ThetaContext ctx(g, t);
  if (!is_super_positive(ctx, g.all())) return false;
  BarrierFamily fam = enumerate_barrier_sets(ctx);
  return std::all_of(fam.sets.begin(), fam.sets.end(),
                     [&](const VertexSet& s) { return s.size() < 2 || is_independent_set(g, s); });
}

BaseDecomposition decompose_to_base(const Graph& g, const Theta& t) {
  std::vector<Edge> order = theta_extreme_edges(g, t);
  return decompose_to_base(g, t, order);
}

BaseDecomposition decompose_to_base(const Graph& g, const Theta& t, std::span<const Edge> order) {
  std::vector<Edge> remaining = theta_extreme_edges(g, t);
  {
    std::vector<Edge> given(order.begin(), order.end());
    std::sort(given.begin(), given.end());
    if (given != remaining) {
      throw PreconditionError("deletion order must be a permutation of the theta-extreme edges");
    }
  }

  Graph current = g;
  for (const Edge& e : order) {
    current = delete_edge(current, e);
    remaining.erase(std::find(remaining.begin(), remaining.end(), e));
    ThetaContext ctx(current, t);
    if (!is_super_positive(ctx, current.all())) {
      throw InvariantError("graph stopped being super positive after deleting extreme edge " + edge_text(e));
    }
    if (extreme_edges(ctx) != remaining) {
      throw InvariantError("extreme edges changed beyond the deleted edge " + edge_text(e));
    }
  }

  BaseDecomposition out;
  out.removed_edges.assign(order.begin(), order.end());
  std::sort(out.removed_edges.begin(), out.removed_edges.end());
  out.base_components = connected_components(current);
  for (const Graph& c : out.base_components) {
    if (!is_base(c, t, std::max(kDefaultEnumerationBound, c.order()))) {
      throw InvariantError("decomposition produced a component that is not theta-base");
    }
  }
  return out;
}

Graph add_extreme_edge(const Graph& g, const Theta& t, Vertex u, Vertex v) {
  if (!g.has_vertex(u) || !g.has_vertex(v) || u == v) throw InputError("add_extreme_edge: bad endpoints");
  if (g.has_edge(u, v)) throw PreconditionError("add_extreme_edge: edge already present");
  ThetaContext ctx(g, t);
  if (!is_super_positive(ctx, g.all())) throw PreconditionError("add_extreme_edge: graph is not super positive");
  VertexMask pair(g.order());
  pair.set(u);
  pair.set(v);
  if (!is_extreme_set(ctx, pair)) throw PreconditionError("add_extreme_edge: endpoints are not an extreme set");
  Graph out = add_edge(g, u, v);
  if (!is_super_positive(out, t)) throw InvariantError("adding an extreme edge broke super positivity");
  return out;
}

Graph join_super_positive(const Graph& g1, const VertexSet& s1, const Graph& g2, const VertexSet& s2,
                          const Theta& t, std::span<const CrossEdge> cross_edges) {
  if (cross_edges.empty()) throw PreconditionError("join needs at least one cross edge");
  for (const auto& [g, s, name] : {std::tuple{&g1, &s1, "first"}, std::tuple{&g2, &s2, "second"}}) {
    ThetaContext ctx(*g, t);
    if (!is_super_positive(ctx, g->all())) {
      throw PreconditionError(std::string("join: ") + name + " graph is not super positive");
    }
    if (s->empty() || !is_barrier_set(ctx, VertexMask::from(g->order(), *s))) {
      throw PreconditionError(std::string("join: ") + name + " set is not a barrier set");
    }
  }
  Graph joined = disjoint_union(g1, g2);
  for (const auto& [a, b] : cross_edges) {
    if (!s1.contains(a) || !s2.contains(b)) {
      throw PreconditionError("join: cross edge (" + std::to_string(a) + "," + std::to_string(b) +
                              ") is not anchored in the barrier sets");
    }
    if (joined.has_edge(a, b + g1.order())) throw PreconditionError("join: repeated cross edge");
    joined = add_edge(joined, a, b + g1.order());
  }
  if (!is_super_positive(joined, t)) throw InvariantError("joined graph is not super positive");
  return joined;
}

bool super_positive_for_all_roots(const Graph& g, const IntPolynomial& f) {
  if (f.is_zero()) throw InputError("super_positive_for_all_roots: zero polynomial");
  const IntPolynomial s = squarefree_part(f);
  if (s.degree() < 1) return true;

  SubgraphPolynomials polys(g);
  const VertexMask all = g.all();
  if (poly_gcd(polys.of(all), s).degree() > 0) return false;
  bool ok = true;
  all.for_each([&](Vertex v) {
    if (!ok) return;
    auto cofactor = exact_quotient(polys.of(all.without(v)), s);
    ok = cofactor && poly_gcd(s, *cofactor).degree() == 0;
  });
  return ok;
}

bool tree_super_positive_verdict(const Graph& g, const Theta& t) {
  if (g.empty() || !is_forest(g) || !is_connected(g)) {
    throw PreconditionError("tree_super_positive_verdict needs a tree");
  }
  const bool verdict = t.is_zero() && mult(g, t) == 0;
  if (verdict != is_super_positive(g, t)) {
    throw InvariantError("tree verdict disagrees with the super positivity test");
  }
  return verdict;
}

}  // namespace thetamatch

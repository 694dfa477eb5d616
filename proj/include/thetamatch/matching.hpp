#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "thetamatch/graph.hpp"
#include "thetamatch/poly.hpp"

namespace thetamatch {

/// p(G,0), p(G,1), ..., p(G, floor(n/2)): numbers of r-matchings.
using MatchingProfile = std::vector<BigInt>;

/// Matching polynomials of the induced subgraphs of one fixed graph.
///
/// mu(G[S]) is computed by splitting S into components (mu is multiplicative
/// over disjoint unions) and expanding a connected S at its highest-degree
/// vertex u: mu(S) = x mu(S-u) - sum_{i~u} mu(S-u-i). Every graph reached
/// this way is again induced, so results are memoized by vertex subset.
class SubgraphPolynomials {
 public:
  explicit SubgraphPolynomials(const Graph& g) : graph_(g) {}

  const Graph& graph() const { return graph_; }
  const IntPolynomial& of(const VertexMask& subset);
  std::size_t memo_size() const { return memo_.size(); }

 private:
  const IntPolynomial& connected(const VertexMask& subset);

  Graph graph_;
  std::unordered_map<VertexMask, IntPolynomial, VertexMaskHash> memo_;
};

/// A graph, a theta and shared caches for every quantity the classification,
/// barrier and decomposition code derives from mult(theta, G[S]).
class ThetaContext {
 public:
  ThetaContext(const Graph& g, Theta t) : polys_(g), theta_(std::move(t)) {}

  const Graph& graph() const { return polys_.graph(); }
  const Theta& theta() const { return theta_; }
  VertexMask all() const { return graph().all(); }

  const IntPolynomial& poly(const VertexMask& s) { return polys_.of(s); }
  int mult(const VertexMask& s);
  int mult() { return mult(all()); }

  /// `s` must induce a connected subgraph.
  bool is_critical_component(const VertexMask& s);
  /// c_theta(G[s]).
  int critical_components(const VertexMask& s);

 private:
  SubgraphPolynomials polys_;
  Theta theta_;
  std::unordered_map<VertexMask, int, VertexMaskHash> mult_;
  std::unordered_map<VertexMask, bool, VertexMaskHash> critical_;
};

IntPolynomial matching_polynomial(const Graph& g);

/// Exhaustive enumeration of edge subsets; independent of the recurrence.
/// Throws BoundError when g has more than `max_edges` edges.
MatchingProfile matching_counts_bruteforce(const Graph& g, int max_edges = 24);

/// sum_r (-1)^r counts[r] x^(n-2r).
IntPolynomial polynomial_from_counts(const MatchingProfile& counts, int n);

int mult(const Graph& g, const Theta& t);

/// mu(G-u) mu(G-v) - mu(G) mu(G-uv) == sum over u-v paths p of mu(G-p)^2.
bool heilmann_lieb_check(const Graph& g, Vertex u, Vertex v);

}  // namespace thetamatch

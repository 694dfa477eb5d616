#pragma once

#include <span>
#include <utility>
#include <vector>

#include "thetamatch/barrier.hpp"
#include "thetamatch/graph.hpp"
#include "thetamatch/poly.hpp"

namespace thetamatch {

/// (vertex of the first graph, vertex of the second graph).
using CrossEdge = std::pair<Vertex, Vertex>;

/// Result of deleting every theta-extreme edge of a theta-super positive graph.
struct BaseDecomposition {
  /// The theta-extreme edges of the input, ascending.
  std::vector<Edge> removed_edges;
  /// Components of the input minus `removed_edges`, each theta-base, ordered
  /// by smallest vertex; labels are the input's vertices.
  std::vector<Graph> base_components;

  friend bool operator==(const BaseDecomposition&, const BaseDecomposition&) = default;
};

/// mult(G) = 0 and mult(G\v) = 1 for every vertex.
bool is_super_positive(const Graph& g, const Theta& t);

/// Edges whose endpoint pair is a theta-extreme set. PreconditionError unless
/// g is theta-super positive.
std::vector<Edge> theta_extreme_edges(const Graph& g, const Theta& t);

/// Super positive and every barrier set with two or more members is
/// independent. Singleton barrier sets count as independent.
bool is_base(const Graph& g, const Theta& t, int max_vertices = kDefaultEnumerationBound);

/// Deletes the theta-extreme edges one at a time in ascending order, checking
/// after every deletion that the graph is still super positive and that its
/// extreme edges are exactly the previous ones minus the deleted edge.
BaseDecomposition decompose_to_base(const Graph& g, const Theta& t);
/// Same, deleting in the given order, which must be a permutation of the
/// extreme edges of g.
BaseDecomposition decompose_to_base(const Graph& g, const Theta& t, std::span<const Edge> order);

/// Adds (u,v) where {u,v} is a theta-extreme set of the super positive g.
Graph add_extreme_edge(const Graph& g, const Theta& t, Vertex u, Vertex v);

/// Disjoint union of g1 and g2 plus `cross_edges`, each joining a vertex of
/// s1 (a barrier set of g1) to a vertex of s2 (a barrier set of g2). In the
/// result g2's vertices are shifted by g1.order(). The result is checked to
/// be super positive.
Graph join_super_positive(const Graph& g1, const VertexSet& s1, const Graph& g2, const VertexSet& s2,
                          const Theta& t, std::span<const CrossEdge> cross_edges);

/// For s = squarefree_part(f): gcd(mu(G), s) = 1 and, for every v, s divides
/// mu(G\v) with gcd(s, mu(G\v)/s) = 1. Equivalent to G being theta-super
/// positive at every root theta of f.
bool super_positive_for_all_roots(const Graph& g, const IntPolynomial& f);

/// For a tree: super positive iff theta = 0 and the tree has a perfect
/// matching. Cross-checked against is_super_positive. PreconditionError for
/// graphs that are not trees.
bool tree_super_positive_verdict(const Graph& g, const Theta& t);

}  // namespace thetamatch

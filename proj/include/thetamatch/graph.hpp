#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace thetamatch {

using Vertex = int;

/// Undirected edge stored as (min, max).
struct Edge {
  Vertex u;
  Vertex v;

  Edge(Vertex a, Vertex b);

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free set of vertices of one graph.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs);
  explicit VertexSet(std::vector<Vertex> vs);

  bool contains(Vertex v) const;
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  const std::vector<Vertex>& members() const { return members_; }

  friend auto operator<=>(const VertexSet& a, const VertexSet& b) {
    // (size, lexicographic) order used for deterministic listings
    if (auto c = a.members_.size() <=> b.members_.size(); c != 0) return c;
    return a.members_ <=> b.members_;
  }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

/// Fixed-universe bitset over the vertices of a graph; the key type of the
/// induced-subgraph memo tables.
class VertexMask {
 public:
  VertexMask() = default;
  explicit VertexMask(int universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  static VertexMask full(int universe);

  int universe() const { return universe_; }
  bool test(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
  void set(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  VertexMask without(Vertex v) const {
    VertexMask m = *this;
    m.reset(v);
    return m;
  }

  int count() const;
  bool none() const;
  bool any() const { return !none(); }
  /// Smallest member, or -1 when empty.
  Vertex first() const;
  bool intersects(const VertexMask& o) const;

  VertexMask& operator&=(const VertexMask& o);
  VertexMask& operator|=(const VertexMask& o);
  /// Set difference.
  VertexMask& operator-=(const VertexMask& o);
  friend VertexMask operator&(VertexMask a, const VertexMask& b) { return a &= b; }
  friend VertexMask operator|(VertexMask a, const VertexMask& b) { return a |= b; }
  friend VertexMask operator-(VertexMask a, const VertexMask& b) { return a -= b; }
  friend bool operator==(const VertexMask&, const VertexMask&) = default;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        f(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<Vertex> to_vector() const;
  VertexSet to_set() const { return VertexSet(to_vector()); }
  static VertexMask from(int universe, const VertexSet& s);

  std::size_t hash() const;

 private:
  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct VertexMaskHash {
  std::size_t operator()(const VertexMask& m) const { return m.hash(); }
};

/// Simple undirected graph on vertices 0..n-1. Each vertex carries the label
/// it had in the graph it was derived from, so G\X keeps naming survivors by
/// their original identity.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const { return edge_count_; }
  bool empty() const { return adj_.empty(); }

  bool has_vertex(Vertex v) const { return v >= 0 && v < order(); }
  bool has_edge(Vertex u, Vertex v) const;
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  std::vector<Edge> edges() const;

  Vertex label(Vertex v) const { return labels_[v]; }
  const std::vector<Vertex>& labels() const { return labels_; }
  /// Local vertex carrying original label `l`, or -1.
  Vertex find_label(Vertex l) const;
  Graph with_labels(std::vector<Vertex> labels) const;
  Graph relabeled_identity() const;

  VertexMask all() const { return VertexMask::full(order()); }
  const VertexMask& neighbor_mask(Vertex v) const { return adj_mask_[v]; }
  /// Subgraph induced on `keep`; surviving vertices keep their labels.
  Graph induced(const VertexMask& keep) const;

  /// Same vertex count and edge set, labels ignored.
  bool same_structure(const Graph& o) const { return adj_ == o.adj_; }
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adj_ == b.adj_ && a.labels_ == b.labels_;
  }

 private:
  void rebuild_masks();

  std::vector<std::vector<Vertex>> adj_;
  std::vector<VertexMask> adj_mask_;
  std::vector<Vertex> labels_;
  int edge_count_ = 0;
};

// Mutation by copy.
Graph delete_vertices(const Graph& g, const VertexSet& xs);
Graph delete_vertex(const Graph& g, Vertex v);
Graph delete_edge(const Graph& g, Edge e);
Graph add_edge(const Graph& g, Vertex u, Vertex v);
Graph add_edges(const Graph& g, std::span<const Edge> es);

/// Components ordered by smallest vertex; labels preserved.
std::vector<Graph> connected_components(const Graph& g);
/// Vertex sets of the components of the subgraph induced on `within`.
std::vector<VertexMask> component_masks(const Graph& g, const VertexMask& within);
bool is_connected(const Graph& g);
bool is_forest(const Graph& g);
bool is_independent_set(const Graph& g, const VertexSet& xs);

/// Every simple u-v path as an ordered vertex sequence (exhaustive DFS).
std::vector<std::vector<Vertex>> enumerate_paths(const Graph& g, Vertex u, Vertex v);

// Generators. Labels are the identity.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
/// Vertices of `b` are shifted by a.order(); labels reset to identity.
Graph disjoint_union(const Graph& a, const Graph& b);

enum class Figure { Fig1, Fig3, Fig5, Fig6 };
/// Built-in example graphs. Vertices are 0-based; 1-based label k is vertex k-1.
Graph figure_graph(Figure f);
Figure parse_figure(std::string_view name);

/// Graph by short name: "C9", "P4", "K3", "fig1", or a '+'-joined union such
/// as "C6+C3".
Graph named_graph(std::string_view name);

// Text formats.
enum class GraphFormat { EdgeList, Graph6 };

Graph parse_graph(std::string_view text, GraphFormat format);
/// Edge list if the first meaningful line has two integers, graph6 otherwise.
Graph parse_graph_auto(std::string_view text);
std::string serialize_graph(const Graph& g, GraphFormat format);

}  // namespace thetamatch

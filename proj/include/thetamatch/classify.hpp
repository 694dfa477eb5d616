#pragma once

#include <string_view>
#include <vector>

#include "thetamatch/graph.hpp"
#include "thetamatch/matching.hpp"
#include "thetamatch/poly.hpp"

namespace thetamatch {

/// How deleting a vertex moves mult(theta, .): down by one, unchanged, up by one.
enum class VertexKind { Essential, Neutral, Positive };

std::string_view to_string(VertexKind k);

struct VertexClass {
  VertexKind kind;
  /// Not essential but adjacent to an essential vertex. Always Positive.
  bool special = false;

  friend bool operator==(const VertexClass&, const VertexClass&) = default;
};

/// V(G) = D (essential) + A (special) + P (positive, not special) + N (neutral).
struct DpanPartition {
  VertexSet essential;
  VertexSet special;
  VertexSet positive;
  VertexSet neutral;
  int mult = 0;

  friend bool operator==(const DpanPartition&, const DpanPartition&) = default;
};

struct ComponentReport {
  Graph graph;
  bool critical = false;
};

/// Result of deleting A_theta(G) and inspecting what is left.
struct GallaiEdmondsReport {
  DpanPartition partition;
  /// Components of G \ A, ordered by smallest vertex, labels preserved.
  std::vector<ComponentReport> components_after_special;
  int critical_count = 0;
};

// Mask-level forms over a shared context. Vertex sets are in the context
// graph's numbering.
std::vector<VertexClass> classify_vertices(ThetaContext& ctx, const VertexMask& within);
DpanPartition dpan_partition(ThetaContext& ctx, const VertexMask& within);
/// mult(S) = 0 and mult(S - v) = 1 for every v in S.
bool is_super_positive(ThetaContext& ctx, const VertexMask& within);

VertexClass classify_vertex(const Graph& g, const Theta& t, Vertex u);
/// One class per vertex, computed with a single shared memo.
std::vector<VertexClass> classify_all(const Graph& g, const Theta& t);
DpanPartition dpan_partition(const Graph& g, const Theta& t);

bool is_theta_critical(const Graph& g, const Theta& t);
/// c_theta(G): number of theta-critical connected components.
int critical_component_count(const Graph& g, const Theta& t);

/// Deletes A_theta(G) and checks every structural consequence (stability of
/// D, P, N and emptiness of A afterwards; |A| + mult critical components;
/// remaining components have mult 0; critical components cover exactly D).
/// Throws InvariantError if any of them fails.
GallaiEdmondsReport gallai_edmonds(const Graph& g, const Theta& t);

}  // namespace thetamatch

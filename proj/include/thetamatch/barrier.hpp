#pragma once

#include <vector>

#include "thetamatch/graph.hpp"
#include "thetamatch/matching.hpp"
#include "thetamatch/poly.hpp"

namespace thetamatch {

inline constexpr int kDefaultEnumerationBound = 16;
inline constexpr int kBruteForceBound = 12;
inline constexpr int kWitnessSubsetCap = 6;

/// The theta-barrier sets of a graph.
///
/// `sets` lists the nonempty barrier sets ordered by (size, members). The
/// empty set satisfies the barrier equation exactly when mult = c_theta(G);
/// that is reported in `includes_empty` rather than listed. `is_partition`
/// refers to `sets` only.
struct BarrierFamily {
  std::vector<VertexSet> sets;
  bool includes_empty = false;
  bool is_partition = false;

  friend bool operator==(const BarrierFamily&, const BarrierFamily&) = default;
};

bool is_extreme_set(ThetaContext& ctx, const VertexMask& xs);
bool is_barrier_set(ThetaContext& ctx, const VertexMask& xs);

/// mult(G \ X) = mult(G) + |X|.
bool is_extreme_set(const Graph& g, const Theta& t, const VertexSet& xs);
/// mult(G) = c_theta(G \ X) - |X|.
bool is_barrier_set(const Graph& g, const Theta& t, const VertexSet& xs);

/// Every barrier set lies in A u P and is theta-extreme, and subsets of
/// extreme sets are extreme, so the search grows extreme sets from A u P in
/// increasing vertex order and never exceeds (n - mult) / 2 members.
BarrierFamily enumerate_barrier_sets(ThetaContext& ctx);
BarrierFamily enumerate_barrier_sets(const Graph& g, const Theta& t,
                                     int max_vertices = kDefaultEnumerationBound);

/// Tests every subset of V(G) against the definition. Oracle for the above.
BarrierFamily enumerate_barrier_sets_bruteforce(const Graph& g, const Theta& t,
                                                int max_vertices = kBruteForceBound);

/// The three independent answers to "is G theta-elementary?".
struct ElementaryRoutes {
  /// super positive and P(G\v) empty for all v
  bool by_definition = false;
  /// mult(G) = 0 and P(G\v) u N(G\v) empty for all v
  bool by_neighbourhood_classes = false;
  /// the nonempty barrier sets partition V(G)
  bool by_barrier_partition = false;

  bool agree() const {
    return by_definition == by_neighbourhood_classes && by_definition == by_barrier_partition;
  }
};

ElementaryRoutes elementary_routes(const Graph& g, const Theta& t,
                                   int max_vertices = kDefaultEnumerationBound);
/// Shared verdict of the three routes; InvariantError if they disagree.
bool is_elementary(const Graph& g, const Theta& t, int max_vertices = kDefaultEnumerationBound);

struct BarrierWitness {
  int components = 0;
  bool all_critical = false;
  /// G \ S has exactly |S| components, all critical.
  bool member = false;
  /// Nonempty subsets X of S for which A(G\X) = S\X and P u N of G\X is empty
  /// was confirmed (only when `member`).
  int subsets_checked = 0;
};

/// For a theta-elementary g: decides S in the barrier family by counting the
/// critical components of G \ S, cross-checks against the barrier definition,
/// and for members confirms the deletion structure on every nonempty subset
/// of size <= kWitnessSubsetCap. PreconditionError if g is not elementary;
/// InvariantError on any inconsistency.
BarrierWitness barrier_partition_witness(const Graph& g, const Theta& t, const VertexSet& s);

}  // namespace thetamatch

#include "thetamatch/barrier.hpp"

#include <algorithm>
#include <string>

#include "thetamatch/classify.hpp"
#include "thetamatch/errors.hpp"

namespace thetamatch {

namespace {

void check_bound(const Graph& g, int max_vertices, const char* what) {
  if (g.order() > max_vertices) {
    throw BoundError(std::string(what) + ": " + std::to_string(g.order()) + " vertices exceeds bound " +
                     std::to_string(max_vertices));
  }
}

BarrierFamily finish(std::vector<VertexSet> sets, bool includes_empty, int n) {
  std::sort(sets.begin(), sets.end());
  BarrierFamily fam{std::move(sets), includes_empty, false};
  std::vector<int> cover(n, 0);
  for (const auto& s : fam.sets)
    for (Vertex v : s) ++cover[v];
  fam.is_partition = std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; });
  return fam;
}

}  // namespace

bool is_extreme_set(ThetaContext& ctx, const VertexMask& xs) {
  return ctx.mult(ctx.all() - xs) == ctx.mult() + xs.count();
}

bool is_barrier_set(ThetaContext& ctx, const VertexMask& xs) {
  return ctx.mult() == ctx.critical_components(ctx.all() - xs) - xs.count();
}

bool is_extreme_set(const Graph& g, const Theta& t, const VertexSet& xs) {
  ThetaContext ctx(g, t);
  return is_extreme_set(ctx, VertexMask::from(g.order(), xs));
}

bool is_barrier_set(const Graph& g, const Theta& t, const VertexSet& xs) {
  ThetaContext ctx(g, t);
  return is_barrier_set(ctx, VertexMask::from(g.order(), xs));
}

BarrierFamily enumerate_barrier_sets(ThetaContext& ctx) {
  const Graph& g = ctx.graph();
  const int n = g.order();
  const int base = ctx.mult();
  const int max_size = (n - base) / 2;

  DpanPartition part = dpan_partition(ctx, ctx.all());
  std::vector<Vertex> candidates(part.special.begin(), part.special.end());
  candidates.insert(candidates.end(), part.positive.begin(), part.positive.end());
  std::sort(candidates.begin(), candidates.end());

  std::vector<VertexSet> found;
  bool includes_empty = false;
  // Invariant: `current` is extreme with `size` members.
  auto grow = [&](auto&& self, std::size_t from, VertexMask& current, int size) -> void {
    if (is_barrier_set(ctx, current)) {
      if (size == 0) {
        includes_empty = true;
      } else {
        found.push_back(current.to_set());
      }
    }
    if (size == max_size) return;
    for (std::size_t i = from; i < candidates.size(); ++i) {
      current.set(candidates[i]);
      if (ctx.mult(ctx.all() - current) == base + size + 1) self(self, i + 1, current, size + 1);
      current.reset(candidates[i]);
    }
  };
  VertexMask start(n);
  grow(grow, 0, start, 0);
  return finish(std::move(found), includes_empty, n);
}

BarrierFamily enumerate_barrier_sets(const Graph& g, const Theta& t, int max_vertices) {
  check_bound(g, max_vertices, "barrier enumeration");
  ThetaContext ctx(g, t);
  return enumerate_barrier_sets(ctx);
}

BarrierFamily enumerate_barrier_sets_bruteforce(const Graph& g, const Theta& t, int max_vertices) {
  check_bound(g, std::min(max_vertices, 30), "brute-force barrier enumeration");
  ThetaContext ctx(g, t);
  const int n = g.order();
  std::vector<VertexSet> found;
  bool includes_empty = false;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    VertexMask xs(n);
    for (Vertex v = 0; v < n; ++v) {
      if ((bits >> v) & 1U) xs.set(v);
    }
    if (!is_barrier_set(ctx, xs)) continue;
    if (bits == 0) {
      includes_empty = true;
    } else {
      found.push_back(xs.to_set());
    }
  }
  return finish(std::move(found), includes_empty, n);
}

ElementaryRoutes elementary_routes(const Graph& g, const Theta& t, int max_vertices) {
  check_bound(g, max_vertices, "elementary test");
  ThetaContext ctx(g, t);
  const VertexMask all = g.all();
  ElementaryRoutes routes;

  bool p_empty = true;
  bool pn_empty = true;
  all.for_each([&](Vertex v) {
    DpanPartition sub = dpan_partition(ctx, all.without(v));
    p_empty = p_empty && sub.positive.empty();
    pn_empty = pn_empty && sub.positive.empty() && sub.neutral.empty();
  });
  routes.by_definition = is_super_positive(ctx, all) && p_empty;
  // For a single vertex G\v is empty, so the class condition holds vacuously.
  routes.by_neighbourhood_classes = ctx.mult(all) == 0 && pn_empty && g.order() != 1;
  routes.by_barrier_partition = enumerate_barrier_sets(ctx).is_partition;
  return routes;
}

bool is_elementary(const Graph& g, const Theta& t, int max_vertices) {
  ElementaryRoutes r = elementary_routes(g, t, max_vertices);
  if (!r.agree()) {
    throw InvariantError("elementary routes disagree: definition=" + std::to_string(r.by_definition) +
                         " classes=" + std::to_string(r.by_neighbourhood_classes) +
                         " partition=" + std::to_string(r.by_barrier_partition));
  }
  return r.by_definition;
}

BarrierWitness barrier_partition_witness(const Graph& g, const Theta& t, const VertexSet& s) {
  if (!is_elementary(g, t)) throw PreconditionError("barrier_partition_witness needs a theta-elementary graph");
  ThetaContext ctx(g, t);
  const VertexMask sm = VertexMask::from(g.order(), s);
  const VertexMask rest = g.all() - sm;

  BarrierWitness w;
  auto comps = component_masks(g, rest);
  w.components = static_cast<int>(comps.size());
  w.all_critical = std::all_of(comps.begin(), comps.end(),
                               [&](const VertexMask& c) { return ctx.is_critical_component(c); });
  w.member = w.components == static_cast<int>(s.size()) && w.all_critical;

  const bool barrier = !s.empty() && is_barrier_set(ctx, sm);
  if (barrier != w.member) {
    throw InvariantError("component count disagrees with the barrier definition");
  }
  if (!w.member) return w;

  const auto& members = s.members();
  const int k = static_cast<int>(members.size());
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << std::min(k, 62)); ++bits) {
    if (std::popcount(bits) > kWitnessSubsetCap) continue;
    VertexMask x(g.order());
    for (int i = 0; i < k; ++i) {
      if ((bits >> i) & 1U) x.set(members[i]);
    }
    DpanPartition sub = dpan_partition(ctx, g.all() - x);
    if (sub.special != (sm - x).to_set() || !sub.positive.empty() || !sub.neutral.empty()) {
      throw InvariantError("deletion structure fails for a subset of a barrier set");
    }
    ++w.subsets_checked;
  }
  return w;
}

}  // namespace thetamatch

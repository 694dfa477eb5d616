#include "thetamatch/classify.hpp"

#include <string>

#include "thetamatch/errors.hpp"

namespace thetamatch {

std::string_view to_string(VertexKind k) {
  switch (k) {
    case VertexKind::Essential: return "essential";
    case VertexKind::Neutral: return "neutral";
    case VertexKind::Positive: return "positive";
  }
  return "?";
}

std::vector<VertexClass> classify_vertices(ThetaContext& ctx, const VertexMask& within) {
  const int n = ctx.graph().order();
  const int base = ctx.mult(within);
  std::vector<VertexClass> classes(n, VertexClass{VertexKind::Neutral, false});
  VertexMask essential(n);
  within.for_each([&](Vertex v) {
    int after = ctx.mult(within.without(v));
    if (after == base - 1) {
      classes[v].kind = VertexKind::Essential;
      essential.set(v);
    } else if (after == base) {
      classes[v].kind = VertexKind::Neutral;
    } else if (after == base + 1) {
      classes[v].kind = VertexKind::Positive;
    } else {
      throw InvariantError("interlacing violated at vertex " + std::to_string(v) + ": mult " +
                           std::to_string(base) + " -> " + std::to_string(after));
    }
  });
  within.for_each([&](Vertex v) {
    if (classes[v].kind == VertexKind::Essential) return;
    if (ctx.graph().neighbor_mask(v).intersects(essential)) {
      classes[v].special = true;
      if (classes[v].kind != VertexKind::Positive) {
        throw InvariantError("special vertex " + std::to_string(v) + " is not positive");
      }
    }
  });
  return classes;
}

DpanPartition dpan_partition(ThetaContext& ctx, const VertexMask& within) {
  auto classes = classify_vertices(ctx, within);
  std::vector<Vertex> d, a, p, nn;
  within.for_each([&](Vertex v) {
    const auto& c = classes[v];
    if (c.kind == VertexKind::Essential) {
      d.push_back(v);
    } else if (c.special) {
      a.push_back(v);
    } else if (c.kind == VertexKind::Positive) {
      p.push_back(v);
    } else {
      nn.push_back(v);
    }
  });
  DpanPartition out{VertexSet(d), VertexSet(a), VertexSet(p), VertexSet(nn), ctx.mult(within)};
  if (out.mult == 0 && !(out.essential.empty() && out.special.empty())) {
    throw InvariantError("mult 0 but essential or special vertices present");
  }
  if (ctx.theta().is_zero() && !out.neutral.empty()) {
    throw InvariantError("0-neutral vertex found");
  }
  return out;
}

bool is_super_positive(ThetaContext& ctx, const VertexMask& within) {
  if (ctx.mult(within) != 0) return false;
  bool ok = true;
  within.for_each([&](Vertex v) {
    if (ok && ctx.mult(within.without(v)) != 1) ok = false;
  });
  return ok;
}

VertexClass classify_vertex(const Graph& g, const Theta& t, Vertex u) {
  if (!g.has_vertex(u)) throw InputError("vertex " + std::to_string(u) + " not in graph");
  ThetaContext ctx(g, t);
  const VertexMask all = g.all();
  const int base = ctx.mult(all);
  auto kind_of = [&](Vertex v) {
    int after = ctx.mult(all.without(v));
    if (after == base - 1) return VertexKind::Essential;
    return after == base ? VertexKind::Neutral : VertexKind::Positive;
  };
  VertexClass c{kind_of(u), false};
  if (c.kind != VertexKind::Essential) {
    for (Vertex w : g.neighbors(u)) {
      if (kind_of(w) == VertexKind::Essential) {
        c.special = true;
        break;
      }
    }
  }
  return c;
}

std::vector<VertexClass> classify_all(const Graph& g, const Theta& t) {
  ThetaContext ctx(g, t);
  return classify_vertices(ctx, g.all());
}

DpanPartition dpan_partition(const Graph& g, const Theta& t) {
  ThetaContext ctx(g, t);
  return dpan_partition(ctx, g.all());
}

bool is_theta_critical(const Graph& g, const Theta& t) {
  ThetaContext ctx(g, t);
  const VertexMask all = g.all();
  if (ctx.mult(all) != 1) return false;
  bool critical = true;
  all.for_each([&](Vertex v) {
    if (critical && ctx.mult(all.without(v)) != 0) critical = false;
  });
  return critical;
}

int critical_component_count(const Graph& g, const Theta& t) {
  ThetaContext ctx(g, t);
  return ctx.critical_components(g.all());
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvariantError("Gallai-Edmonds check failed: " + what);
}

}  // namespace

GallaiEdmondsReport gallai_edmonds(const Graph& g, const Theta& t) {
  ThetaContext ctx(g, t);
  const VertexMask all = g.all();
  GallaiEdmondsReport report;
  report.partition = dpan_partition(ctx, all);
  const auto& part = report.partition;

  const VertexMask special = VertexMask::from(g.order(), part.special);
  const VertexMask rest = all - special;

  DpanPartition after = dpan_partition(ctx, rest);
  require(after.special.empty(), "A(G\\A) is not empty");
  require(after.essential == part.essential, "D(G\\A) != D(G)");
  require(after.positive == part.positive, "P(G\\A) != P(G)");
  require(after.neutral == part.neutral, "N(G\\A) != N(G)");

  VertexMask critical_union(g.order());
  for (const auto& comp : component_masks(g, rest)) {
    bool critical = ctx.is_critical_component(comp);
    if (critical) {
      ++report.critical_count;
      critical_union |= comp;
    } else {
      require(ctx.mult(comp) == 0, "non-critical component with mult > 0");
    }
    report.components_after_special.push_back({g.induced(comp), critical});
  }
  require(report.critical_count == static_cast<int>(part.special.size()) + part.mult,
          "critical component count != |A| + mult");
  require(critical_union.to_set() == part.essential, "critical components do not cover D exactly");
  return report;
}

}  // namespace thetamatch

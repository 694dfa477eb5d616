#include "thetamatch/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "thetamatch/matching.hpp"

namespace thetamatch {

namespace {

std::string set_text(const VertexSet& s) {
  std::string out = "{";
  for (Vertex v : s) out += (out.size() > 1 ? ", " : "") + std::to_string(v);
  return out + "}";
}

std::string hex(std::uint64_t h) {
  char buf[19];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json set_json(const VertexSet& s) { return Json(s.members()); }

std::string class_name(const VertexClass& c) {
  if (c.special) return "special";
  return std::string(to_string(c.kind));
}

}  // namespace

std::uint64_t edge_checksum(std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  std::uint64_t h = 1469598103934665603ULL;
  for (const Edge& e : edges) {
    for (unsigned char c : std::to_string(e.u) + "-" + std::to_string(e.v) + ";") {
      h ^= c;
      h *= 1099511628211ULL;
    }
  }
  return h;
}

DecompositionReport decomposition_report(const Graph& input, const Theta& t) {
  const Graph g = input.relabeled_identity();
  BaseDecomposition d = decompose_to_base(g, t);
  DecompositionReport out;
  out.removed_edges = d.removed_edges;
  std::vector<Edge> rejoined = d.removed_edges;
  for (const Graph& comp : d.base_components) {
    out.components_graph6.push_back(serialize_graph(comp.relabeled_identity(), GraphFormat::Graph6));
    std::vector<Vertex> vs;
    for (Vertex v = 0; v < comp.order(); ++v) vs.push_back(input.label(comp.label(v)));
    out.components_vertices.push_back(std::move(vs));
    for (const Edge& e : comp.edges()) rejoined.emplace_back(comp.label(e.u), comp.label(e.v));
  }
  out.input_checksum = edge_checksum(g.edges());
  out.rejoined_checksum = edge_checksum(rejoined);
  std::sort(rejoined.begin(), rejoined.end());
  out.rejoin_matches = out.input_checksum == out.rejoined_checksum && rejoined == g.edges();
  for (Edge& e : out.removed_edges) e = Edge(input.label(e.u), input.label(e.v));
  return out;
}

AnalysisReport analyze(const Graph& g, const Theta& t, const AnalysisOptions& opts) {
  AnalysisReport r;
  ThetaContext ctx(g, t);
  r.order = g.order();
  r.size = g.size();
  r.components = static_cast<int>(component_masks(g, g.all()).size());
  r.theta = t.to_string();
  r.mult = ctx.mult();
  r.polynomial = to_string(ctx.poly(g.all()));

  auto relabel = [&](const VertexSet& s) {
    std::vector<Vertex> out;
    for (Vertex v : s) out.push_back(g.label(v));
    return VertexSet(std::move(out));
  };
  DpanPartition p = dpan_partition(ctx, g.all());
  r.partition = {relabel(p.essential), relabel(p.special), relabel(p.positive), relabel(p.neutral), p.mult};
  r.classes = classify_vertices(ctx, g.all());
  r.super_positive = is_super_positive(ctx, g.all());

  if (g.order() <= opts.max_vertices) {
    r.elementary = is_elementary(g, t, opts.max_vertices);
    r.base = is_base(g, t, opts.max_vertices);
    if (opts.barriers) {
      BarrierFamily fam = enumerate_barrier_sets(ctx);
      for (VertexSet& s : fam.sets) s = relabel(s);
      std::sort(fam.sets.begin(), fam.sets.end());
      r.barriers = std::move(fam);
    }
    if (opts.decomposition && r.super_positive) r.decomposition = decomposition_report(g, t);
  }
  return r;
}

Json to_json(const DpanPartition& p) {
  Json j;
  j["essential"] = set_json(p.essential);
  j["special"] = set_json(p.special);
  j["positive"] = set_json(p.positive);
  j["neutral"] = set_json(p.neutral);
  return j;
}

Json to_json(const std::vector<VertexClass>& classes) {
  Json j = Json::array();
  for (std::size_t v = 0; v < classes.size(); ++v) {
    j.push_back({{"vertex", v}, {"class", class_name(classes[v])}});
  }
  return j;
}

Json to_json(const BarrierFamily& fam) {
  Json sets = Json::array();
  for (const VertexSet& s : fam.sets) sets.push_back(set_json(s));
  return {{"includes_empty", fam.includes_empty}, {"sets", sets}, {"is_partition", fam.is_partition}};
}

Json to_json(const DecompositionReport& d) {
  Json removed = Json::array();
  for (const Edge& e : d.removed_edges) removed.push_back({e.u, e.v});
  Json comps = Json::array();
  for (std::size_t i = 0; i < d.components_graph6.size(); ++i) {
    comps.push_back({{"graph6", d.components_graph6[i]}, {"vertices", d.components_vertices[i]}});
  }
  return {{"removed_edges", removed},
          {"base_components", comps},
          {"input_checksum", hex(d.input_checksum)},
          {"rejoined_checksum", hex(d.rejoined_checksum)},
          {"rejoin_matches", d.rejoin_matches}};
}

Json to_json(const AnalysisReport& r) {
  Json j;
  j["graph"] = {{"n", r.order}, {"m", r.size}, {"components", r.components}};
  j["theta"] = r.theta;
  j["mult"] = r.mult;
  j["polynomial"] = r.polynomial;
  j["partition"] = to_json(r.partition);
  j["classes"] = to_json(r.classes);
  j["super_positive"] = r.super_positive;
  j["elementary"] = r.elementary ? Json(*r.elementary) : Json(nullptr);
  j["base"] = r.base ? Json(*r.base) : Json(nullptr);
  j["barriers"] = r.barriers ? to_json(*r.barriers) : Json(nullptr);
  j["decomposition"] = r.decomposition ? to_json(*r.decomposition) : Json(nullptr);
  return j;
}

std::string to_text(const DpanPartition& p) {
  std::ostringstream out;
  out << "D (essential): " << set_text(p.essential) << "\n"
      << "A (special):   " << set_text(p.special) << "\n"
      << "P (positive):  " << set_text(p.positive) << "\n"
      << "N (neutral):   " << set_text(p.neutral) << "\n";
  return out.str();
}

std::string to_text(const std::vector<VertexClass>& classes) {
  std::ostringstream out;
  for (std::size_t v = 0; v < classes.size(); ++v) out << v << "\t" << class_name(classes[v]) << "\n";
  return out.str();
}

std::string to_text(const BarrierFamily& fam) {
  std::ostringstream out;
  out << "barrier sets: " << fam.sets.size() << (fam.includes_empty ? " nonempty (empty set is a barrier)" : " nonempty")
      << "\n";
  for (const VertexSet& s : fam.sets) out << "  " << set_text(s) << "\n";
  out << "partition of V: " << (fam.is_partition ? "yes" : "no") << "\n";
  return out.str();
}

std::string to_text(const DecompositionReport& d) {
  std::ostringstream out;
  out << "extreme edges removed: " << d.removed_edges.size() << "\n";
  for (const Edge& e : d.removed_edges) out << "  " << e.u << " - " << e.v << "\n";
  out << "base components: " << d.components_graph6.size() << "\n";
  for (std::size_t i = 0; i < d.components_graph6.size(); ++i) {
    out << "  " << d.components_graph6[i] << "  vertices";
    for (Vertex v : d.components_vertices[i]) out << " " << v;
    out << "\n";
  }
  out << "rejoin checksum: " << hex(d.rejoined_checksum) << (d.rejoin_matches ? " (matches input)" : " (MISMATCH)")
      << "\n";
  return out.str();
}

std::string to_text(const AnalysisReport& r) {
  auto flag = [](const std::optional<bool>& b) { return b ? (*b ? "yes" : "no") : "skipped"; };
  std::ostringstream out;
  out << "graph: n=" << r.order << " m=" << r.size << " components=" << r.components << "\n"
      << "theta: " << r.theta << "\n"
      << "mu(G, x) = " << r.polynomial << "\n"
      << "mult: " << r.mult << "\n"
      << to_text(r.partition) << "super positive: " << (r.super_positive ? "yes" : "no") << "\n"
      << "elementary: " << flag(r.elementary) << "\n"
      << "base: " << flag(r.base) << "\n";
  if (r.barriers) out << to_text(*r.barriers);
  if (r.decomposition) out << to_text(*r.decomposition);
  return out.str();
}

}  // namespace thetamatch

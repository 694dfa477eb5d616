#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "thetamatch/barrier.hpp"
#include "thetamatch/classify.hpp"
#include "thetamatch/graph.hpp"
#include "thetamatch/poly.hpp"
#include "thetamatch/superpos.hpp"

namespace thetamatch {

using Json = nlohmann::ordered_json;

struct DecompositionReport {
  std::vector<Edge> removed_edges;
  /// graph6 of each base component.
  std::vector<std::string> components_graph6;
  /// Input vertices of each base component, in component order.
  std::vector<std::vector<Vertex>> components_vertices;
  std::uint64_t input_checksum = 0;
  std::uint64_t rejoined_checksum = 0;
  bool rejoin_matches = false;
};

struct AnalysisOptions {
  bool barriers = true;
  bool decomposition = true;
  /// Barrier-based answers (elementary, base, family) are skipped above this.
  int max_vertices = kDefaultEnumerationBound;
};

struct AnalysisReport {
  int order = 0;
  int size = 0;
  int components = 0;
  std::string theta;
  int mult = 0;
  std::string polynomial;
  /// In the input's vertex numbering.
  DpanPartition partition;
  std::vector<VertexClass> classes;
  bool super_positive = false;
  std::optional<bool> elementary;
  std::optional<bool> base;
  std::optional<BarrierFamily> barriers;
  std::optional<DecompositionReport> decomposition;
};

/// FNV-1a (64 bit) over the sorted edge list written as "u-v;".
std::uint64_t edge_checksum(std::vector<Edge> edges);

DecompositionReport decomposition_report(const Graph& g, const Theta& t);
AnalysisReport analyze(const Graph& g, const Theta& t, const AnalysisOptions& opts = {});

Json to_json(const DpanPartition& p);
Json to_json(const std::vector<VertexClass>& classes);
Json to_json(const BarrierFamily& fam);
Json to_json(const DecompositionReport& d);
Json to_json(const AnalysisReport& r);

std::string to_text(const DpanPartition& p);
std::string to_text(const std::vector<VertexClass>& classes);
std::string to_text(const BarrierFamily& fam);
std::string to_text(const DecompositionReport& d);
std::string to_text(const AnalysisReport& r);

}  // namespace thetamatch

#include "thetamatch/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>
#include <utility>

#include "thetamatch/errors.hpp"

namespace thetamatch {

Edge::Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {
  if (a == b) throw InputError("edge endpoints must differ (loop at " + std::to_string(a) + ")");
}

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(std::initializer_list<Vertex> vs) : VertexSet(std::vector<Vertex>(vs)) {}

VertexSet::VertexSet(std::vector<Vertex> vs) : members_(std::move(vs)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

// --------------------------------------------------------------- VertexMask

VertexMask VertexMask::full(int universe) {
  VertexMask m(universe);
  for (Vertex v = 0; v < universe; ++v) m.set(v);
  return m;
}

int VertexMask::count() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

bool VertexMask::none() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

Vertex VertexMask::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return static_cast<Vertex>(w * 64 + std::countr_zero(words_[w]));
  }
  return -1;
}

bool VertexMask::intersects(const VertexMask& o) const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & o.words_[w]) != 0) return true;
  }
  return false;
}

VertexMask& VertexMask::operator&=(const VertexMask& o) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
  return *this;
}

VertexMask& VertexMask::operator|=(const VertexMask& o) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
  return *this;
}

VertexMask& VertexMask::operator-=(const VertexMask& o) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~o.words_[w];
  return *this;
}

std::vector<Vertex> VertexMask::to_vector() const {
  std::vector<Vertex> out;
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

VertexMask VertexMask::from(int universe, const VertexSet& s) {
  VertexMask m(universe);
  for (Vertex v : s) {
    if (v < 0 || v >= universe) throw InputError("vertex " + std::to_string(v) + " not in graph");
    m.set(v);
  }
  return m;
}

std::size_t VertexMask::hash() const {
  // splitmix-style mixing per word
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(universe_);
  for (auto w : words_) {
    std::uint64_t z = w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    h ^= z ^ (z >> 31);
  }
  return static_cast<std::size_t>(h);
}

// -------------------------------------------------------------------- Graph

Graph::Graph(int n) {
  if (n < 0) throw InputError("negative vertex count");
  adj_.resize(n);
  labels_.resize(n);
  std::iota(labels_.begin(), labels_.end(), 0);
  rebuild_masks();
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) {
    if (!has_vertex(e.u) || !has_vertex(e.v)) {
      throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") references a vertex outside 0.." + std::to_string(n - 1));
    }
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& nb : adj_) {
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
      throw InputError("parallel edge in input");
    }
  }
  edge_count_ = static_cast<int>(edges.size());
  rebuild_masks();
}

void Graph::rebuild_masks() {
  adj_mask_.assign(adj_.size(), VertexMask(order()));
  for (Vertex v = 0; v < order(); ++v) {
    for (Vertex w : adj_[v]) adj_mask_[v].set(w);
  }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!has_vertex(u) || !has_vertex(v)) return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Vertex Graph::find_label(Vertex l) const {
  auto it = std::find(labels_.begin(), labels_.end(), l);
  return it == labels_.end() ? -1 : static_cast<Vertex>(it - labels_.begin());
}

Graph Graph::with_labels(std::vector<Vertex> labels) const {
  if (labels.size() != adj_.size()) throw InputError("label map size does not match vertex count");
  Graph g = *this;
  g.labels_ = std::move(labels);
  return g;
}

Graph Graph::relabeled_identity() const {
  std::vector<Vertex> ids(order());
  std::iota(ids.begin(), ids.end(), 0);
  return with_labels(std::move(ids));
}

Graph Graph::induced(const VertexMask& keep) const {
  std::vector<Vertex> index(order(), -1);
  std::vector<Vertex> survivors = keep.to_vector();
  for (std::size_t i = 0; i < survivors.size(); ++i) index[survivors[i]] = static_cast<Vertex>(i);

  std::vector<Edge> es;
  for (Vertex u : survivors) {
    for (Vertex v : adj_[u]) {
      if (u < v && index[v] >= 0) es.emplace_back(index[u], index[v]);
    }
  }
  Graph g(static_cast<int>(survivors.size()), es);
  for (std::size_t i = 0; i < survivors.size(); ++i) g.labels_[i] = labels_[survivors[i]];
  return g;
}

// ------------------------------------------------------------------ mutation

Graph delete_vertices(const Graph& g, const VertexSet& xs) {
  VertexMask drop = VertexMask::from(g.order(), xs);
  return g.induced(g.all() - drop);
}

Graph delete_vertex(const Graph& g, Vertex v) { return delete_vertices(g, VertexSet{v}); }

Graph delete_edge(const Graph& g, Edge e) {
  if (!g.has_edge(e.u, e.v)) {
    throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") not in graph");
  }
  std::vector<Edge> es = g.edges();
  es.erase(std::find(es.begin(), es.end(), e));
  return Graph(g.order(), es).with_labels(g.labels());
}

Graph add_edge(const Graph& g, Vertex u, Vertex v) {
  if (!g.has_vertex(u) || !g.has_vertex(v)) throw InputError("add_edge: vertex not in graph");
  Edge e(u, v);
  if (g.has_edge(u, v)) {
    throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") already present");
  }
  std::vector<Edge> es = g.edges();
  es.push_back(e);
  return Graph(g.order(), es).with_labels(g.labels());
}

Graph add_edges(const Graph& g, std::span<const Edge> es) {
  Graph out = g;
  for (const Edge& e : es) out = add_edge(out, e.u, e.v);
  return out;
}

// -------------------------------------------------------------- components

std::vector<VertexMask> component_masks(const Graph& g, const VertexMask& within) {
  std::vector<VertexMask> out;
  VertexMask rest = within;
  while (rest.any()) {
    VertexMask comp(g.order());
    comp.set(rest.first());
    VertexMask frontier = comp;
    while (frontier.any()) {
      VertexMask next(g.order());
      frontier.for_each([&](Vertex v) { next |= g.neighbor_mask(v); });
      next &= rest;
      next -= comp;
      comp |= next;
      frontier = std::move(next);
    }
    rest -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<Graph> connected_components(const Graph& g) {
  std::vector<Graph> out;
  for (const auto& m : component_masks(g, g.all())) out.push_back(g.induced(m));
  return out;
}

bool is_connected(const Graph& g) { return component_masks(g, g.all()).size() <= 1; }

bool is_forest(const Graph& g) {
  auto comps = component_masks(g, g.all());
  return g.size() == g.order() - static_cast<int>(comps.size());
}

bool is_independent_set(const Graph& g, const VertexSet& xs) {
  for (auto i = xs.begin(); i != xs.end(); ++i) {
    for (auto j = std::next(i); j != xs.end(); ++j) {
      if (g.has_edge(*i, *j)) return false;
    }
  }
  return true;
}

// ------------------------------------------------------------------- paths

namespace {

void extend_paths(const Graph& g, Vertex target, std::vector<Vertex>& path, std::vector<char>& on_path,
                  std::vector<std::vector<Vertex>>& out) {
  Vertex tip = path.back();
  if (tip == target) {
    out.push_back(path);
    return;
  }
  for (Vertex w : g.neighbors(tip)) {
    if (on_path[w]) continue;
    on_path[w] = 1;
    path.push_back(w);
    extend_paths(g, target, path, on_path, out);
    path.pop_back();
    on_path[w] = 0;
  }
}

}  // namespace

std::vector<std::vector<Vertex>> enumerate_paths(const Graph& g, Vertex u, Vertex v) {
  if (!g.has_vertex(u) || !g.has_vertex(v)) throw InputError("enumerate_paths: vertex not in graph");
  if (u == v) throw InputError("enumerate_paths: endpoints must differ");
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> path{u};
  std::vector<char> on_path(g.order(), 0);
  on_path[u] = 1;
  extend_paths(g, v, path, on_path, out);
  return out;
}

// -------------------------------------------------------------- generators

Graph path_graph(int n) {
  if (n < 1) throw InputError("path_graph needs n >= 1");
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph(n, es);
}

Graph cycle_graph(int n) {
  if (n < 3) throw InputError("cycle_graph needs n >= 3");
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return Graph(n, es);
}

Graph complete_graph(int n) {
  if (n < 1) throw InputError("complete_graph needs n >= 1");
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return Graph(n, es);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> es = a.edges();
  for (const Edge& e : b.edges()) es.emplace_back(e.u + a.order(), e.v + a.order());
  return Graph(a.order() + b.order(), es);
}

Graph figure_graph(Figure f) {
  switch (f) {
    case Figure::Fig1:
      // C6 on labels 1..6, C3 on 7..9, bridge 6-7.
      return Graph(9, {{0, 1}, {0, 2}, {1, 3}, {3, 5}, {5, 4}, {4, 2}, {5, 6}, {6, 7}, {6, 8}, {7, 8}});
    case Figure::Fig3:
      // u1..u6 -> 0..5. The 6-cycle u1 u4 u6 u2 u3 u5 with the chord u3u4.
      return Graph(6, {{0, 3}, {0, 4}, {1, 2}, {1, 5}, {2, 3}, {2, 4}, {3, 5}});
    case Figure::Fig5: {
      // C9 on 1..9 with the chord (1,4).
      Graph g = cycle_graph(9);
      return add_edge(g, 0, 3);
    }
    case Figure::Fig6:
      // C9 on 1..9, the 6-cycle 10 11 12 15 14 13, joined by (9,13) and (6,12).
      return Graph(15, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 0},
                        {9, 10}, {10, 11}, {11, 14}, {14, 13}, {13, 12}, {12, 9},
                        {8, 12}, {5, 11}});
  }
  throw InputError("unknown figure");
}

Figure parse_figure(std::string_view name) {
  if (name == "fig1") return Figure::Fig1;
  if (name == "fig3") return Figure::Fig3;
  if (name == "fig5") return Figure::Fig5;
  if (name == "fig6") return Figure::Fig6;
  throw InputError("unknown figure '" + std::string(name) + "' (expected fig1, fig3, fig5, fig6)");
}

namespace {

int parse_size_suffix(std::string_view name) {
  int n = 0;
  auto tail = name.substr(1);
  auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), n);
  if (ec != std::errc() || ptr != tail.data() + tail.size() || tail.empty()) {
    throw InputError("bad graph name '" + std::string(name) + "'");
  }
  return n;
}

Graph single_named_graph(std::string_view name) {
  if (name.starts_with("fig")) return figure_graph(parse_figure(name));
  if (name.empty()) throw InputError("empty graph name");
  switch (name.front()) {
    case 'C': return cycle_graph(parse_size_suffix(name));
    case 'P': return path_graph(parse_size_suffix(name));
    case 'K': return complete_graph(parse_size_suffix(name));
    default: break;
  }
  throw InputError("bad graph name '" + std::string(name) + "' (expected C<n>, P<n>, K<n> or figN)");
}

}  // namespace

Graph named_graph(std::string_view name) {
  Graph g;
  std::size_t start = 0;
  bool first = true;
  while (start <= name.size()) {
    std::size_t plus = name.find('+', start);
    std::string_view part = name.substr(start, plus == std::string_view::npos ? name.npos : plus - start);
    Graph piece = single_named_graph(part);
    g = first ? piece : disjoint_union(g, piece);
    first = false;
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  return g;
}

// ----------------------------------------------------------------- formats

namespace {

struct Token {
  std::string_view text;
  int line;
  int column;
};

/// Whitespace tokens of each non-empty line with '#' comments stripped.
std::vector<std::vector<Token>> tokenize_lines(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.npos : eol - pos);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<Token> toks;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) toks.push_back({line.substr(i, j - i), line_no, static_cast<int>(i) + 1});
      i = j;
    }
    if (!toks.empty()) lines.push_back(std::move(toks));
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return lines;
}

long long to_int(const Token& t) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
    throw ParseError("expected an integer, got '" + std::string(t.text) + "'", t.line, t.column);
  }
  return v;
}

Graph parse_edge_list(std::string_view text) {
  auto lines = tokenize_lines(text);
  if (lines.empty()) throw ParseError("missing header line 'n m'", 1, 1);
  const auto& header = lines.front();
  if (header.size() != 2) {
    throw ParseError("header must be 'n m'", header.front().line, header.front().column);
  }
  long long n = to_int(header[0]);
  long long m = to_int(header[1]);
  if (n < 0) throw ParseError("negative vertex count", header[0].line, header[0].column);
  if (m < 0) throw ParseError("negative edge count", header[1].line, header[1].column);
  if (static_cast<long long>(lines.size()) - 1 != m) {
    const auto& last = lines.back().back();
    throw ParseError("header declares " + std::to_string(m) + " edges but " +
                         std::to_string(lines.size() - 1) + " edge lines follow",
                     last.line, last.column);
  }

  std::vector<Edge> es;
  std::vector<std::vector<char>> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& toks = lines[i];
    if (toks.size() != 2) throw ParseError("edge line must be 'u v'", toks.front().line, toks.front().column);
    long long u = to_int(toks[0]);
    long long v = to_int(toks[1]);
    for (const auto& [val, tok] : {std::pair{u, toks[0]}, std::pair{v, toks[1]}}) {
      if (val < 0 || val >= n) {
        throw ParseError("vertex " + std::to_string(val) + " out of range 0.." + std::to_string(n - 1),
                         tok.line, tok.column);
      }
    }
    if (u == v) throw ParseError("self-loop", toks[0].line, toks[0].column);
    Edge e(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (std::find(es.begin(), es.end(), e) != es.end()) {
      throw ParseError("duplicate edge", toks[0].line, toks[0].column);
    }
    es.push_back(e);
  }
  return Graph(static_cast<int>(n), es);
}

constexpr std::string_view kGraph6Header = ">>graph6<<";

Graph parse_graph6(std::string_view text) {
  // one graph, surrounding whitespace tolerated
  std::size_t b = 0;
  while (b < text.size() && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  std::size_t e = text.size();
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string_view s = text.substr(b, e - b);
  int col_base = static_cast<int>(b) + 1;
  if (s.starts_with(kGraph6Header)) {
    s.remove_prefix(kGraph6Header.size());
    col_base += static_cast<int>(kGraph6Header.size());
  }
  if (s.find('\n') != std::string_view::npos) {
    throw ParseError("graph6 input must hold exactly one graph", 1, col_base + static_cast<int>(s.find('\n')));
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) {
      throw ParseError("invalid graph6 byte", 1, col_base + static_cast<int>(i));
    }
  }
  if (s.empty()) throw ParseError("empty graph6 string", 1, col_base);

  std::size_t pos = 0;
  auto take = [&](std::size_t count) {
    if (pos + count > s.size()) throw ParseError("truncated graph6 size field", 1, col_base + static_cast<int>(s.size()));
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < count; ++i) v = (v << 6) | static_cast<std::uint64_t>(s[pos++] - 63);
    return v;
  };
  std::uint64_t n = 0;
  if (s[0] != 126) {
    n = take(1);
  } else if (s.size() > 1 && s[1] != 126) {
    pos = 1;
    n = take(3);
  } else {
    pos = 2;
    n = take(6);
  }
  if (n > 100000) throw ParseError("graph6 graph too large", 1, col_base);

  std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  if (s.size() - pos != need) {
    throw ParseError("graph6 body has " + std::to_string(s.size() - pos) + " bytes, expected " +
                         std::to_string(need),
                     1, col_base + static_cast<int>(pos));
  }
  std::vector<Edge> es;
  std::uint64_t k = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i, ++k) {
      int byte = s[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) es.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  for (; k < need * 6; ++k) {
    int byte = s[pos + k / 6] - 63;
    if ((byte >> (5 - k % 6)) & 1) {
      throw ParseError("nonzero graph6 padding bits", 1, col_base + static_cast<int>(pos + k / 6));
    }
  }
  return Graph(static_cast<int>(n), es);
}

std::string write_graph6(const Graph& g) {
  std::string out;
  auto n = static_cast<std::uint64_t>(g.order());
  auto put = [&](std::uint64_t v, int sextets) {
    for (int i = sextets - 1; i >= 0; --i) out.push_back(static_cast<char>(((v >> (6 * i)) & 63) + 63));
  };
  if (n <= 62) {
    put(n, 1);
  } else if (n <= 258047) {
    out.push_back(126);
    put(n, 3);
  } else {
    out.append(2, static_cast<char>(126));
    put(n, 6);
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < g.order(); ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

}  // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::EdgeList ? parse_edge_list(text) : parse_graph6(text);
}

Graph parse_graph_auto(std::string_view text) {
  auto lines = tokenize_lines(text);
  if (lines.empty()) throw ParseError("empty input", 1, 1);
  const auto& first = lines.front();
  bool numeric = std::all_of(first.begin(), first.end(), [](const Token& t) {
    return std::all_of(t.text.begin(), t.text.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == '-'; });
  });
  return parse_graph(text, numeric ? GraphFormat::EdgeList : GraphFormat::Graph6);
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
  return format == GraphFormat::EdgeList ? write_edge_list(g) : write_graph6(g);
}

}  // namespace thetamatch

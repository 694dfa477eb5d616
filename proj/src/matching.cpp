#include "thetamatch/matching.hpp"

#include "thetamatch/errors.hpp"

namespace thetamatch {

const IntPolynomial& SubgraphPolynomials::of(const VertexMask& subset) {
  if (auto it = memo_.find(subset); it != memo_.end()) return it->second;

  auto comps = component_masks(graph_, subset);
  if (comps.size() <= 1) return connected(subset);

  IntPolynomial product = IntPolynomial::constant(1);
  for (const auto& c : comps) product = product * connected(c);
  return memo_.emplace(subset, std::move(product)).first->second;
}

const IntPolynomial& SubgraphPolynomials::connected(const VertexMask& subset) {
  if (auto it = memo_.find(subset); it != memo_.end()) return it->second;

  IntPolynomial result;
  const int size = subset.count();
  if (size == 0) {
    result = IntPolynomial::constant(1);
  } else if (size == 1) {
    result = IntPolynomial::x();
  } else if (size == 2) {
    result = IntPolynomial{-1, 0, 1};
  } else {
    Vertex pivot = -1;
    int best = -1;
    subset.for_each([&](Vertex v) {
      int d = (graph_.neighbor_mask(v) & subset).count();
      if (d > best) {
        best = d;
        pivot = v;
      }
    });
    VertexMask rest = subset.without(pivot);
    result = of(rest).shifted(1);
    (graph_.neighbor_mask(pivot) & subset).for_each([&](Vertex i) { result -= of(rest.without(i)); });
  }
  return memo_.emplace(subset, std::move(result)).first->second;
}

int ThetaContext::mult(const VertexMask& s) {
  if (auto it = mult_.find(s); it != mult_.end()) return it->second;
  int m = root_multiplicity(poly(s), theta_);
  mult_.emplace(s, m);
  return m;
}

bool ThetaContext::is_critical_component(const VertexMask& s) {
  if (auto it = critical_.find(s); it != critical_.end()) return it->second;
  bool critical = mult(s) == 1;
  if (critical) {
    s.for_each([&](Vertex v) {
      if (critical && mult(s.without(v)) != 0) critical = false;
    });
  }
  critical_.emplace(s, critical);
  return critical;
}

int ThetaContext::critical_components(const VertexMask& s) {
  int count = 0;
  for (const auto& c : component_masks(graph(), s)) count += is_critical_component(c) ? 1 : 0;
  return count;
}

IntPolynomial matching_polynomial(const Graph& g) {
  SubgraphPolynomials polys(g);
  return polys.of(g.all());
}

MatchingProfile matching_counts_bruteforce(const Graph& g, int max_edges) {
  const auto edges = g.edges();
  if (static_cast<int>(edges.size()) > max_edges) {
    throw BoundError("brute-force matching oracle refused: " + std::to_string(edges.size()) +
                     " edges exceeds bound " + std::to_string(max_edges));
  }
  MatchingProfile counts(g.order() / 2 + 1, BigInt(0));
  std::vector<char> used(g.order(), 0);
  // Include/exclude each edge in turn; a branch is abandoned as soon as the
  // chosen edges stop being a matching, so every leaf is one matching.
  auto walk = [&](auto&& self, std::size_t i, int r) -> void {
    if (i == edges.size()) {
      ++counts[r];
      return;
    }
    self(self, i + 1, r);
    const Edge& e = edges[i];
    if (used[e.u] || used[e.v]) return;
    used[e.u] = used[e.v] = 1;
    self(self, i + 1, r + 1);
    used[e.u] = used[e.v] = 0;
  };
  walk(walk, 0, 0);
  return counts;
}

IntPolynomial polynomial_from_counts(const MatchingProfile& counts, int n) {
  std::vector<BigInt> cs(n + 1, BigInt(0));
  for (std::size_t r = 0; r < counts.size(); ++r) {
    if (counts[r] == 0) continue;
    cs[n - 2 * r] = (r % 2 == 0) ? counts[r] : BigInt(-counts[r]);
  }
  return IntPolynomial(std::move(cs));
}

int mult(const Graph& g, const Theta& t) { return root_multiplicity(matching_polynomial(g), t); }

bool heilmann_lieb_check(const Graph& g, Vertex u, Vertex v) {
  if (u == v) throw InputError("heilmann_lieb_check needs distinct vertices");
  SubgraphPolynomials polys(g);
  const VertexMask all = g.all();
  IntPolynomial lhs = polys.of(all.without(u)) * polys.of(all.without(v)) -
                      polys.of(all) * polys.of(all.without(u).without(v));
  IntPolynomial rhs;
  for (const auto& path : enumerate_paths(g, u, v)) {
    VertexMask rest = all;
    for (Vertex w : path) rest.reset(w);
    const IntPolynomial& p = polys.of(rest);
    rhs += p * p;
  }
  return lhs == rhs;
}

}  // namespace thetamatch

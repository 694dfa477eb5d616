#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "thetamatch/graph.hpp"
#include "thetamatch/poly.hpp"

namespace thetamatch {

/// Property checks over generated families and seeded random graphs.
namespace verify {

struct Options {
  int max_n = 10;
  std::uint64_t seed = 1;
  int cases = 100;
};

struct CheckResult {
  std::string name;
  int cases = 0;
  long checks = 0;
  /// One line per failing case: check, graph6, theta, what went wrong.
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const;
};

const std::vector<std::string>& suite_names();
/// Throws InputError for an unknown suite.
SuiteResult run_suite(std::string_view suite, const Options& opts);

// Individual checks (each one is part of exactly one suite).
CheckResult check_coefficients_vs_bruteforce(const Options& opts);
CheckResult check_edge_rule(const Options& opts);
CheckResult check_derivative_rule(const Options& opts);
CheckResult check_union_rule(const Options& opts);
CheckResult check_vertex_interlacing(const Options& opts);
CheckResult check_path_interlacing(const Options& opts);
CheckResult check_heilmann_lieb(const Options& opts);
CheckResult check_special_deletion_stability(const Options& opts);
CheckResult check_gallai_lemma(const Options& opts);
CheckResult check_gallai_edmonds_counts(const Options& opts);
CheckResult check_hamiltonian_special(const Options& opts);
CheckResult check_pruned_vs_bruteforce_barriers(const Options& opts);
CheckResult check_barrier_properties(const Options& opts);
CheckResult check_elementary_routes(const Options& opts);
CheckResult check_neutral_free_after_deletion(const Options& opts);
CheckResult check_adjacent_zero_pair(const Options& opts);
CheckResult check_decomposition_uniqueness(const Options& opts, int orders_per_graph = 50);
CheckResult check_tree_verdict(const Options& opts);
CheckResult check_path_values(const Options& opts);
CheckResult check_cycle_values(const Options& opts);
CheckResult check_cycle_elementary(const Options& opts);
CheckResult check_cycle_barriers(const Options& opts);
CheckResult check_vertex_transitive_roots(const Options& opts);

// Generators shared with the tests.
using Rng = std::mt19937_64;

/// G(n, p).
Graph random_graph(Rng& rng, int n, double p);
/// Uniform labelled tree via a Pruefer sequence.
Graph random_tree(Rng& rng, int n);
/// One of 0, 1, -1, 2, or a root of x^2-2, x^2-3, x^2-x-1.
Theta random_theta(Rng& rng);
/// 1-super positive graph built by joining two or three cycles from
/// {C3, C6, C9} through random 1-barrier sets; at most `max_n` vertices
/// (at least 6 is required).
Graph random_cycle_join(Rng& rng, int max_n);

}  // namespace verify
}  // namespace thetamatch

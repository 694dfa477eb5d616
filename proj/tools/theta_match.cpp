// theta-match: command-line front end for the thetamatch library.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "thetamatch/errors.hpp"
#include "thetamatch/report.hpp"
#include "thetamatch/verify.hpp"

namespace {

using namespace thetamatch;

enum Exit { kOk = 0, kVerifyFailed = 1, kParse = 2, kTheta = 3, kPrecondition = 4 };

struct GraphInput {
  std::string source;
  std::string name;
  std::string format = "auto";

  Graph load() const {
    if (!name.empty()) return named_graph(name);
    if (source.empty()) throw InputError("no input graph: give a file, '-' for stdin, or --graph NAME");
    std::string text;
    if (source == "-") {
      text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else if (std::filesystem::exists(source)) {
      std::ifstream in(source);
      if (!in) throw InputError("cannot read " + source);
      text.assign(std::istreambuf_iterator<char>(in), {});
    } else {
      // Not a file: accept a graph name such as C9 or fig1.
      return named_graph(source);
    }
    if (format == "edgelist") return parse_graph(text, GraphFormat::EdgeList);
    if (format == "graph6") return parse_graph(text, GraphFormat::Graph6);
    return parse_graph_auto(text);
  }
};

struct ThetaInput {
  std::string rational;
  std::string polynomial;

  Theta make() const {
    if (rational.empty() == polynomial.empty()) throw ThetaError("give exactly one of --theta and --theta-poly");
    return rational.empty() ? Theta::parse_polynomial(polynomial) : Theta::parse_rational(rational);
  }
};

void add_graph_options(CLI::App* cmd, GraphInput& in) {
  cmd->add_option("input", in.source, "graph file, '-' for stdin, or a graph name (C9, P4, K3, fig1, C6+C3)");
  cmd->add_option("--graph", in.name, "named graph instead of an input file");
  cmd->add_option("--input-format", in.format, "input format")
      ->check(CLI::IsMember({"auto", "edgelist", "graph6"}));
}

void add_theta_options(CLI::App* cmd, ThetaInput& t) {
  cmd->add_option("--theta", t.rational, "rational theta, e.g. 1 or -2/3");
  cmd->add_option("--theta-poly", t.polynomial, "square-free integer polynomial whose roots are theta, e.g. x^2-2");
}

void emit(const std::string& format, const Json& json, const std::string& text) {
  if (format == "json") {
    std::cout << json.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

Graph generate(const std::string& family, int n, double p, std::uint64_t seed) {
  verify::Rng rng(seed);
  if (family == "path") return path_graph(n);
  if (family == "cycle") return cycle_graph(n);
  if (family == "complete") return complete_graph(n);
  if (family == "random") return verify::random_graph(rng, n, p);
  if (family == "tree") return verify::random_tree(rng, n);
  if (family == "cycle-join") return verify::random_cycle_join(rng, n);
  return named_graph(family);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matching polynomial multiplicities, theta-barrier sets and base decompositions"};
  app.require_subcommand(1);

  GraphInput graph_in;
  ThetaInput theta_in;
  std::string format = "text";
  int bound = kDefaultEnumerationBound;

  auto graph_command = [&](const char* name, const char* help) {
    CLI::App* cmd = app.add_subcommand(name, help);
    add_graph_options(cmd, graph_in);
    add_theta_options(cmd, theta_in);
    cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--max-vertices", bound, "largest graph for barrier enumeration");
    return cmd;
  };
  CLI::App* analyze_cmd = graph_command("analyze", "full report for one graph");
  CLI::App* classify_cmd = graph_command("classify", "vertex classes and the DPAN partition");
  CLI::App* barriers_cmd = graph_command("barriers", "all theta-barrier sets");
  CLI::App* decompose_cmd = graph_command("decompose", "split a theta-super positive graph into theta-base graphs");

  CLI::App* verify_cmd = app.add_subcommand("verify", "run a property suite");
  std::string suite;
  verify::Options vopts;
  verify_cmd->add_option("--suite", suite, "suite name")->required()->check(CLI::IsMember(verify::suite_names()));
  verify_cmd->add_option("--max-n", vopts.max_n, "largest random graph");
  verify_cmd->add_option("--seed", vopts.seed, "random seed");
  verify_cmd->add_option("--cases", vopts.cases, "random cases per check");
  verify_cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

  CLI::App* generate_cmd = app.add_subcommand("generate", "print a generated graph");
  std::string family = "cycle";
  int gen_n = 6;
  double gen_p = 0.5;
  std::uint64_t gen_seed = 1;
  std::string out_format = "graph6";
  generate_cmd->add_option("--family", family, "path, cycle, complete, random, tree, cycle-join, or a graph name");
  generate_cmd->add_option("-n", gen_n, "number of vertices (upper bound for cycle-join)");
  generate_cmd->add_option("-p", gen_p, "edge probability for random graphs");
  generate_cmd->add_option("--seed", gen_seed, "random seed");
  generate_cmd->add_option("--output-format", out_format, "output format")
      ->check(CLI::IsMember({"graph6", "edgelist"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (verify_cmd->parsed()) {
      verify::SuiteResult r = verify::run_suite(suite, vopts);
      if (format == "json") {
        Json checks = Json::array();
        for (const auto& c : r.checks) {
          checks.push_back({{"name", c.name}, {"cases", c.cases}, {"checks", c.checks}, {"failures", c.failures}});
        }
        std::cout << Json{{"suite", r.suite}, {"passed", r.passed()}, {"checks", checks}}.dump(2) << "\n";
      } else {
        for (const auto& c : r.checks) {
          std::cout << (c.passed() ? "PASS " : "FAIL ") << c.name << "  cases=" << c.cases << " checks=" << c.checks
                    << "\n";
          for (const auto& f : c.failures) std::cout << "  counterexample: " << f << "\n";
        }
        std::cout << "suite " << r.suite << ": " << (r.passed() ? "passed" : "FAILED") << "\n";
      }
      return r.passed() ? kOk : kVerifyFailed;
    }

    if (generate_cmd->parsed()) {
      Graph g = generate(family, gen_n, gen_p, gen_seed);
      std::cout << serialize_graph(g, out_format == "graph6" ? GraphFormat::Graph6 : GraphFormat::EdgeList);
      if (out_format == "graph6") std::cout << "\n";
      return kOk;
    }

    Graph g;
    try {
      g = graph_in.load();
    } catch (const ParseError& e) {
      std::cerr << "parse error at line " << e.line() << ", column " << e.column() << ": " << e.what() << "\n";
      return kParse;
    } catch (const InputError& e) {
      std::cerr << "input error: " << e.what() << "\n";
      return kParse;
    }

    std::optional<Theta> theta;
    try {
      theta = theta_in.make();
    } catch (const std::exception& e) {
      std::cerr << "theta error: " << e.what() << "\n";
      return kTheta;
    }

    if (analyze_cmd->parsed()) {
      AnalysisOptions opts;
      opts.max_vertices = bound;
      AnalysisReport r = analyze(g, *theta, opts);
      emit(format, to_json(r), to_text(r));
    } else if (classify_cmd->parsed()) {
      ThetaContext ctx(g, *theta);
      DpanPartition p = dpan_partition(ctx, g.all());
      std::vector<VertexClass> classes = classify_vertices(ctx, g.all());
      Json j{{"theta", theta->to_string()}, {"mult", p.mult}, {"partition", to_json(p)}, {"classes", to_json(classes)}};
      emit(format, j, "mult: " + std::to_string(p.mult) + "\n" + to_text(p) + to_text(classes));
    } else if (barriers_cmd->parsed()) {
      BarrierFamily fam = enumerate_barrier_sets(g, *theta, bound);
      emit(format, to_json(fam), to_text(fam));
    } else if (decompose_cmd->parsed()) {
      if (!is_super_positive(g, *theta)) throw PreconditionError("input graph is not theta-super positive");
      DecompositionReport d = decomposition_report(g, *theta);
      emit(format, to_json(d), to_text(d));
    }
    return kOk;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kParse;
  } catch (const ThetaError& e) {
    std::cerr << "theta error: " << e.what() << "\n";
    return kTheta;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kPrecondition;
  } catch (const BoundError& e) {
    std::cerr << "size bound exceeded: " << e.what() << "\n";
    return kPrecondition;
  } catch (const InvariantError& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return kVerifyFailed;
  }
}

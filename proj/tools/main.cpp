#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cutbound/compose.hpp"
#include "cutbound/cutwidth.hpp"
#include "cutbound/generators.hpp"
#include "cutbound/io.hpp"
#include "cutbound/multigraph.hpp"
#include "cutbound/partition.hpp"
#include "cutbound/verify.hpp"

namespace {

// Exit codes: 0 ok, 1 verification failure, 2 parse/parameter error,
// 3 solver budget exceeded, 4 internal consistency check failed.
constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInternal = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
  } else {
    write_file(out_path, content);
  }
}

std::string ordering_line(const cutbound::Ordering& order) {
  std::ostringstream line;
  line << "ordering";
  for (cutbound::VertexId v : order) line << ' ' << v;
  return line.str();
}

// Loads a graph for cutwidth work, converting directed inputs to their
// underlying undirected multigraph with a notice line.
cutbound::Multigraph load_undirected(const std::string& path) {
  cutbound::Multigraph g = cutbound::parse_graph(read_file(path));
  if (g.is_directed()) {
    std::cout << "notice directed input converted to underlying undirected"
              << '\n';
    return cutbound::underlying_undirected(g);
  }
  return g;
}

int run_cutwidth(const std::string& graph_path,
                 const std::string& ordering_out, int budget) {
  const cutbound::Multigraph g = load_undirected(graph_path);
  const cutbound::CutwidthResult result = cutbound::exact_cutwidth(g, budget);
  std::cout << "cutwidth " << result.value << '\n'
            << ordering_line(result.witness) << '\n';
  if (!ordering_out.empty()) {
    std::ostringstream text;
    for (std::size_t i = 0; i < result.witness.size(); ++i) {
      if (i > 0) text << ' ';
      text << result.witness[i];
    }
    text << '\n';
    write_file(ordering_out, text.str());
  }
  return kExitOk;
}

int run_bound(const std::string& graph_path, const std::string& partition_path,
              bool use_scc, const std::string& method, int budget) {
  cutbound::Multigraph g = cutbound::parse_graph(read_file(graph_path));
  cutbound::VertexPartition p;
  if (use_scc) {
    if (!g.is_directed()) {
      throw std::invalid_argument("--scc requires a directed graph");
    }
    p = cutbound::scc_partition(g);
  } else {
    p = cutbound::parse_partition(read_file(partition_path), g.vertex_count());
  }
  if (g.is_directed()) {
    std::cout << "notice directed input converted to underlying undirected"
              << '\n';
    g = cutbound::underlying_undirected(g);
  }
  const cutbound::Ordering quotient_order =
      cutbound::exact_cutwidth(cutbound::quotient_multigraph(g, p), budget)
          .witness;
  const cutbound::BoundCertificate cert =
      method == "simple"
          ? cutbound::compose_simple_auto(g, p, quotient_order, budget)
          : cutbound::compose_theorem_auto(g, p, quotient_order, budget);
  std::cout << "method " << method << '\n'
            << "x " << cert.x << '\n'
            << "y " << cert.y << '\n'
            << "bound " << cert.bound() << '\n'
            << "achieved " << cert.achieved << '\n';
  for (std::size_t c = 0; c < cert.orientations.size(); ++c) {
    std::cout << "orientation " << c + 1 << ' '
              << (cert.orientations[c] == cutbound::ClassOrientation::forward
                      ? "forward"
                      : "reverse")
              << '\n';
  }
  std::cout << ordering_line(cert.ordering) << '\n';
  return kExitOk;
}

int run_verify(const std::string& suite, const cutbound::VerifyOptions& options) {
  const std::vector<cutbound::CheckResult> results =
      cutbound::run_suite(suite, options);
  int passed = 0;
  for (const cutbound::CheckResult& r : results) {
    if (r.pass) {
      ++passed;
      std::cout << "PASS " << r.name << '\n';
    } else {
      std::cout << "FAIL " << r.name;
      if (r.seed != 0) std::cout << " seed " << r.seed;
      std::cout << ": " << r.detail << '\n';
    }
  }
  std::cout << "checks " << passed << "/" << results.size() << " passed"
            << '\n';
  return passed == static_cast<int>(results.size()) ? kExitOk
                                                    : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cutbound: exact cutwidth, quotient multigraphs, and "
               "partition-based ordering bounds"};
  app.require_subcommand(1);

  // cutwidth
  std::string cw_graph, cw_ordering_out;
  int cw_budget = cutbound::kDefaultSolverBudget;
  CLI::App* cutwidth_cmd =
      app.add_subcommand("cutwidth", "Exact cutwidth of a graph file");
  cutwidth_cmd->add_option("graph", cw_graph, "graph file")->required();
  cutwidth_cmd->add_option("--ordering-out", cw_ordering_out,
                           "write the witness ordering to this file");
  cutwidth_cmd->add_option("--budget", cw_budget,
                           "largest connected component the solver accepts")
      ->check(CLI::Range(1, cutbound::kMaxSolverBudget));

  // bound
  std::string bd_graph, bd_partition, bd_method = "theorem";
  bool bd_scc = false;
  int bd_budget = cutbound::kDefaultSolverBudget;
  CLI::App* bound_cmd = app.add_subcommand(
      "bound", "Composed-ordering cutwidth bound from a vertex partition");
  bound_cmd->add_option("graph", bd_graph, "graph file")->required();
  CLI::Option* bd_partition_opt = bound_cmd->add_option(
      "--partition", bd_partition, "partition file (one class per line)");
  CLI::Option* bd_scc_opt = bound_cmd->add_flag(
      "--scc", bd_scc,
      "use the strongly connected components of a directed graph");
  bd_partition_opt->excludes(bd_scc_opt);
  bound_cmd->add_option("--method", bd_method,
                        "bound construction: 2x+y (simple) or 1.5x+y "
                        "(theorem)")
      ->check(CLI::IsMember({"simple", "theorem"}));
  bound_cmd->add_option("--budget", bd_budget, "solver budget")
      ->check(CLI::Range(1, cutbound::kMaxSolverBudget));

  // gen
  CLI::App* gen_cmd =
      app.add_subcommand("gen", "Generate one of the built-in families");
  gen_cmd->require_subcommand(1);
  int gen_x = 0, gen_y = 0, gen_n = 0, gen_classes = 1;
  std::uint64_t gen_seed = 0;
  std::int64_t gen_max_mult = 3;
  double gen_density = 0.5;
  std::string gen_out, gen_partition_out;

  auto add_output_flags = [&](CLI::App* sub, bool has_partition) {
    sub->add_option("--out", gen_out, "graph output file (default: stdout)");
    if (has_partition) {
      sub->add_option("--partition-out", gen_partition_out,
                      "partition output file");
    }
  };
  CLI::App* gen_lower_g_cmd = gen_cmd->add_subcommand(
      "lower-g", "5-vertex family with its 3-class partition");
  gen_lower_g_cmd->add_option("--x", gen_x, "even multiplicity parameter")
      ->required();
  gen_lower_g_cmd->add_option("--y", gen_y, "class multiplicity parameter")
      ->required();
  add_output_flags(gen_lower_g_cmd, true);

  CLI::App* gen_lower_k_cmd =
      gen_cmd->add_subcommand("lower-k", "4-vertex closed-form family");
  gen_lower_k_cmd->add_option("--x", gen_x, "even multiplicity parameter")
      ->required();
  gen_lower_k_cmd->add_option("--y", gen_y, "class multiplicity parameter")
      ->required();
  add_output_flags(gen_lower_k_cmd, false);

  CLI::App* gen_lower_h_cmd = gen_cmd->add_subcommand(
      "lower-h", "directed subdivided family with one nontrivial component");
  gen_lower_h_cmd->add_option("--x", gen_x, "even multiplicity parameter")
      ->required();
  gen_lower_h_cmd->add_option("--y", gen_y, "class multiplicity parameter")
      ->required();
  add_output_flags(gen_lower_h_cmd, false);

  CLI::App* gen_nolow_cmd = gen_cmd->add_subcommand(
      "nolow", "two directed cycles whose condensation width grows with n");
  gen_nolow_cmd->add_option("--n", gen_n, "cycle length (>= 3)")->required();
  add_output_flags(gen_nolow_cmd, false);

  CLI::App* gen_random_cmd = gen_cmd->add_subcommand(
      "random", "seeded random undirected multigraph with a partition");
  gen_random_cmd->add_option("--seed", gen_seed, "PRNG seed")->required();
  gen_random_cmd->add_option("--n", gen_n, "vertex count")->required();
  gen_random_cmd->add_option("--max-mult", gen_max_mult,
                             "largest edge multiplicity");
  gen_random_cmd->add_option("--density", gen_density,
                             "edge probability per vertex pair")
      ->check(CLI::Range(0.0, 1.0));
  gen_random_cmd->add_option("--classes", gen_classes,
                             "number of partition classes");
  add_output_flags(gen_random_cmd, true);

  // verify
  std::string vf_suite;
  cutbound::VerifyOptions vf_options;
  int vf_trials = -1, vf_max_n = -1;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Run a property-check suite; exit 0 iff every check passes");
  verify_cmd->add_option("suite", vf_suite, "one of the known suites")
      ->required()
      ->check(CLI::IsMember(cutbound::kSuiteNames));
  verify_cmd->add_option("--trials", vf_trials,
                         "trial count for the randomized suites");
  verify_cmd->add_option("--seed", vf_options.seed, "base seed");
  verify_cmd->add_option("--max-n", vf_max_n,
                         "largest random instance vertex count");
  verify_cmd->add_option("--budget", vf_options.budget, "solver budget")
      ->check(CLI::Range(1, cutbound::kMaxSolverBudget));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (cutwidth_cmd->parsed()) {
      return run_cutwidth(cw_graph, cw_ordering_out, cw_budget);
    }
    if (bound_cmd->parsed()) {
      if (!bd_scc && bd_partition.empty()) {
        throw std::invalid_argument(
            "bound requires --partition FILE or --scc");
      }
      return run_bound(bd_graph, bd_partition, bd_scc, bd_method, bd_budget);
    }
    if (gen_cmd->parsed()) {
      if (gen_lower_g_cmd->parsed()) {
        const cutbound::GeneratedInstance inst =
            cutbound::gen_lower_g(gen_x, gen_y);
        emit(cutbound::serialize_graph(inst.graph), gen_out);
        if (!gen_partition_out.empty()) {
          write_file(gen_partition_out,
                     cutbound::serialize_partition(inst.partition));
        }
      } else if (gen_lower_k_cmd->parsed()) {
        emit(cutbound::serialize_graph(cutbound::gen_lower_k(gen_x, gen_y)),
             gen_out);
      } else if (gen_lower_h_cmd->parsed()) {
        emit(cutbound::serialize_graph(cutbound::gen_lower_h(gen_x, gen_y)),
             gen_out);
      } else if (gen_nolow_cmd->parsed()) {
        emit(cutbound::serialize_graph(cutbound::gen_nolow_gn(gen_n)),
             gen_out);
      } else if (gen_random_cmd->parsed()) {
        if (gen_max_mult < 1) {
          throw std::invalid_argument("--max-mult must be >= 1");
        }
        const cutbound::GeneratedInstance inst = cutbound::gen_random(
            gen_seed, gen_n, gen_max_mult, gen_density, gen_classes);
        emit(cutbound::serialize_graph(inst.graph), gen_out);
        if (!gen_partition_out.empty()) {
          write_file(gen_partition_out,
                     cutbound::serialize_partition(inst.partition));
        }
      }
      return kExitOk;
    }
    if (verify_cmd->parsed()) {
      if (vf_trials >= 0) {
        vf_options.subdivision_trials = vf_trials;
        vf_options.composition_trials = vf_trials;
      }
      if (vf_max_n > 0) {
        vf_options.subdivision_max_n = vf_max_n;
        vf_options.composition_max_n = vf_max_n;
      }
      return run_verify(vf_suite, vf_options);
    }
  } catch (const cutbound::BudgetExceededError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const cutbound::InternalConsistencyError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const cutbound::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
  return kExitOk;
}

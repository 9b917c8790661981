// End-to-end checks that drive the installed CLI binary through std::system.
// argv[1] must be the path to the binary; prints one line per failed check
// and exits nonzero if any failed.
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cutbound/cutwidth.hpp"
#include "cutbound/generators.hpp"
#include "cutbound/io.hpp"
#include "cutbound/multigraph.hpp"

namespace fs = std::filesystem;
using namespace cutbound;

namespace {

std::string g_cli;
fs::path g_dir;
int g_failures = 0;

void expect(bool ok, const std::string& label) {
  if (!ok) {
    ++g_failures;
    std::cout << "FAIL " << label << '\n';
  }
}

struct RunResult {
  int code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const fs::path capture = g_dir / "capture.txt";
  const std::string command =
      "\"" + g_cli + "\" " + args + " > \"" + capture.string() + "\" 2>&1";
  const int status = std::system(command.c_str());
  RunResult result;
  if (WIFEXITED(status)) result.code = WEXITSTATUS(status);
  std::ifstream in(capture, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  result.output = buffer.str();
  return result;
}

void write_text(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Value of the first report line "<key> <value...>", or "" if absent.
std::string value_of(const std::string& output, const std::string& key) {
  std::istringstream lines(output);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.rfind(key + " ", 0) == 0) return line.substr(key.size() + 1);
  }
  return "";
}

Ordering parse_ordering(const std::string& output) {
  std::istringstream ids(value_of(output, "ordering"));
  Ordering order;
  VertexId v = 0;
  while (ids >> v) order.push_back(v);
  return order;
}

int count_lines_with_prefix(const std::string& output,
                            const std::string& prefix) {
  std::istringstream lines(output);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    if (line.rfind(prefix, 0) == 0) ++count;
  }
  return count;
}

void check_cutwidth_command() {
  const Multigraph k23 = gen_lower_k(2, 3);
  const fs::path graph = g_dir / "k23.graph";
  const fs::path ordering_out = g_dir / "k23.ordering";
  write_text(graph, serialize_graph(k23));

  RunResult r = run_cli("cutwidth " + graph.string() + " --ordering-out " +
                        ordering_out.string());
  expect(r.code == 0, "cutwidth exits 0 on a valid graph");
  expect(value_of(r.output, "cutwidth") == "6", "cutwidth value is 6");
  const Ordering witness = parse_ordering(r.output);
  expect(witness.size() == 4, "witness covers all four vertices");
  expect(ordering_cutwidth(k23, witness) == 6, "printed witness achieves 6");

  std::ostringstream joined;
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i > 0) joined << ' ';
    joined << witness[i];
  }
  joined << '\n';
  expect(read_text(ordering_out) == joined.str(),
         "--ordering-out mirrors the printed witness");

  const fs::path lone = g_dir / "lone.graph";
  write_text(lone, "undirected\n1\n");
  r = run_cli("cutwidth " + lone.string());
  expect(r.code == 0 && value_of(r.output, "cutwidth") == "0" &&
             value_of(r.output, "ordering") == "1",
         "single vertex gives cutwidth 0");

  const fs::path h = g_dir / "h23.graph";
  write_text(h, serialize_graph(gen_lower_h(2, 3)));
  r = run_cli("cutwidth " + h.string());
  expect(r.code == 0 && value_of(r.output, "cutwidth") == "6",
         "directed input is measured on its underlying graph");
  expect(count_lines_with_prefix(r.output, "notice ") == 1,
         "directed conversion prints a notice");
}

void check_error_exits() {
  RunResult r = run_cli("cutwidth " + (g_dir / "absent.graph").string());
  expect(r.code == 2, "missing graph file exits 2");

  const fs::path bad = g_dir / "bad.graph";
  write_text(bad, "undirected\n3\ne 1 9\n");
  r = run_cli("cutwidth " + bad.string());
  expect(r.code == 2, "malformed graph exits 2");

  const fs::path path6 = g_dir / "path6.graph";
  write_text(path6, "undirected\n6\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\n");
  r = run_cli("cutwidth " + path6.string() + " --budget 5");
  expect(r.code == 3, "component above the budget exits 3");
  r = run_cli("cutwidth " + path6.string() + " --budget 0");
  expect(r.code == 2, "budget below the accepted range exits 2");
  r = run_cli("cutwidth " + path6.string() + " --budget 27");
  expect(r.code == 2, "budget above the accepted range exits 2");

  r = run_cli("");
  expect(r.code == 2, "missing subcommand exits 2");
  r = run_cli("--help");
  expect(r.code == 0, "--help exits 0");
}

void check_bound_command() {
  const GeneratedInstance inst = gen_lower_g(2, 3);
  const fs::path graph = g_dir / "g23.graph";
  const fs::path partition = g_dir / "g23.partition";
  write_text(graph, serialize_graph(inst.graph));
  write_text(partition, serialize_partition(inst.partition));

  RunResult r = run_cli("bound " + graph.string() + " --partition " +
                        partition.string());
  expect(r.code == 0, "bound exits 0 with a partition file");
  expect(value_of(r.output, "method") == "theorem", "default method");
  expect(value_of(r.output, "x") == "2", "bound reports x");
  expect(value_of(r.output, "y") == "3", "bound reports y");
  expect(value_of(r.output, "bound") == "6", "composed bound is 6");
  expect(value_of(r.output, "achieved") == "6", "achieved width is 6");
  expect(count_lines_with_prefix(r.output, "orientation ") == 3,
         "one orientation line per class");
  const Ordering order = parse_ordering(r.output);
  expect(order.size() == 5 && ordering_cutwidth(inst.graph, order) == 6,
         "printed ordering re-evaluates to the achieved width");

  r = run_cli("bound " + graph.string() + " --partition " +
              partition.string() + " --method simple");
  expect(r.code == 0 && value_of(r.output, "bound") == "7" &&
             value_of(r.output, "achieved") == "6",
         "simple method reports the weaker 2x+y bound");

  const fs::path h = g_dir / "h23.graph";
  write_text(h, serialize_graph(gen_lower_h(2, 3)));
  r = run_cli("bound " + h.string() + " --scc");
  expect(r.code == 0 && value_of(r.output, "x") == "2" &&
             value_of(r.output, "y") == "3" &&
             value_of(r.output, "achieved") == "6",
         "--scc derives the partition from strongly connected components");
  const Ordering h_order = parse_ordering(r.output);
  expect(h_order.size() == 15 &&
             ordering_cutwidth(underlying_undirected(gen_lower_h(2, 3)),
                               h_order) == 6,
         "scc bound ordering covers the subdivided graph");

  r = run_cli("bound " + graph.string());
  expect(r.code == 2, "bound without a partition source exits 2");
  r = run_cli("bound " + graph.string() + " --scc");
  expect(r.code == 2, "--scc on an undirected graph exits 2");
  r = run_cli("bound " + h.string() + " --partition " + partition.string() +
              " --scc");
  expect(r.code == 2, "--partition and --scc are mutually exclusive");
  r = run_cli("bound " + graph.string() + " --partition " +
              partition.string() + " --method other");
  expect(r.code == 2, "unknown method exits 2");
}

void check_gen_command() {
  RunResult r = run_cli("gen lower-k --x 2 --y 3");
  expect(r.code == 0 && r.output == serialize_graph(gen_lower_k(2, 3)),
         "gen writes the canonical serialization to stdout");

  const fs::path a = g_dir / "random_a.graph";
  const fs::path ap = g_dir / "random_a.partition";
  const fs::path b = g_dir / "random_b.graph";
  const fs::path bp = g_dir / "random_b.partition";
  const std::string params =
      " --seed 7 --n 9 --max-mult 3 --density 0.5 --classes 3";
  r = run_cli("gen random" + params + " --out " + a.string() +
              " --partition-out " + ap.string());
  expect(r.code == 0, "gen random exits 0");
  r = run_cli("gen random" + params + " --out " + b.string() +
              " --partition-out " + bp.string());
  expect(r.code == 0 && read_text(a) == read_text(b) &&
             read_text(ap) == read_text(bp),
         "gen random is byte-stable for a fixed seed");
  const GeneratedInstance expected = gen_random(7, 9, 3, 0.5, 3);
  expect(parse_graph(read_text(a)) == expected.graph &&
             parse_partition(read_text(ap), 9) == expected.partition,
         "gen random files parse back to the library instance");

  expect(run_cli("gen lower-g --x 3 --y 1").code == 2,
         "odd x is rejected with exit 2");
  expect(run_cli("gen nolow --n 2").code == 2, "nolow needs n >= 3");
  expect(run_cli("gen random --seed 1 --n 3 --classes 5").code == 2,
         "more classes than vertices exits 2");
  expect(run_cli("gen random --seed 1 --n 3 --density 1.5").code == 2,
         "density outside [0, 1] exits 2");
  expect(run_cli("gen random --seed 1 --n 3 --max-mult 0").code == 2,
         "zero max multiplicity exits 2");
}

void check_verify_command() {
  RunResult r = run_cli("verify claim2");
  expect(r.code == 0, "verify claim2 exits 0");
  expect(count_lines_with_prefix(r.output, "PASS ") == 31 &&
             count_lines_with_prefix(r.output, "FAIL ") == 0,
         "claim2 runs its 31 fixed checks");
  expect(count_lines_with_prefix(r.output, "checks 31/31 passed") == 1,
         "verify prints the summary line");

  r = run_cli("verify prop1 --trials 3 --max-n 5 --seed 11");
  expect(r.code == 0 &&
             count_lines_with_prefix(r.output, "checks 3/3 passed") == 1,
         "--trials limits the randomized suite");

  r = run_cli("verify prop3");
  expect(r.code == 0 &&
             count_lines_with_prefix(r.output, "checks 6/6 passed") == 1,
         "verify prop3 covers n=3..8");

  expect(run_cli("verify prop9").code == 2, "unknown suite exits 2");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_tests <path-to-cli-binary>\n";
    return 2;
  }
  g_cli = argv[1];

  char tmpl[] = "/tmp/cutbound_cli_XXXXXX";
  if (mkdtemp(tmpl) == nullptr) {
    std::cerr << "cannot create a temporary directory\n";
    return 2;
  }
  g_dir = tmpl;

  check_cutwidth_command();
  check_error_exits();
  check_bound_command();
  check_gen_command();
  check_verify_command();

  fs::remove_all(g_dir);
  if (g_failures == 0) {
    std::cout << "cli tests passed\n";
    return 0;
  }
  std::cout << g_failures << " cli check(s) failed\n";
  return 1;
}

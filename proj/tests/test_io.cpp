#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "cutbound/generators.hpp"
#include "cutbound/io.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace cutbound;

namespace {

int thrown_line(const std::string& text) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("serialize_graph emits the canonical byte-stable form") {
  CHECK(serialize_graph(gen_lower_k(2, 3)) ==
        "undirected\n4\ne 1 3 2\ne 2 3 3\ne 2 4 1\ne 3 4 3\n");

  const Multigraph arcs = Multigraph::from_edge_list(
      Orientation::directed, 3, {{2, 1, 1}, {1, 2, 4}});
  CHECK(serialize_graph(arcs) == "directed\n3\ne 1 2 4\ne 2 1 1\n");

  CHECK(serialize_graph(Multigraph::from_edge_list(Orientation::undirected, 0,
                                                   {})) == "undirected\n0\n");
}

TEST_CASE("parse_graph round-trips every generator family") {
  std::vector<Multigraph> graphs = {
      gen_lower_g(2, 3).graph, gen_lower_k(4, 2),     gen_lower_h(2, 3),
      gen_nolow_gn(5),         gen_random(9, 10, 3, 0.6, 2).graph,
  };
  std::mt19937_64 rng(77);
  for (int t = 0; t < 20; ++t) {
    graphs.push_back(testutil::random_digraph(rng(), 7));
  }
  for (const Multigraph& g : graphs) {
    const std::string text = serialize_graph(g);
    CHECK(parse_graph(text) == g);
    CHECK(serialize_graph(parse_graph(text)) == text);
  }
}

TEST_CASE("parse_graph accepts comments, blanks, CRLF and implicit m=1") {
  const std::string text =
      "# weighted path on three vertices\r\n"
      "\r\n"
      "undirected\r\n"
      "3\n"
      "e 1 2\n"
      "   # indented comments are skipped too\n"
      "e 2 3 5\n";
  const Multigraph g = parse_graph(
      "# weighted path\r\n\r\nundirected\r\n3\ne 1 2\n#skip\ne 2 3 5\n");
  CHECK(g == Multigraph::from_edge_list(Orientation::undirected, 3,
                                        {{1, 2, 1}, {2, 3, 5}}));
  CHECK(parse_graph(text) == g);

  // Repeated mentions of one undirected edge accumulate.
  CHECK(parse_graph("undirected\n2\ne 1 2\ne 2 1 3\n") ==
        Multigraph::from_edge_list(Orientation::undirected, 2, {{1, 2, 4}}));
}

TEST_CASE("parse_graph reports the offending line") {
  CHECK(thrown_line("") == 0);                        // no header at all
  CHECK(thrown_line("# only comments\n\n") == 0);
  CHECK(thrown_line("graph\n3\n") == 1);              // unknown header
  CHECK(thrown_line("undirected 3\n") == 1);          // extra token
  CHECK(thrown_line("undirected\n") == 0);            // count missing
  CHECK(thrown_line("undirected\nthree\n") == 2);
  CHECK(thrown_line("undirected\n3 4\n") == 2);
  CHECK(thrown_line("undirected\n-1\n") == 2);
  CHECK(thrown_line("undirected\n2000000000\n") == 2);
  CHECK(thrown_line("undirected\n3\nv 1 2\n") == 3);  // not an edge line
  CHECK(thrown_line("undirected\n3\ne 1\n") == 3);
  CHECK(thrown_line("undirected\n3\ne 1 2 3 4\n") == 3);
  CHECK(thrown_line("undirected\n3\ne 1 2\ne 1 4\n") == 4);  // id range
  CHECK(thrown_line("undirected\n3\ne 0 2\n") == 3);
  CHECK(thrown_line("undirected\n3\ne 2 2\n") == 3);  // self-loop
  CHECK(thrown_line("undirected\n3\ne 1 2 0\n") == 3);
  CHECK(thrown_line("undirected\n3\ne 1 2 -2\n") == 3);
  CHECK(thrown_line("undirected\n3\ne 1 2 two\n") == 3);
  // Line numbers count raw lines, comments and blanks included.
  CHECK(thrown_line("# header next\n\nundirected\nnope\n") == 4);

  CHECK_THROWS_WITH_AS(parse_graph("undirected\n3\ne 1 9\n"),
                       "line 3: vertex id 9 out of range 1..3", ParseError);
}

TEST_CASE("partition text round-trips and validates") {
  const VertexPartition p = gen_lower_g(2, 3).partition;
  const std::string text = serialize_partition(p);
  CHECK(text == "1\n5\n2 3 4\n");
  CHECK(parse_partition(text, 5) == p);

  // Comments and blank lines do not create classes.
  CHECK(parse_partition("# classes\n1 2\n\n# more\n3\n", 3) ==
        VertexPartition::from_classes(3, {{1, 2}, {3}}));
  // Member order inside a line is irrelevant.
  CHECK(parse_partition("4 3 2\n5\n1\n", 5) ==
        VertexPartition::from_classes(5, {{2, 3, 4}, {5}, {1}}));

  CHECK_THROWS_AS(parse_partition("1 2\nx\n3\n", 3), ParseError);
  CHECK_THROWS_AS(parse_partition("1 2\n4\n3\n", 3), ParseError);  // id range
  bool threw = false;
  try {
    parse_partition("1\n\n2 9\n", 3);
  } catch (const ParseError& e) {
    threw = true;
    CHECK(e.line() == 3);  // raw line numbering counts the blank line
  }
  CHECK(threw);
  // Structural problems surface from partition validation, not the parser.
  CHECK_THROWS_AS(parse_partition("1 2\n", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("1 2\n2 3\n", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("", 1), std::invalid_argument);
}

TEST_CASE("partition round-trip on random instances") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const GeneratedInstance inst = gen_random(seed, 9, 2, 0.4, 4);
    const std::string text = serialize_partition(inst.partition);
    CHECK(parse_partition(text, 9) == inst.partition);
  }
}

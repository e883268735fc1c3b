#include <doctest.h>

#include <sstream>

#include "dacol/errors.hpp"
#include "dacol/graph_io.hpp"
#include "dacol/instances.hpp"

using namespace dacol;

namespace {

const char* kTriangle =
    "# a comment\n"
    "graph 3 3\n"
    "0 1\n"
    "0 2\n"
    "\n"
    "1 2\n"
    "coloring 3\n"
    "0: 1\n"
    "1: 2\n"
    "2: 3\n";

std::string parse_error(const std::string& text) {
  try {
    parse_graph_file(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("parse a small file with comments and a coloring block") {
  const GraphFile f = parse_graph_file(std::string(kTriangle));
  CHECK(f.n == 3);
  CHECK(f.edges.size() == 3);
  CHECK_FALSE(f.rotation_flag);
  REQUIRE(f.coloring);
  CHECK(f.coloring->color == std::vector<int>{1, 2, 3});
  CHECK(to_graph(f).num_edges() == 3);
}

TEST_CASE("serialize then parse reproduces every generator output") {
  std::vector<PlaneGraph> graphs{k3(), k4(), octahedron(), icosahedron(), double_wheel(9), even_double_wheel(10),
                                 stacked_chain(5), glued_even_double_wheels(6, 8),
                                 octahedron_replacement(octahedron()).graph};
  for (std::uint64_t seed = 1; seed <= 5; ++seed) graphs.push_back(random_triangulation(20, seed));
  for (const PlaneGraph& g : catalog_small()) graphs.push_back(g);
  for (const PlaneGraph& g : graphs) {
    const std::string text = serialize(g, std::nullopt, true);
    const GraphFile f = parse_graph_file(text);
    CHECK(f.triangulation_flag);
    const PlaneGraph back = to_graph(f);
    CHECK(back == g);
    CHECK(serialize(back, std::nullopt, true) == text);
  }
}

TEST_CASE("colourings survive the round trip") {
  const PlaneGraph oct = octahedron();
  const Coloring phi({1, 2, 3, 1, 2, 5}, 5);
  const std::string text = serialize(oct, phi);
  const GraphFile f = parse_graph_file(text);
  REQUIRE(f.coloring);
  CHECK(*f.coloring == phi);
  std::istringstream alone(serialize_coloring(phi));
  CHECK(parse_coloring_file(alone) == phi);
  std::istringstream whole(text);
  CHECK(parse_coloring_file(whole) == phi);
}

TEST_CASE("edge lists are emitted sorted") {
  const EdgeSet e{make_edge(3, 1), make_edge(0, 2), make_edge(0, 1)};
  CHECK(serialize_edges(e) == "0 1\n0 2\n1 3\n");
  std::istringstream in("# kept edges\n1 3\n0 2\n");
  CHECK(parse_edge_list(in) == EdgeSet{make_edge(0, 2), make_edge(1, 3)});
}

TEST_CASE("malformed text is rejected with a line number") {
  CHECK(parse_error("") != "");
  CHECK(parse_error("grph 3 3\n").find("line 1") != std::string::npos);
  CHECK(parse_error("graph 3 2\n0 1\n").find("ends early") != std::string::npos);
  CHECK(parse_error("graph 3 1\n0 x\n").find("line 2") != std::string::npos);
  CHECK(parse_error("graph 3 1 shiny\n0 1\n").find("shiny") != std::string::npos);
  CHECK(parse_error("graph 2 1\n0 1\nrotation\n0: 1\n1: 0\n").find("header flag") != std::string::npos);
  CHECK(parse_error("graph 2 1 rotation\n0 1\n") != "");
  CHECK(parse_error("graph 2 1\n0 1\ncoloring 2\n0: 1\n") != "");
  CHECK(parse_error("graph 2 1\n0 1\ncoloring 2\n0: 1\n1: 3\n").find("outside") != std::string::npos);
  CHECK(parse_error("graph 2 1\n0 1\ncoloring 2\n0: 1\n0: 2\n").find("twice") != std::string::npos);
  CHECK(parse_error("graph 2 1\n0 1\n0 1\n").find("unexpected") != std::string::npos);
}

TEST_CASE("simplicity is a check, not a parse error") {
  const GraphFile f = parse_graph_file(std::string("graph 3 3\n0 1\n1 0\n1 2\n"));
  const auto report = check_simple(f);
  CHECK_FALSE(report.ok());
  CHECK(report.checks[0].message.find("repeated") != std::string::npos);
  CHECK_THROWS_AS(to_graph(f), InvalidGraph);
  CHECK_FALSE(check_simple(parse_graph_file(std::string("graph 3 1\n2 2\n"))).ok());
  CHECK_FALSE(check_simple(parse_graph_file(std::string("graph 3 1\n0 7\n"))).ok());
}

TEST_CASE("rotation blocks are checked against the edges") {
  const std::string good = "graph 3 2 rotation\n0 1\n1 2\nrotation\n0: 1\n1: 2 0\n2: 1\n";
  CHECK(to_graph(parse_graph_file(good)).rotation(1) == std::vector<Vertex>{0, 2});
  const std::string wrong = "graph 3 2 rotation\n0 1\n1 2\nrotation\n0: 2\n1: 0 2\n2: 1\n";
  CHECK_THROWS_AS(to_graph(parse_graph_file(wrong)), InvalidGraph);
}

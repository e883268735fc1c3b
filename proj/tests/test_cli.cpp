#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dacol/cli.hpp"
#include "dacol/graph_io.hpp"

namespace {

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  Result r;
  r.code = dacol::cli::run(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("dacol_cli_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

const char* kK5 =
    "graph 5 10 triangulation\n"
    "0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n";

}  // namespace

TEST_CASE("gen double-wheel 7 | oracle mk --k 4 prints 2") {
  const Result gen = cli({"gen", "double-wheel", "7"});
  REQUIRE(gen.code == 0);
  const Result mk = cli({"oracle", "mk", "--k", "4"}, gen.out);
  CHECK(mk.code == 0);
  CHECK(mk.out == "2\n");
}

TEST_CASE("gen octahedron | m-value --coloring 3col prints 3") {
  const Result r = cli({"m-value", "--coloring", "3col"}, cli({"gen", "octahedron"}).out);
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "3");
  CHECK(r.out.find("# pair 1 2") != std::string::npos);
}

TEST_CASE("validate on K5 with the triangulation flag fails the edge count") {
  const Result r = cli({"validate"}, kK5);
  CHECK(r.code == 1);
  CHECK(r.out.find("check edge-count fail") != std::string::npos);
  CHECK(r.out.find("10") != std::string::npos);
  const Result none = cli({"validate", temp_file("k5", std::string(kK5).replace(10, 14, ""))});
  CHECK(none.code == 0);
}

TEST_CASE("validate reports a repeated edge as a failed simple check") {
  const Result r = cli({"validate"}, "graph 3 2\n0 1\n1 0\n");
  CHECK(r.code == 1);
  CHECK(r.out.find("check simple fail") != std::string::npos);
}

TEST_CASE("usage, io, parse and size-guard errors exit 2 with distinct prefixes") {
  const Result unknown = cli({"frobnicate"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.rfind("error: usage:", 0) == 0);
  CHECK(cli({}).code == 2);
  CHECK(cli({"color"}, "graph 3 3\n0 1\n0 2\n1 2\n").code == 2);

  const Result io = cli({"faces", "/nonexistent/graph.txt"});
  CHECK(io.code == 2);
  CHECK(io.err.rfind("error: io:", 0) == 0);

  const Result parse = cli({"faces"}, "graph 3 3\n0 1\n");
  CHECK(parse.code == 2);
  CHECK(parse.err.rfind("error: parse:", 0) == 0);

  const Result guard = cli({"oracle", "mk", "--k", "4"}, cli({"gen", "random", "12"}).out);
  CHECK(guard.code == 2);
  CHECK(guard.err.rfind("error: size-guard:", 0) == 0);

  const Result bad_gen = cli({"gen", "double-wheel", "six"});
  CHECK(bad_gen.code == 2);
  CHECK(bad_gen.err.rfind("error: usage:", 0) == 0);
}

TEST_CASE("library failures exit 1") {
  const Result not_tri = cli({"decompose"}, kK5);
  CHECK(not_tri.code == 1);
  CHECK(not_tri.err.rfind("error: ", 0) == 0);
  const Result pre = cli({"gen", "double-wheel", "6"});
  CHECK(pre.code == 1);
  CHECK(pre.err.rfind("error: precondition:", 0) == 0);
  const Result no_col = cli({"m-value"}, cli({"gen", "k4"}).out);
  CHECK(no_col.code == 2);
}

TEST_CASE("help exits 0") {
  const Result r = cli({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verify-paper") != std::string::npos);
}

TEST_CASE("gen output round-trips and is deterministic") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"gen", "random", "15", "--seed", "3"}, {"gen", "icosahedron"},
        {"gen", "catalog", "6", "1"}, {"gen", "stacked-chain", "4"}}) {
    const Result a = cli(args);
    const Result b = cli(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    const auto g = dacol::to_graph(dacol::parse_graph_file(a.out));
    const std::string body = a.out.substr(a.out.find('\n') + 1);
    CHECK(dacol::serialize(g, std::nullopt, true) == body);
    CHECK(cli({"validate"}, a.out).code == 0);
  }
  CHECK(cli({"gen", "random", "15", "--seed", "4"}).out != cli({"gen", "random", "15", "--seed", "3"}).out);
}

TEST_CASE("gen octahedron-replacement") {
  const Result r = cli({"gen", "octahedron-replacement", "octahedron"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("graph 18 48 rotation triangulation") != std::string::npos);
  std::size_t blocks = 0;
  for (std::size_t p = r.out.find("# block"); p != std::string::npos; p = r.out.find("# block", p + 1)) ++blocks;
  CHECK(blocks == 4);
  CHECK(cli({"gen", "octahedron-replacement", "k4"}).code == 1);
}

TEST_CASE("faces and decompose") {
  const Result f = cli({"faces"}, cli({"gen", "double-wheel", "7"}).out);
  CHECK(f.code == 0);
  CHECK(first_line(f.out) == "faces 10");
  const Result d = cli({"decompose"}, cli({"gen", "stacked-chain", "3"}).out);
  CHECK(d.code == 0);
  CHECK(first_line(d.out) == "pieces 3");
  CHECK(d.out.find("triangle 1:") != std::string::npos);
  CHECK(d.out.find("tree ") != std::string::npos);
  // Edge lists without a rotation are embedded on the fly.
  const Result bare = cli({"faces"}, "graph 4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  CHECK(first_line(bare.out) == "faces 4");
}

TEST_CASE("color feeds m-value and transversal") {
  const Result c = cli({"color", "--k", "5", "--acyclic"}, cli({"gen", "octahedron"}).out);
  REQUIRE(c.code == 0);
  CHECK(c.out.find("coloring 5") != std::string::npos);
  CHECK(first_line(cli({"m-value"}, c.out).out) == "0");
  const Result none = cli({"color", "--k", "4", "--acyclic"}, cli({"gen", "octahedron"}).out);
  CHECK(none.code == 1);
  CHECK(first_line(none.out) == "status none");
  const Result budget = cli({"color", "--k", "5", "--acyclic", "--budget", "2"}, cli({"gen", "icosahedron"}).out);
  CHECK(budget.code == 1);
  CHECK(first_line(budget.out) == "status budget-exhausted");
}

TEST_CASE("transversal with and without U") {
  const std::string oct = cli({"gen", "octahedron"}).out;
  const Result plain = cli({"transversal", "--coloring", "3col"}, oct);
  CHECK(plain.code == 0);
  CHECK(first_line(plain.out) == "size 3");

  const Result u = cli({"transversal", "--coloring", "3col", "--u", "0,1,4"}, oct);
  CHECK(u.code == 0);
  CHECK(first_line(u.out) == "size 3");
  CHECK(u.out.find("# check no-u-path pass") != std::string::npos);
  const Result rec = cli({"transversal", "--coloring", "3col", "--u", "0,1,4", "--method", "face-recursion"}, oct);
  CHECK(rec.code == 0);
  CHECK(rec.out.find("method face-recursion") != std::string::npos);

  // Avoid the plain answer: a different 3-edge set must come out.
  std::string edges = plain.out.substr(plain.out.find('\n') + 1);
  edges = edges.substr(0, edges.find('#'));
  const std::string avoid = temp_file("avoid", edges);
  const Result other = cli({"transversal", "--coloring", "3col", "--avoid", avoid}, oct);
  CHECK(other.code == 0);
  CHECK(first_line(other.out) == "size 3");
  std::istringstream lines(edges);
  for (std::string line; std::getline(lines, line);) CHECK(other.out.find("\n" + line + "\n") == std::string::npos);

  CHECK(cli({"transversal", "--coloring", "3col", "--u", "0,2"}, oct).code == 1);
  CHECK(cli({"transversal", "--coloring", "3col", "--u", "0,x"}, oct).code == 2);
}

TEST_CASE("colouring from a separate file") {
  const std::string col = temp_file("col", "coloring 4\n0: 1\n1: 2\n2: 3\n3: 4\n");
  const Result r = cli({"m-value", "--coloring", col}, cli({"gen", "k4"}).out);
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "0");
}

TEST_CASE("defect") {
  const std::string ico = cli({"gen", "icosahedron"}).out;
  const Result four = cli({"defect", "--k", "4"}, ico);
  CHECK(four.code == 0);
  CHECK(four.out.find("coloring 4") != std::string::npos);
  CHECK(four.out.find("met") != std::string::npos);
  const Result three = cli({"defect", "--k", "3"}, ico);
  CHECK(three.code == 0);
  CHECK(three.out.find("coloring 3") != std::string::npos);
  CHECK(cli({"defect", "--k", "5"}, ico).code == 2);
}

TEST_CASE("oracle kinds") {
  const std::string oct = cli({"gen", "octahedron"}).out;
  CHECK(cli({"oracle", "mk", "--k", "3"}, oct).out == "3\n");
  CHECK(cli({"oracle", "mk", "--k", "3"}, cli({"gen", "k4"}).out).out == "inf\n");
  CHECK(cli({"oracle", "mprime", "--k", "4"}, oct).out == "1\n");
  CHECK(cli({"oracle", "mdprime", "--k", "4"}, oct).out == "1\n");
  CHECK(cli({"oracle", "m", "--coloring", "3col"}, oct).out == "3\n");
  const Result u = cli({"oracle", "uacyclic", "--coloring", "3col"}, oct);
  CHECK(u.code == 0);
  CHECK(first_line(u.out) == "size 3");
  CHECK(cli({"oracle", "bogus"}, oct).code == 2);
}

TEST_CASE("verify-paper on one criterion") {
  const Result r = cli({"verify-paper", "--quick", "--criterion", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("# criterion 2 pass") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(cli({"verify-paper", "--criterion", "11"}).code == 2);
}

TEST_CASE("the installed binary works in a shell pipeline") {
  const std::string cmd = std::string("'") + DACOL_CLI_PATH + "' gen double-wheel 7 | '" + DACOL_CLI_PATH +
                          "' oracle mk --k 4";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 64> buf{};
  std::string out;
  while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  CHECK(::pclose(pipe) == 0);
  CHECK(out == "2\n");
}

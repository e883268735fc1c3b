#include <doctest.h>

#include <map>

#include "dacol/coloring.hpp"
#include "dacol/errors.hpp"
#include "dacol/instances.hpp"
#include "dacol/planar.hpp"
#include "support.hpp"

using namespace dacol;
namespace ts = testing_support;

namespace {

std::vector<int> degrees(const PlaneGraph& g) {
  std::vector<int> d;
  for (Vertex v = 0; v < g.n(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST_CASE("named graphs") {
  CHECK(k3().n() == 3);
  CHECK(k4().num_edges() == 6);
  CHECK(octahedron() == even_double_wheel(6));
  CHECK(degrees(octahedron()) == std::vector<int>(6, 4));
  CHECK(degrees(icosahedron()) == std::vector<int>(12, 5));
  for (const PlaneGraph& g : {k4(), octahedron(), icosahedron()}) CHECK(validate(g, true).ok());
}

TEST_CASE("double wheels") {
  for (int n = 7; n <= 21; n += 2) {
    const PlaneGraph g = double_wheel(n);
    CHECK(g.n() == n);
    CHECK(validate(g, true).ok());
    CHECK(is_four_connected_triangulation(g));
    CHECK_FALSE(g.adjacent(n - 2, n - 1));
    CHECK(g.degree(n - 2) == n - 2);
    CHECK_FALSE(eulerian_three_coloring(g));
    CHECK(search_coloring(g, 3, false).status == SearchStatus::NoColoring);
  }
  CHECK_THROWS_AS(double_wheel(6), PreconditionError);
  CHECK_THROWS_AS(double_wheel(5), PreconditionError);
  for (int n = 6; n <= 20; n += 2) {
    const PlaneGraph g = even_double_wheel(n);
    CHECK(validate(g, true).ok());
    CHECK(eulerian_three_coloring(g).has_value());
  }
  CHECK_THROWS_AS(even_double_wheel(7), PreconditionError);
}

TEST_CASE("stacked chains") {
  const PlaneGraph two = stacked_chain(2);
  CHECK(two.n() == 5);
  CHECK(separating_triangles(two).size() == 1);
  const auto tree = decompose(stacked_chain(4));
  CHECK(tree.pieces.size() == 4);
  CHECK(stacked_chain(1) == k4());
  CHECK_THROWS_AS(stacked_chain(0), PreconditionError);
}

TEST_CASE("random triangulations are seeded and stacked") {
  const PlaneGraph a = random_triangulation(10, 1);
  const PlaneGraph b = random_triangulation(10, 1);
  CHECK(a.edges() == b.edges());
  CHECK(a == b);
  CHECK(random_triangulation(10, 2).edges() != a.edges());
  for (int n = 4; n <= 40; n += 3) {
    const PlaneGraph g = random_triangulation(n, 5);
    CHECK(validate(g, true).ok());
    if (n >= 5) CHECK_FALSE(is_four_connected_triangulation(g));
  }
  CHECK_THROWS_AS(random_triangulation(3, 1), PreconditionError);
}

TEST_CASE("glued even double wheels") {
  const PlaneGraph g = glued_even_double_wheels(6, 8);
  CHECK(g.n() == 11);
  CHECK(validate(g, true).ok());
  CHECK(separating_triangles(g).size() == 1);
  CHECK(eulerian_three_coloring(g).has_value());
  const PlaneGraph a = octahedron();
  const std::array<Vertex, 3> bad{0, 2, 1};
  CHECK_THROWS_AS(glue_along_face(a, bad, a, bad), PreconditionError);
}

TEST_CASE("octahedron replacement") {
  const OctahedronReplacement r = octahedron_replacement(octahedron());
  CHECK(r.graph.n() == 18);
  CHECK(r.graph.n() == 4 * 6 - 6);
  CHECK(r.blocks.size() == 4);
  CHECK(validate(r.graph, true).ok());

  const OctahedronReplacement w = octahedron_replacement(even_double_wheel(8));
  CHECK(w.graph.n() == 26);
  CHECK(w.blocks.size() == 6);

  for (const OctahedronReplacement* rep : {&r, &w}) {
    std::map<Edge, int> cover;
    for (const auto& block : rep->blocks) {
      const Subgraph s = rep->graph.induced(block);
      CHECK(s.graph.num_edges() == 12);
      CHECK(degrees(s.graph) == std::vector<int>(6, 4));
      for (const Edge& e : s.graph.edges()) ++cover[make_edge(s.to_parent[e.u], s.to_parent[e.v])];
    }
    CHECK(cover.size() == rep->graph.num_edges());
    for (const auto& [e, c] : cover) CHECK(c == 1);
  }
  CHECK_THROWS_AS(octahedron_replacement(k4()), PreconditionError);
}

TEST_CASE("catalog of small triangulations") {
  const auto& cat = catalog_small();
  std::map<int, int> count;
  for (const PlaneGraph& g : cat) {
    ++count[g.n()];
    CHECK(validate(g, true).ok());
  }
  CHECK(count == std::map<int, int>{{3, 1}, {4, 1}, {5, 1}, {6, 2}});
  CHECK(cat.front().n() == 3);
  int eulerian = 0;
  for (const PlaneGraph& g : catalog_of_order(6)) eulerian += eulerian_three_coloring(g).has_value();
  CHECK(eulerian == 1);
}

TEST_CASE("catalog counts match an independent enumeration") {
  // Every edge subset of K_n with 3n - 6 edges that is a triangulation,
  // grouped by sorted degree sequence plus triangle count. For n <= 6 these
  // invariants separate the isomorphism classes.
  for (int n = 4; n <= 6; ++n) {
    const auto all = ts::complete_graph(n);
    const int m = 3 * n - 6;
    std::set<std::pair<std::vector<int>, std::size_t>> classes;
    const unsigned full = 1u << all.size();
    for (unsigned mask = 0; mask < full; ++mask) {
      if (__builtin_popcount(mask) != m) continue;
      std::vector<Edge> e;
      for (std::size_t i = 0; i < all.size(); ++i) {
        if (mask >> i & 1u) e.push_back(all[i]);
      }
      const PlaneGraph g(n, e);
      if (!is_triangulation(g)) continue;
      classes.insert({degrees(g), triangles(g).size()});
    }
    CHECK(classes.size() == catalog_of_order(n).size());
  }
}

TEST_CASE("canonical_edges identifies relabelled copies") {
  const PlaneGraph oct = octahedron();
  std::vector<int> perm{3, 5, 0, 1, 4, 2};
  std::vector<Edge> moved;
  for (const Edge& e : oct.edges()) moved.push_back(make_edge(perm[e.u], perm[e.v]));
  CHECK(canonical_edges(PlaneGraph(6, moved)) == canonical_edges(oct));
  const auto six = catalog_of_order(6);
  CHECK(canonical_edges(six[0]) != canonical_edges(six[1]));
}

TEST_CASE("generate by family name") {
  const auto d = generate("double-wheel", {9});
  CHECK(d.family == "double-wheel");
  CHECK(d.graph == double_wheel(9));
  CHECK(d.parameters.at("n") == 9);
  CHECK_FALSE(d.provenance.empty());
  CHECK(generate("random", {12}, 4).graph == random_triangulation(12, 4));
  CHECK(generate("random", {12}, 4).provenance.find("seed 4") != std::string::npos);
  CHECK(generate("catalog", {6, 1}).graph == catalog_of_order(6)[1]);
  CHECK(generate("glued-even-double-wheels", {6, 8}).graph == glued_even_double_wheels(6, 8));
  for (const char* name : {"k3", "k4", "octahedron", "icosahedron"}) CHECK(generate(name, {}).graph.has_rotation());
  CHECK_THROWS_AS(generate("petersen", {}), PreconditionError);
  CHECK_THROWS_AS(generate("double-wheel", {}), PreconditionError);
  CHECK_THROWS_AS(generate("catalog", {6, 2}), PreconditionError);
}

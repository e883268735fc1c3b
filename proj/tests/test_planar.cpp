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

std::vector<PlaneGraph> property_graphs() {
  std::vector<PlaneGraph> out{k4(), octahedron(), icosahedron(), glued_even_double_wheels(6, 8)};
  for (int n = 7; n <= 29; n += 2) out.push_back(double_wheel(n));
  for (int n = 6; n <= 30; n += 2) out.push_back(even_double_wheel(n));
  for (int n = 4; n <= 30; ++n) out.push_back(random_triangulation(n, static_cast<std::uint64_t>(n) * 31));
  for (int t = 1; t <= 27; t += 2) out.push_back(stacked_chain(t));
  return out;
}

// Separating triangles by definition: the triangle's removal disconnects.
std::vector<Triangle> separating_by_definition(const PlaneGraph& g) {
  std::vector<Triangle> out;
  for (const Triangle& t : triangles(g)) {
    std::vector<Vertex> map(g.n(), -1);
    int next = 0;
    for (Vertex v = 0; v < g.n(); ++v) {
      if (v != t[0] && v != t[1] && v != t[2]) map[v] = next++;
    }
    std::vector<Edge> rest;
    for (const Edge& e : g.edges()) {
      if (map[e.u] >= 0 && map[e.v] >= 0) rest.push_back({map[e.u], map[e.v]});
    }
    if (ts::components(next, rest) > 1) out.push_back(t);
  }
  return out;
}

}  // namespace

TEST_CASE("validate: octahedron, K4 and K5") {
  const auto oct = validate(octahedron(), true);
  CHECK(oct.ok());
  CHECK(faces(octahedron()).size() == 8);
  CHECK(validate(k4(), true).ok());

  const PlaneGraph k5(5, ts::complete_graph(5));
  const auto report = validate(k5, true);
  CHECK_FALSE(report.ok());
  REQUIRE(report.find("edge-count") != nullptr);
  CHECK_FALSE(report.find("edge-count")->passed);
  CHECK(report.find("edge-count")->message.find("10") != std::string::npos);
  CHECK(validate(k5, false).ok());
}

TEST_CASE("validate flags disconnected graphs and a bad Euler count") {
  const std::vector<Edge> two{{0, 1}, {2, 3}};
  CHECK_FALSE(validate(PlaneGraph(4, two), false).ok());
  // K4 with a rotation that is not planar: every vertex sees the others in
  // increasing order.
  const PlaneGraph twisted(4, ts::complete_graph(4), Rotation{{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}});
  const auto report = validate(twisted, false);
  REQUIRE(report.find("euler") != nullptr);
  CHECK_FALSE(report.find("euler")->passed);
}

TEST_CASE("face counts") {
  CHECK(faces(k4()).size() == 4);
  CHECK(faces(double_wheel(7)).size() == 10);
  CHECK_THROWS_AS(faces(k4().without_rotation()), MissingRotation);
  for (const PlaneGraph& g : property_graphs()) {
    const auto fs = faces(g);
    CHECK(fs.size() == static_cast<std::size_t>(2 * g.n() - 4));
    for (const auto& f : fs) CHECK(f.size() == 3);
  }
}

TEST_CASE("embedding is recovered from the edge list alone") {
  for (const PlaneGraph& g : {octahedron(), icosahedron(), double_wheel(9), random_triangulation(15, 4)}) {
    const PlaneGraph bare = g.without_rotation();
    CHECK(is_triangulation(bare));
    const PlaneGraph e = embed_triangulation(bare);
    CHECK(e.edges() == g.edges());
    CHECK(faces(e).size() == static_cast<std::size_t>(2 * g.n() - 4));
  }
  const PlaneGraph k5(5, ts::complete_graph(5));
  CHECK_FALSE(is_triangulation(k5));
  CHECK_THROWS_AS(embed_triangulation(k5), NotTriangulation);
}

TEST_CASE("K3,3 plus edges is not mistaken for a triangulation") {
  // 12 edges on 6 vertices (= 3n - 6) but contains K3,3, so not planar.
  std::vector<Edge> e;
  for (int a = 0; a < 3; ++a) {
    for (int b = 3; b < 6; ++b) e.push_back({a, b});
  }
  e.push_back({0, 1});
  e.push_back({1, 2});
  e.push_back({3, 4});
  CHECK(e.size() == 12);
  CHECK_FALSE(is_triangulation(PlaneGraph(6, e)));
}

TEST_CASE("separating triangles") {
  CHECK(separating_triangles(octahedron()).empty());
  CHECK(separating_triangles(stacked_chain(2)).size() == 1);
  CHECK(separating_triangles(octahedron_replacement(octahedron()).graph).size() >= 4);
  CHECK_THROWS_AS(separating_triangles(PlaneGraph(5, ts::complete_graph(5))), NotTriangulation);
  for (const PlaneGraph& g : property_graphs()) {
    if (g.n() > 20) continue;
    CHECK(separating_triangles(g) == separating_by_definition(g));
  }
}

TEST_CASE("four-connected triangulations") {
  CHECK(is_four_connected_triangulation(octahedron()));
  CHECK(is_four_connected_triangulation(icosahedron()));
  CHECK(is_four_connected_triangulation(double_wheel(11)));
  CHECK_FALSE(is_four_connected_triangulation(k4()));
  CHECK_FALSE(is_four_connected_triangulation(stacked_chain(3)));
}

TEST_CASE("decompose: single piece, stacked pair and chains") {
  const auto oct = decompose(octahedron());
  CHECK(oct.pieces.size() == 1);
  CHECK(oct.triangles.empty());

  const auto two = decompose(stacked_chain(2));
  REQUIRE(two.pieces.size() == 2);
  CHECK(two.pieces[0].n() == 4);
  CHECK(two.pieces[1].n() == 4);
  CHECK(two.triangles == separating_triangles(stacked_chain(2)));
  REQUIRE(two.tree_edges.size() == 1);

  for (int t = 1; t <= 8; ++t) {
    const auto tree = decompose(stacked_chain(t));
    CHECK(tree.pieces.size() == static_cast<std::size_t>(t));
    CHECK(tree.tree_edges.size() == static_cast<std::size_t>(t - 1));
    std::vector<int> deg(tree.pieces.size(), 0);
    for (const auto& e : tree.tree_edges) {
      ++deg[e.piece_a];
      ++deg[e.piece_b];
    }
    for (int d : deg) CHECK(d <= 2);
  }
  CHECK_THROWS_AS(decompose(k3()), PreconditionError);
}

TEST_CASE("decomposition invariants on generated triangulations up to n = 30") {
  for (const PlaneGraph& g : property_graphs()) {
    const auto tree = decompose(g);
    const std::size_t t = tree.pieces.size();
    std::size_t total = 0;
    for (std::size_t p = 0; p < t; ++p) {
      const PlaneGraph& piece = tree.pieces[p];
      total += piece.n();
      CHECK((piece.n() <= 4 || is_four_connected_triangulation(piece)));
      for (const Edge& e : piece.edges()) {
        CHECK(g.adjacent(tree.piece_maps[p][e.u], tree.piece_maps[p][e.v]));
      }
    }
    CHECK(total == static_cast<std::size_t>(g.n()) + 3 * (t - 1));
    // The tree is connected with t - 1 edges.
    std::vector<Edge> links;
    for (const auto& e : tree.tree_edges) links.push_back(make_edge(e.piece_a, e.piece_b));
    CHECK(links.size() == t - 1);
    CHECK(ts::components(static_cast<int>(t), links) == 1);
    CHECK(reglue(tree, g.n()).edges() == g.edges());
  }
}

TEST_CASE("is_two_connected") {
  const std::vector<Edge> c4{{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  const std::vector<Edge> p3{{0, 1}, {1, 2}};
  CHECK(is_two_connected(PlaneGraph(4, c4)));
  CHECK_FALSE(is_two_connected(PlaneGraph(3, p3)));
  const PlaneGraph oct = octahedron();
  const Coloring phi = *eulerian_three_coloring(oct);
  CHECK(is_two_connected(bichromatic_subgraph(oct, phi, 1, 2).graph));
  for (const PlaneGraph& g : property_graphs()) {
    if (g.n() > 14) continue;
    CHECK(is_two_connected(g) == ts::two_connected(g.n(), g.edges()));
    const auto some = g.without_edges({g.edges()[0], g.edges()[3]});
    std::vector<Edge> sparse;
    for (const Edge& e : some.edges()) {
      if ((e.u + e.v) % 3 != 0) sparse.push_back(e);
    }
    CHECK(is_two_connected(PlaneGraph(g.n(), sparse)) == ts::two_connected(g.n(), sparse));
  }
}

TEST_CASE("contract_path") {
  // Octahedron: the opposite rim vertices around 0 also share 0's antipode,
  // so the merge would double the antipode edge.
  const PlaneGraph oct = octahedron();
  const auto rim = oct.rotation(0);
  CHECK_THROWS_AS(contract_path(oct, rim[0], 0, rim[2]), PreconditionError);
  CHECK_THROWS_AS(contract_path(oct, rim[0], 0, rim[1]), PreconditionError);

  // Double wheel n = 7: rim path 1 - 0 - 4.
  const PlaneGraph dw = double_wheel(7);
  const Contraction c = contract_path(dw, 1, 0, 4);
  CHECK(c.graph.n() == dw.n() - 2);
  CHECK(is_triangulation(c.graph));
  CHECK(c.old_to_new[0] == c.merged);
  CHECK(c.old_to_new[1] == c.merged);
  CHECK(c.old_to_new[4] == c.merged);
  CHECK(c.merged_labels == std::array<Label, 3>{1, 0, 4});
  CHECK(dw.n() == 7);

  const PlaneGraph back = expand(c);
  std::set<std::pair<Label, Label>> want, got;
  for (const Edge& e : dw.edges()) want.insert(std::minmax(dw.label(e.u), dw.label(e.v)));
  for (const Edge& e : back.edges()) got.insert(std::minmax(back.label(e.u), back.label(e.v)));
  CHECK(got == want);
  CHECK(faces(back).size() == faces(dw).size());
}

TEST_CASE("contract_path then expand restores random triangulations") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const PlaneGraph g = random_triangulation(14, seed);
    int done = 0;
    for (Vertex v = 0; v < g.n() && done < 3; ++v) {
      const auto& r = g.rotation(v);
      for (std::size_t i = 0; i < r.size() && done < 3; ++i) {
        const Vertex a = r[i], b = r[(i + 2) % r.size()];
        if (r.size() < 4 || g.adjacent(a, b)) continue;
        Contraction c;
        try {
          c = contract_path(g, a, v, b);
        } catch (const PreconditionError&) {
          continue;
        }
        CHECK(is_triangulation(c.graph));
        const PlaneGraph back = expand(c);
        CHECK(back.n() == g.n());
        CHECK(back.num_edges() == g.num_edges());
        for (const Edge& e : back.edges()) CHECK(g.adjacent(back.label(e.u), back.label(e.v)));
        ++done;
      }
    }
  }
}

TEST_CASE("delete_and_retriangulate") {
  const PlaneGraph oct = octahedron();
  const auto rim4 = oct.rotation(0);
  const std::vector<Edge> one{make_edge(rim4[0], rim4[2])};
  const Rewrite r4 = delete_and_retriangulate(oct, 0, one);
  CHECK(r4.graph.n() == 5);
  CHECK(r4.graph.num_edges() == oct.num_edges() - 3);
  CHECK(is_triangulation(r4.graph));
  CHECK(r4.old_to_new[0] == -1);

  const PlaneGraph ico = icosahedron();
  const auto rim5 = ico.rotation(0);
  const std::vector<Edge> two{make_edge(rim5[0], rim5[2]), make_edge(rim5[0], rim5[3])};
  const Rewrite r5 = delete_and_retriangulate(ico, 0, two);
  CHECK(r5.graph.num_edges() == ico.num_edges() - 3);
  CHECK(is_triangulation(r5.graph));

  const std::vector<Edge> adjacent_rim{make_edge(rim4[0], rim4[1])};
  CHECK_THROWS_AS(delete_and_retriangulate(oct, 0, adjacent_rim), PreconditionError);
  const std::vector<Edge> crossing{make_edge(rim5[0], rim5[2]), make_edge(rim5[1], rim5[3])};
  CHECK_THROWS_AS(delete_and_retriangulate(ico, 0, crossing), PreconditionError);
}

TEST_CASE("complete_to_triangulation") {
  const PlaneGraph g = icosahedron().without_edges({make_edge(0, 1), make_edge(6, 11)}).without_rotation();
  const PlaneGraph t = complete_to_triangulation(g);
  CHECK(is_triangulation(t));
  for (const Edge& e : g.edges()) CHECK(t.has_edge(e));
  const std::vector<Edge> tree{{0, 1}, {1, 2}, {1, 3}, {3, 4}};
  const PlaneGraph from_tree = complete_to_triangulation(PlaneGraph(5, tree));
  CHECK(is_triangulation(from_tree));
  CHECK(from_tree.num_edges() == 9);
}

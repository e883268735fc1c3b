#include <doctest.h>

#include "dacol/errors.hpp"
#include "dacol/graph.hpp"
#include "dacol/instances.hpp"

using namespace dacol;

TEST_CASE("edges are stored with u < v and sorted") {
  const std::vector<Edge> raw{{2, 1}, {0, 2}, {1, 0}};
  const PlaneGraph g(3, raw);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(g.num_edges() == 3);
  CHECK(g.adjacent(2, 0));
  CHECK_FALSE(g.has_rotation());
  CHECK_THROWS_AS(g.rotation(), MissingRotation);
}

TEST_CASE("construction rejects non-simple input") {
  const std::vector<Edge> loop{{1, 1}};
  const std::vector<Edge> parallel{{0, 1}, {1, 0}};
  const std::vector<Edge> range{{0, 3}};
  CHECK_THROWS_AS(PlaneGraph(3, loop), InvalidGraph);
  CHECK_THROWS_AS(PlaneGraph(3, parallel), InvalidGraph);
  CHECK_THROWS_AS(PlaneGraph(3, range), InvalidGraph);
}

TEST_CASE("rotation must permute each neighbourhood") {
  const std::vector<Edge> path{{0, 1}, {1, 2}};
  CHECK_NOTHROW(PlaneGraph(3, path, Rotation{{1}, {2, 0}, {1}}));
  CHECK_THROWS_AS(PlaneGraph(3, path, Rotation{{1}, {2}, {1}}), InvalidGraph);
  CHECK_THROWS_AS(PlaneGraph(3, path, Rotation{{1}, {0, 2}}), InvalidGraph);
}

TEST_CASE("rotation lists start at their smallest entry") {
  const PlaneGraph g = octahedron();
  for (Vertex v = 0; v < g.n(); ++v) {
    const auto& r = g.rotation(v);
    CHECK(*std::min_element(r.begin(), r.end()) == r.front());
    CHECK(r.size() == 4);
  }
}

TEST_CASE("labels default to indices and survive edge removal") {
  const PlaneGraph g = k4();
  CHECK(g.label(3) == 3);
  const PlaneGraph h = g.without_edges({make_edge(0, 1)});
  CHECK(h.num_edges() == 5);
  CHECK(h.labels() == g.labels());
  CHECK(h.find_label(2) == 2);
  CHECK_FALSE(h.find_label(9).has_value());
  CHECK(h.has_rotation());
}

TEST_CASE("induced subgraph keeps the given order and parent map") {
  const PlaneGraph g = octahedron();
  const std::vector<Vertex> pick{5, 0, 1};
  const Subgraph s = g.induced(pick);
  CHECK(s.graph.n() == 3);
  CHECK(s.to_parent == pick);
  for (const Edge& e : s.graph.edges()) CHECK(g.adjacent(s.to_parent[e.u], s.to_parent[e.v]));
  CHECK(s.graph.num_edges() == 3);
}

TEST_CASE("from_faces orients faces given in arbitrary orientation") {
  const std::vector<std::array<Vertex, 3>> fs{{0, 1, 2}, {0, 1, 3}, {1, 2, 3}, {0, 2, 3}};
  const PlaneGraph g = PlaneGraph::from_faces(4, fs);
  CHECK(g.num_edges() == 6);
  CHECK(g.has_rotation());
  const std::vector<std::array<Vertex, 3>> not_sphere{{0, 1, 2}, {0, 1, 3}};
  CHECK_THROWS_AS(PlaneGraph::from_faces(4, not_sphere), NotTriangulation);
}

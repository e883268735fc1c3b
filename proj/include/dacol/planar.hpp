#pragma once

#include <string>
#include <vector>

#include "dacol/graph.hpp"

namespace dacol {

struct Check {
  std::string name;
  bool passed = true;
  std::string message;
};

struct ValidationReport {
  std::vector<Check> checks;

  bool ok() const;
  const Check* find(const std::string& name) const;
  void add(std::string name, bool passed, std::string message = {});
};

// Connectivity, Euler check (with rotation) and, when asked, the triangulation
// conditions. Never throws for well-formed graphs; failures live in the report.
ValidationReport validate(const PlaneGraph& g, bool expect_triangulation);

bool is_connected(const PlaneGraph& g);

// Standard 2-connectivity; graphs with fewer than 3 vertices are not 2-connected.
bool is_two_connected(const PlaneGraph& g);

// Facial walks from the rotation system, one per orbit of directed edges.
std::vector<std::vector<Vertex>> faces(const PlaneGraph& g);

// All triangles of g, sorted.
std::vector<Triangle> triangles(const PlaneGraph& g);

// Combinatorial triangulation test (no embedding needed): |E| = 3n - 6,
// connected, and the non-separating triangles form a simplicial sphere.
bool is_triangulation(const PlaneGraph& g);

// Returns g with the (unique up to reflection) rotation of a triangulation.
// Keeps an existing rotation if it already yields triangular faces.
PlaneGraph embed_triangulation(const PlaneGraph& g);

// Facial triangles of a triangulation, sorted.
std::vector<Triangle> facial_triangles(const PlaneGraph& g);

std::vector<Triangle> separating_triangles(const PlaneGraph& g);

// Triangulation with no separating triangle on at least 5 vertices.
bool is_four_connected_triangulation(const PlaneGraph& g);

struct TreeEdge {
  int piece_a = 0;
  int piece_b = 0;
  int triangle = 0;  // index into DecompositionTree::triangles
};

// Pieces are materialised copies; piece_maps[i][x] is the vertex of the input
// graph that vertex x of pieces[i] stands for.
struct DecompositionTree {
  std::vector<PlaneGraph> pieces;
  std::vector<Triangle> triangles;
  std::vector<TreeEdge> tree_edges;
  std::vector<std::vector<Vertex>> piece_maps;
};

DecompositionTree decompose(const PlaneGraph& g);

// Union of the pieces, mapped back onto vertices 0..n-1 of the original graph.
PlaneGraph reglue(const DecompositionTree& tree, int n);

// Result of a rewrite: the new graph plus where every old vertex went
// (old_to_new[x] == -1 for deleted vertices).
struct Rewrite {
  PlaneGraph graph;
  std::vector<Vertex> old_to_new;
};

struct Contraction {
  PlaneGraph graph;
  std::vector<Vertex> old_to_new;
  Vertex merged = -1;                    // index of the new vertex
  std::array<Label, 3> merged_labels{};  // labels of v1, v, v3
  // Faces of the original graph at v1, v or v3, in labels; used by expand().
  std::vector<std::array<Label, 3>> original_faces;
};

// Contracts the path v1 v v3 of a triangulation into one vertex. Throws
// PreconditionError on a loop (v1 adjacent to v3) and whenever the result
// would have a parallel edge.
Contraction contract_path(const PlaneGraph& g, Vertex v1, Vertex v, Vertex v3);

// Inverse of contract_path, restoring the original graph up to vertex order
// (vertices are matched by label).
PlaneGraph expand(const Contraction& c);

// Deletes v (degree 4 or 5) and triangulates the hole with `chords`.
Rewrite delete_and_retriangulate(const PlaneGraph& g, Vertex v, std::span<const Edge> chords);

// Adds edges (keeping planarity) until g is a triangulation. Requires a planar
// input; the embedding is computed internally.
PlaneGraph complete_to_triangulation(const PlaneGraph& g);

}  // namespace dacol

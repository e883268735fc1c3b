#pragma once

#include <array>
#include <compare>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "dacol/errors.hpp"

namespace dacol {

using Vertex = int;
using Label = long long;

// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

using EdgeSet = std::set<Edge>;
using Triangle = std::array<Vertex, 3>;  // sorted ascending
using Rotation = std::vector<std::vector<Vertex>>;

Triangle make_triangle(Vertex a, Vertex b, Vertex c);

std::string to_string(const Edge& e);

struct Subgraph;

// Simple undirected graph on vertices 0..n-1 with an optional rotation system
// (cyclic neighbour order per vertex) and stable labels that survive rewrites.
//
// Values are immutable after construction; every rewrite returns a new graph.
class PlaneGraph {
 public:
  PlaneGraph() = default;

  // Throws InvalidGraph on loops, parallel edges, out-of-range endpoints, or a
  // rotation that is not a permutation of each neighbourhood. Rotation lists
  // are normalised to start at their smallest entry.
  PlaneGraph(int n, std::span<const Edge> edges, std::optional<Rotation> rotation = std::nullopt,
             std::vector<Label> labels = {});

  // Builds a triangulated sphere from its facial triangles (any orientation).
  // Orients the faces consistently and derives the rotation system. Throws
  // NotTriangulation unless the faces form a simplicial sphere.
  static PlaneGraph from_faces(int n, std::span<const std::array<Vertex, 3>> faces,
                               std::vector<Label> labels = {});

  int n() const { return static_cast<int>(adjacency_.size()); }
  std::size_t num_edges() const { return num_edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }
  bool adjacent(Vertex a, Vertex b) const;
  bool has_edge(const Edge& e) const { return adjacent(e.u, e.v); }
  std::vector<Edge> edges() const;

  bool has_rotation() const { return rotation_.has_value(); }
  // Throws MissingRotation when absent.
  const Rotation& rotation() const;
  const std::vector<Vertex>& rotation(Vertex v) const { return rotation().at(v); }
  // Neighbour following `u` in the cyclic order at `v`.
  Vertex rotation_next(Vertex v, Vertex u) const;

  const std::vector<Label>& labels() const { return labels_; }
  Label label(Vertex v) const { return labels_.at(v); }
  // Index of the vertex carrying `label`, if any.
  std::optional<Vertex> find_label(Label label) const;

  // Subgraph induced by `vertices` (kept in the given order); rotation is
  // restricted, which is again a plane embedding.
  Subgraph induced(std::span<const Vertex> vertices) const;
  PlaneGraph without_edges(const EdgeSet& removed) const;
  PlaneGraph without_rotation() const;
  PlaneGraph with_rotation(Rotation rotation) const;

  friend bool operator==(const PlaneGraph&, const PlaneGraph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::optional<Rotation> rotation_;
  std::vector<Label> labels_;
  std::size_t num_edges_ = 0;
};

// A graph together with the injection of its vertices into a parent graph.
struct Subgraph {
  PlaneGraph graph;
  std::vector<Vertex> to_parent;
};

}  // namespace dacol

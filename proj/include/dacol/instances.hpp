#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dacol/graph.hpp"

namespace dacol {

PlaneGraph k3();
PlaneGraph k4();
PlaneGraph octahedron();
PlaneGraph icosahedron();

// Rim cycle 0..n-3 and two hubs n-2, n-1 adjacent to every rim vertex.
// double_wheel needs odd n >= 7, even_double_wheel even n >= 6.
PlaneGraph double_wheel(int n);
PlaneGraph even_double_wheel(int n);

// t K4s glued in a path: vertex j >= 4 goes into the face (j-3, j-2, j-1).
PlaneGraph stacked_chain(int t);

// n - 4 apex insertions into faces of K4 picked by a seeded mt19937_64.
PlaneGraph random_triangulation(int n, std::uint64_t seed);

// Identifies face fb of b with face fa of a (fb[i] -> fa[i]) and removes it.
PlaneGraph glue_along_face(const PlaneGraph& a, std::array<Vertex, 3> fa, const PlaneGraph& b,
                           std::array<Vertex, 3> fb);

// even_double_wheel(n1) and even_double_wheel(n2) glued along the face
// (0, 1, first hub); 3-colourable with n1 + n2 - 3 vertices.
PlaneGraph glued_even_double_wheels(int n1, int n2);

struct OctahedronReplacement {
  PlaneGraph graph;
  // Six vertices per octahedron; their induced graphs partition E(graph).
  std::vector<std::array<Vertex, 6>> blocks;
};

// Each triangle of one face-colour class of the Eulerian triangulation h is
// replaced by an octahedron (three new vertices, one per edge of h).
OctahedronReplacement octahedron_replacement(const PlaneGraph& h);

// Canonical form of a small graph: lexicographically least sorted edge list
// over all vertex orders that list degrees in non-decreasing order.
std::vector<Edge> canonical_edges(const PlaneGraph& g);

// All triangulations with 3 <= n <= 6 up to isomorphism, by brute-force
// enumeration of edge subsets, sorted by n then canonical edge list.
const std::vector<PlaneGraph>& catalog_small();
std::vector<PlaneGraph> catalog_of_order(int n);

struct InstanceDescriptor {
  std::string family;
  std::map<std::string, long long> parameters;
  PlaneGraph graph;
  std::string provenance;
};

// Builds a family by name: k3, k4, octahedron, icosahedron, double-wheel N,
// even-double-wheel N, stacked-chain T, random N (seed), catalog N I,
// glued-even-double-wheels N1 N2. Throws PreconditionError on unknown names
// or bad parameters.
InstanceDescriptor generate(const std::string& family, const std::vector<long long>& params,
                            std::uint64_t seed = 0);

}  // namespace dacol

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dacol/coloring.hpp"
#include "dacol/graph.hpp"
#include "dacol/planar.hpp"

namespace dacol {

// Text form of a graph:
//
//   graph <n> <m> [rotation] [triangulation]
//   u v                      m lines, u < v, sorted
//   rotation                 optional: n lines "v: c1 ... cd"
//   coloring <k>             optional: n lines "v: c"
//
// Lines starting with '#' and blank lines are ignored.
struct GraphFile {
  int n = 0;
  std::vector<Edge> edges;  // as written, not yet checked for simplicity
  bool rotation_flag = false;
  bool triangulation_flag = false;
  std::optional<Rotation> rotation;
  std::optional<Coloring> coloring;
};

// Throws ParseError with a line number on malformed text.
GraphFile parse_graph_file(std::istream& in);
GraphFile parse_graph_file(const std::string& text);

// Loops, repeated edges and out-of-range endpoints, as a "simple" check.
ValidationReport check_simple(const GraphFile& file);

// Throws InvalidGraph when the edges or rotation are inconsistent.
PlaneGraph to_graph(const GraphFile& file);

std::string serialize(const PlaneGraph& g, const std::optional<Coloring>& coloring = std::nullopt,
                      bool triangulation_flag = false);

// The coloring block alone.
std::string serialize_coloring(const Coloring& phi);

// "u v" per line, sorted.
std::string serialize_edges(const EdgeSet& edges);

// Edge list in the "u v" per line form (comments allowed).
EdgeSet parse_edge_list(std::istream& in);

// A standalone coloring file: a "coloring <k>" block, or a whole graph file
// with one.
Coloring parse_coloring_file(std::istream& in);

}  // namespace dacol

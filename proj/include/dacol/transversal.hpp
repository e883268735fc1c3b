#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dacol/coloring.hpp"
#include "dacol/graph.hpp"
#include "dacol/planar.hpp"

namespace dacol {

// An edge set E' together with everything checked about it.
struct TransversalCertificate {
  EdgeSet edges;
  std::size_t size = 0;
  bool kills_all = false;  // every G_ij - E' is a forest
  bool forest = false;     // E' induces a forest
  std::vector<Vertex> u_set;
  bool no_u_path = false;  // no E'-path joins two distinct vertices of u_set
  long long bound = 0;
  std::string bound_kind;  // "n-k" or "n-5"
  bool bound_met = false;
  bool optimal = false;    // size == m(G, phi)
  std::string method;
};

struct PairStats {
  int color_a = 0;
  int color_b = 0;
  int vertices = 0;
  int edges = 0;
  int components = 0;
};

// Sizes and component counts of G_ij over every pair of used colours.
std::vector<PairStats> pair_statistics(const PlaneGraph& g, const Coloring& phi);

// |E| - (|used| - 1) n + sum of c_ij. Throws PreconditionError if phi is not proper.
int m_value(const PlaneGraph& g, const Coloring& phi);

struct Bound {
  long long value = 0;
  std::string kind;
};

// n - 5 for 4-coloured 4-connected triangulations on n >= 5 vertices,
// n - |used| otherwise.
Bound applicable_bound(const PlaneGraph& g, const Coloring& phi);

// Recomputes every flag of a certificate for `edges`.
TransversalCertificate certify(const PlaneGraph& g, const Coloring& phi, EdgeSet edges,
                               std::span<const Vertex> u_set, std::string method);

// E' induces a forest with no path between distinct vertices of `u`.
bool is_u_acyclic(int n, const EdgeSet& edges, std::span<const Vertex> u);

// A 2-coloured cycle of g - edges, if any survives.
std::optional<TwoColoredCycle> surviving_cycle(const PlaneGraph& g, const Coloring& phi,
                                               const EdgeSet& edges);

// Minimum 2CC transversal avoiding `avoid`: per colour pair a spanning forest
// of G_ij is grown from avoid ∩ E(G_ij) (then the remaining edges in sorted
// order) and everything left over is returned. Throws PreconditionError if
// avoid ∩ E(G_ij) already contains a cycle.
TransversalCertificate min_transversal(const PlaneGraph& g, const Coloring& phi,
                                       const EdgeSet& avoid = {});

// Throws PreconditionError unless U is a clique on at most 3 distinct vertices.
void require_u_clique(const PlaneGraph& g, std::span<const Vertex> u);

struct UAcyclicOptions {
  // Use the face recursion on triangulations when no optimal set is found.
  bool allow_fallback = true;
  // Verify the lifted certificate after every level of the face recursion.
  bool check_each_level = false;
};

// U-acyclic 2CC transversal for a clique U with |U| <= 3. An optimal one
// (size m(G, phi)) is computed by matroid intersection of the cographic
// matroids of the G_ij with the graphic matroid of G/U.
TransversalCertificate u_acyclic_transversal(const PlaneGraph& g, const Coloring& phi,
                                             std::span<const Vertex> u,
                                             const UAcyclicOptions& options = {});

// The constructive recursion for triangulations: split at separating
// triangles, otherwise remove or contract around a low-degree vertex outside
// the face and lift the certificate of the smaller graph. U must lie on a
// face or be a separating triangle.
TransversalCertificate face_recursive_transversal(const PlaneGraph& g, const Coloring& phi,
                                                  std::span<const Vertex> u,
                                                  bool check_each_level = false);

struct Composition {
  int total = 0;
  std::vector<int> per_piece;
  DecompositionTree tree;
};

// Sum of m over the 4-connected pieces with the restricted colourings.
Composition compose_over_decomposition(const PlaneGraph& g, const Coloring& phi);

enum class Equality { EqualsNMinus3, EqualsNMinus4, Below };

std::string to_string(Equality e);

struct EqualityResult {
  Equality by_value = Equality::Below;      // from m_value
  Equality by_structure = Equality::Below;  // from colours and pieces
  int m = 0;
  bool agrees = false;
};

EqualityResult characterize_equality(const PlaneGraph& g, const Coloring& phi);

// Independent recomputation of every certificate property. The forest and
// no-u-path checks only count when `u_acyclic` asks for them.
ValidationReport verify_certificate(const PlaneGraph& g, const Coloring& phi,
                                    const TransversalCertificate& cert, bool u_acyclic = true);

}  // namespace dacol

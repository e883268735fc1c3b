#pragma once

#include <optional>
#include <span>

#include "dacol/coloring.hpp"
#include "dacol/graph.hpp"
#include "dacol/transversal.hpp"

namespace dacol {

// Exhaustive reference implementations. They deliberately share nothing with
// the component-count formula: every value is found by enumerating subsets.

struct OracleLimits {
  int max_n = 9;
  int max_edges = 18;

  // Defaults, with max_n taken from ORACLE_MAX_N when set.
  static OracleLimits from_env();
};

// nullopt stands for infinity (no proper k-colouring).
using OracleValue = std::optional<int>;

// Minimum number of edges meeting every 2-coloured cycle, found per colour
// pair by trying deletion sets of increasing size.
int brute_m(const PlaneGraph& g, const Coloring& phi, const OracleLimits& limits = OracleLimits::from_env());

// Minimum of brute_m over all proper colourings with at most k colours.
OracleValue brute_m_k(const PlaneGraph& g, int k, const OracleLimits& limits = OracleLimits::from_env());

// Fewest edges whose deletion leaves an acyclically k-colourable graph.
int brute_m_prime(const PlaneGraph& g, int k, const OracleLimits& limits = OracleLimits::from_env());

// Fewest edges whose subdivision (one new vertex each) leaves an acyclically
// k-colourable graph.
int brute_m_dprime(const PlaneGraph& g, int k, const OracleLimits& limits = OracleLimits::from_env());

// g with every edge of `edges` subdivided; new vertices are numbered from n
// upward in edge order.
PlaneGraph subdivide(const PlaneGraph& g, const EdgeSet& edges);

// A U-acyclic transversal of minimum size, searched over all combinations of
// per-pair minimum deletion sets; nullopt if none is U-acyclic.
std::optional<TransversalCertificate> brute_optimal_u_acyclic(
    const PlaneGraph& g, const Coloring& phi, std::span<const Vertex> u,
    const OracleLimits& limits = OracleLimits::from_env());

}  // namespace dacol

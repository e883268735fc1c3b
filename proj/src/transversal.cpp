#include "dacol/transversal.hpp"

#include <algorithm>
#include <map>

#include "dacol/union_find.hpp"

namespace dacol {

std::vector<PairStats> pair_statistics(const PlaneGraph& g, const Coloring& phi) {
  if (!is_proper(g, phi)) throw PreconditionError("m(G, phi) needs a proper colouring");
  const auto used = phi.used();
  std::map<std::pair<int, int>, std::size_t> slot;
  std::vector<PairStats> stats;
  for (std::size_t a = 0; a < used.size(); ++a) {
    for (std::size_t b = a + 1; b < used.size(); ++b) {
      slot[{used[a], used[b]}] = stats.size();
      PairStats s;
      s.color_a = used[a];
      s.color_b = used[b];
      s.vertices = static_cast<int>(phi.color_class(used[a]).size() + phi.color_class(used[b]).size());
      s.components = s.vertices;
      stats.push_back(s);
    }
  }
  // One union-find per pair; vertices sit in several pairs.
  std::vector<UnionFind> uf(stats.size(), UnionFind(g.n()));
  for (const Edge& e : g.edges()) {
    const int a = std::min(phi[e.u], phi[e.v]);
    const int b = std::max(phi[e.u], phi[e.v]);
    const std::size_t p = slot.at({a, b});
    ++stats[p].edges;
    if (uf[p].unite(e.u, e.v)) --stats[p].components;
  }
  return stats;
}

int m_value(const PlaneGraph& g, const Coloring& phi) {
  const auto stats = pair_statistics(g, phi);
  long long sum = 0;
  for (const auto& s : stats) sum += s.components;
  const long long used = phi.num_used();
  return static_cast<int>(static_cast<long long>(g.num_edges()) - (used - 1) * g.n() + sum);
}

Bound applicable_bound(const PlaneGraph& g, const Coloring& phi) {
  const int k = phi.num_used();
  if (k == 4 && g.n() >= 5 && is_four_connected_triangulation(g)) return {g.n() - 5, "n-5"};
  return {static_cast<long long>(g.n()) - k, "n-k"};
}

bool is_u_acyclic(int n, const EdgeSet& edges, std::span<const Vertex> u) {
  UnionFind uf(n);
  for (std::size_t i = 1; i < u.size(); ++i) uf.unite(u[0], u[i]);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n) return false;
    if (!uf.unite(e.u, e.v)) return false;
  }
  return true;
}

std::optional<TwoColoredCycle> surviving_cycle(const PlaneGraph& g, const Coloring& phi,
                                               const EdgeSet& edges) {
  return two_colored_cycle(g.without_edges(edges), phi);
}

TransversalCertificate certify(const PlaneGraph& g, const Coloring& phi, EdgeSet edges,
                               std::span<const Vertex> u_set, std::string method) {
  TransversalCertificate cert;
  cert.size = edges.size();
  cert.kills_all = !surviving_cycle(g, phi, edges);
  cert.forest = is_u_acyclic(g.n(), edges, {});
  cert.u_set.assign(u_set.begin(), u_set.end());
  cert.no_u_path = cert.forest && is_u_acyclic(g.n(), edges, u_set);
  const Bound bound = applicable_bound(g, phi);
  cert.bound = bound.value;
  cert.bound_kind = bound.kind;
  cert.bound_met = static_cast<long long>(cert.size) <= bound.value;
  cert.optimal = static_cast<int>(cert.size) == m_value(g, phi);
  cert.method = std::move(method);
  cert.edges = std::move(edges);
  return cert;
}

TransversalCertificate min_transversal(const PlaneGraph& g, const Coloring& phi,
                                       const EdgeSet& avoid) {
  if (!is_proper(g, phi)) throw PreconditionError("min_transversal needs a proper colouring");
  for (const Edge& e : avoid) {
    if (!g.has_edge(e)) throw PreconditionError("avoidance edge " + to_string(e) + " is not in G");
  }
  // Colour pairs are edge-disjoint, so one union-find per pair suffices; a
  // map keyed by the pair keeps them apart.
  std::map<std::pair<int, int>, UnionFind> forests;
  auto pair_of = [&](const Edge& e) {
    return std::pair{std::min(phi[e.u], phi[e.v]), std::max(phi[e.u], phi[e.v])};
  };
  auto forest_for = [&](const Edge& e) -> UnionFind& {
    auto key = pair_of(e);
    auto it = forests.find(key);
    if (it == forests.end()) it = forests.emplace(key, UnionFind(g.n())).first;
    return it->second;
  };
  for (const Edge& e : avoid) {
    if (!forest_for(e).unite(e.u, e.v)) {
      auto [a, b] = pair_of(e);
      throw PreconditionError("avoidance set contains a cycle in G_" + std::to_string(a) + "," +
                              std::to_string(b));
    }
  }
  EdgeSet out;
  for (const Edge& e : g.edges()) {
    if (avoid.contains(e)) continue;
    if (!forest_for(e).unite(e.u, e.v)) out.insert(e);
  }
  return certify(g, phi, std::move(out), {}, "spanning-forest");
}

Composition compose_over_decomposition(const PlaneGraph& g, const Coloring& phi) {
  if (!is_triangulation(g)) throw NotTriangulation("compose_over_decomposition needs a triangulation");
  if (!is_proper(g, phi)) throw PreconditionError("compose_over_decomposition needs a proper colouring");
  Composition out;
  out.tree = decompose(g);
  for (std::size_t p = 0; p < out.tree.pieces.size(); ++p) {
    const int piece_m = m_value(out.tree.pieces[p], phi.restricted(out.tree.piece_maps[p]));
    out.per_piece.push_back(piece_m);
    out.total += piece_m;
  }
  return out;
}

std::string to_string(Equality e) {
  switch (e) {
    case Equality::EqualsNMinus3:
      return "EQUALS_N_MINUS_3";
    case Equality::EqualsNMinus4:
      return "EQUALS_N_MINUS_4";
    case Equality::Below:
      return "BELOW";
  }
  return "?";
}

EqualityResult characterize_equality(const PlaneGraph& g, const Coloring& phi) {
  if (!is_triangulation(g)) throw NotTriangulation("characterize_equality needs a triangulation");
  EqualityResult r;
  r.m = m_value(g, phi);
  const int n = g.n();
  if (r.m > n - 3) throw InternalError("m(G, phi) exceeds n - 3 on a triangulation");
  r.by_value = r.m == n - 3   ? Equality::EqualsNMinus3
               : r.m == n - 4 ? Equality::EqualsNMinus4
                              : Equality::Below;

  if (phi.num_used() == 3) {
    r.by_structure = Equality::EqualsNMinus3;
  } else if (n >= 4) {
    // Exactly one piece is a K4 (rainbow, being proper) and every other piece
    // sees only 3 colours.
    const DecompositionTree tree = decompose(g);
    int k4_pieces = 0;
    int three_coloured = 0;
    for (std::size_t p = 0; p < tree.pieces.size(); ++p) {
      if (tree.pieces[p].n() == 4) {
        ++k4_pieces;
      } else if (phi.restricted(tree.piece_maps[p]).num_used() == 3) {
        ++three_coloured;
      }
    }
    const bool hit = k4_pieces == 1 && three_coloured == static_cast<int>(tree.pieces.size()) - 1;
    r.by_structure = hit ? Equality::EqualsNMinus4 : Equality::Below;
  }
  r.agrees = r.by_value == r.by_structure;
  return r;
}

ValidationReport verify_certificate(const PlaneGraph& g, const Coloring& phi,
                                    const TransversalCertificate& cert, bool u_acyclic) {
  ValidationReport report;
  bool in_graph = true;
  std::string stray;
  for (const Edge& e : cert.edges) {
    if (!g.has_edge(e)) {
      in_graph = false;
      stray = to_string(e);
      break;
    }
  }
  report.add("edges-in-graph", in_graph, in_graph ? "" : "edge " + stray + " not in G");
  report.add("size", cert.size == cert.edges.size(),
             "claimed " + std::to_string(cert.size) + ", actual " + std::to_string(cert.edges.size()));
  if (!in_graph) return report;

  const auto witness = surviving_cycle(g, phi, cert.edges);
  std::string cycle_text;
  if (witness) {
    cycle_text = "2-coloured cycle (" + std::to_string(witness->color_a) + "," +
                 std::to_string(witness->color_b) + "):";
    for (Vertex x : witness->cycle) cycle_text += " " + std::to_string(x);
  }
  report.add("kills-all", !witness, cycle_text);
  const bool forest = is_u_acyclic(g.n(), cert.edges, {});
  const bool no_u_path = forest && is_u_acyclic(g.n(), cert.edges, cert.u_set);
  if (u_acyclic) {
    report.add("forest", forest, forest ? "" : "E' contains a cycle");
    report.add("no-u-path", no_u_path, no_u_path ? "" : "E' joins two vertices of U or has a cycle");
  }
  // n - |used| holds for every U-acyclic transversal; the sharper n - 5 only
  // for optimal ones, so it is reported but not required.
  const long long size = static_cast<long long>(cert.edges.size());
  const long long general = g.n() - phi.num_used();
  const Bound bound = applicable_bound(g, phi);
  const bool met = size <= bound.value;
  std::string bound_text = std::to_string(size) + (size <= general ? " <= " : " > ") + "n-k = " + std::to_string(general);
  if (bound.kind != "n-k") bound_text += "; " + bound.kind + " = " + std::to_string(bound.value) + (met ? " met" : " not met");
  report.add("bound", size <= general, bound_text);
  const bool flags = cert.kills_all == !witness && cert.forest == forest &&
                     cert.no_u_path == no_u_path && cert.bound_met == met;
  report.add("claimed-flags", flags, flags ? "" : "stored flags disagree with recomputation");
  return report;
}

}  // namespace dacol

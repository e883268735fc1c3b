#include "dacol/oracles.hpp"

#include <cstdlib>
#include <functional>
#include <map>

#include "dacol/union_find.hpp"

namespace dacol {

namespace {

void guard_n(const PlaneGraph& g, const OracleLimits& limits, const char* what) {
  if (g.n() > limits.max_n) {
    throw SizeGuardExceeded(std::string(what) + ": n = " + std::to_string(g.n()) + " exceeds max_n = " +
                            std::to_string(limits.max_n) + " (raise ORACLE_MAX_N at your own risk)");
  }
}

void guard_edges(const PlaneGraph& g, const OracleLimits& limits, const char* what) {
  guard_n(g, limits, what);
  if (static_cast<int>(g.num_edges()) > limits.max_edges) {
    throw SizeGuardExceeded(std::string(what) + ": |E| = " + std::to_string(g.num_edges()) +
                            " exceeds max_edges = " + std::to_string(limits.max_edges));
  }
}

// Calls visit(subset) for every s-subset of items (as index lists) until it
// returns true. Returns whether some call did.
bool any_subset(int items, int s, const std::function<bool(const std::vector<int>&)>& visit) {
  if (s > items) return false;
  std::vector<int> pick(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i) pick[i] = i;
  while (true) {
    if (visit(pick)) return true;
    int i = s - 1;
    while (i >= 0 && pick[i] == items - s + i) --i;
    if (i < 0) return false;
    ++pick[i];
    for (int j = i + 1; j < s; ++j) pick[j] = pick[j - 1] + 1;
  }
}

bool acyclic_without(int n, const std::vector<Edge>& edges, const std::vector<int>& removed) {
  UnionFind uf(n);
  std::size_t r = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (r < removed.size() && removed[r] == static_cast<int>(i)) {
      ++r;
      continue;
    }
    if (!uf.unite(edges[i].u, edges[i].v)) return false;
  }
  return true;
}

std::vector<std::vector<Edge>> edges_by_pair(const PlaneGraph& g, const Coloring& phi) {
  if (!is_proper(g, phi)) throw PreconditionError("oracle needs a proper colouring");
  std::map<std::pair<int, int>, std::vector<Edge>> groups;
  for (const Edge& e : g.edges()) {
    groups[{std::min(phi[e.u], phi[e.v]), std::max(phi[e.u], phi[e.v])}].push_back(e);
  }
  std::vector<std::vector<Edge>> out;
  for (auto& [key, es] : groups) out.push_back(std::move(es));
  return out;
}

// All minimum deletion sets turning `edges` into a forest (all_sets), and
// their common size.
int min_forest_deletions(int n, const std::vector<Edge>& edges, std::vector<EdgeSet>* all_sets) {
  const int m = static_cast<int>(edges.size());
  for (int s = 0; s <= m; ++s) {
    bool found = false;
    any_subset(m, s, [&](const std::vector<int>& pick) {
      if (!acyclic_without(n, edges, pick)) return false;
      found = true;
      if (!all_sets) return true;
      EdgeSet set;
      for (int i : pick) set.insert(edges[i]);
      all_sets->push_back(std::move(set));
      return false;
    });
    if (found) return s;
  }
  throw InternalError("no deletion set makes a graph acyclic");
}

bool acyclically_colourable(const PlaneGraph& h, int k) {
  const SearchResult r = search_coloring(h, k, true);
  if (r.status == SearchStatus::BudgetExhausted) {
    throw SizeGuardExceeded("acyclic colouring search ran out of budget");
  }
  return r.status == SearchStatus::Found;
}

int smallest_fix(const PlaneGraph& g, const std::function<bool(const EdgeSet&)>& works) {
  const auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  for (int s = 0; s <= m; ++s) {
    const bool hit = any_subset(m, s, [&](const std::vector<int>& pick) {
      EdgeSet set;
      for (int i : pick) set.insert(edges[i]);
      return works(set);
    });
    if (hit) return s;
  }
  throw InternalError("no edge set fixes the graph");
}

}  // namespace

OracleLimits OracleLimits::from_env() {
  OracleLimits limits;
  if (const char* raw = std::getenv("ORACLE_MAX_N")) {
    char* end = nullptr;
    const long value = std::strtol(raw, &end, 10);
    if (end != raw && *end == '\0' && value > 0) limits.max_n = static_cast<int>(value);
  }
  return limits;
}

int brute_m(const PlaneGraph& g, const Coloring& phi, const OracleLimits& limits) {
  guard_n(g, limits, "brute_m");
  int total = 0;
  for (const auto& es : edges_by_pair(g, phi)) total += min_forest_deletions(g.n(), es, nullptr);
  return total;
}

OracleValue brute_m_k(const PlaneGraph& g, int k, const OracleLimits& limits) {
  guard_n(g, limits, "brute_m_k");
  OracleValue best;
  const bool done = for_each_coloring(g, k, false, [&](const Coloring& phi) {
    const int m = brute_m(g, phi, limits);
    if (!best || m < *best) best = m;
    return *best > 0;
  });
  if (!done) throw SizeGuardExceeded("brute_m_k: colouring enumeration ran out of budget");
  return best;
}

int brute_m_prime(const PlaneGraph& g, int k, const OracleLimits& limits) {
  guard_edges(g, limits, "brute_m_prime");
  return smallest_fix(g, [&](const EdgeSet& set) { return acyclically_colourable(g.without_edges(set), k); });
}

PlaneGraph subdivide(const PlaneGraph& g, const EdgeSet& edges) {
  std::vector<Edge> out;
  Vertex next = g.n();
  for (const Edge& e : g.edges()) {
    if (!edges.contains(e)) {
      out.push_back(e);
      continue;
    }
    out.push_back(make_edge(e.u, next));
    out.push_back(make_edge(e.v, next));
    ++next;
  }
  return PlaneGraph(next, out);
}

int brute_m_dprime(const PlaneGraph& g, int k, const OracleLimits& limits) {
  guard_edges(g, limits, "brute_m_dprime");
  return smallest_fix(g, [&](const EdgeSet& set) { return acyclically_colourable(subdivide(g, set), k); });
}

std::optional<TransversalCertificate> brute_optimal_u_acyclic(const PlaneGraph& g, const Coloring& phi,
                                                              std::span<const Vertex> u,
                                                              const OracleLimits& limits) {
  guard_n(g, limits, "brute_optimal_u_acyclic");
  require_u_clique(g, u);
  std::vector<std::vector<EdgeSet>> options;
  for (const auto& es : edges_by_pair(g, phi)) {
    std::vector<EdgeSet> sets;
    min_forest_deletions(g.n(), es, &sets);
    options.push_back(std::move(sets));
  }
  std::optional<EdgeSet> found;
  std::function<void(std::size_t, const EdgeSet&)> dfs = [&](std::size_t p, const EdgeSet& acc) {
    if (found) return;
    if (!is_u_acyclic(g.n(), acc, u)) return;
    if (p == options.size()) {
      found = acc;
      return;
    }
    for (const auto& s : options[p]) {
      EdgeSet next = acc;
      next.insert(s.begin(), s.end());
      dfs(p + 1, next);
      if (found) return;
    }
  };
  dfs(0, {});
  if (!found) return std::nullopt;
  return certify(g, phi, *found, u, "exhaustive");
}

}  // namespace dacol

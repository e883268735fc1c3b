#pragma once

// Small reference computations shared by the tests. They use nothing from
// the library beyond the graph accessors.

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "dacol/graph.hpp"

namespace testing_support {

using dacol::Edge;
using dacol::Vertex;

// Components of the graph (n, edges) by depth-first search.
inline int components(int n, const std::vector<Edge>& edges) {
  std::vector<std::vector<int>> adj(n);
  for (const Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<char> seen(n, 0);
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++count;
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[x]) {
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
  }
  return count;
}

// A graph is a forest iff |E| = n - components.
inline bool is_forest(int n, const std::vector<Edge>& edges) {
  return static_cast<int>(edges.size()) == n - components(n, edges);
}

// 2-connected: at least 3 vertices, connected, and still connected after
// removing any single vertex.
inline bool two_connected(int n, const std::vector<Edge>& edges) {
  if (n < 3 || components(n, edges) != 1) return false;
  for (int cut = 0; cut < n; ++cut) {
    std::vector<Edge> rest;
    for (const Edge& e : edges) {
      if (e.u == cut || e.v == cut) continue;
      rest.push_back({e.u < cut ? e.u : e.u - 1, e.v < cut ? e.v : e.v - 1});
    }
    if (components(n - 1, rest) != 1) return false;
  }
  return true;
}

inline std::vector<Edge> complete_graph(int n) {
  std::vector<Edge> out;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) out.push_back({a, b});
  }
  return out;
}

// Every assignment of colours 1..k to n vertices, as plain vectors.
inline void for_each_assignment(int n, int k, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> col(n, 1);
  while (true) {
    visit(col);
    int i = 0;
    while (i < n && col[i] == k) col[i++] = 1;
    if (i == n) return;
    ++col[i];
  }
}

// Edges of G whose endpoints get colours in {a, b}.
inline std::vector<Edge> pair_edges(const std::vector<Edge>& edges, const std::vector<int>& col, int a, int b) {
  std::vector<Edge> out;
  for (const Edge& e : edges) {
    const int x = col[e.u], y = col[e.v];
    if ((x == a && y == b) || (x == b && y == a)) out.push_back(e);
  }
  return out;
}

// True when some colour pair spans a cycle.
inline bool has_bichromatic_cycle(int n, const std::vector<Edge>& edges, const std::vector<int>& col, int k) {
  for (int a = 1; a <= k; ++a) {
    for (int b = a + 1; b <= k; ++b) {
      if (!is_forest(n, pair_edges(edges, col, a, b))) return true;
    }
  }
  return false;
}

inline bool proper(const std::vector<Edge>& edges, const std::vector<int>& col) {
  return std::all_of(edges.begin(), edges.end(), [&](const Edge& e) { return col[e.u] != col[e.v]; });
}

}  // namespace testing_support

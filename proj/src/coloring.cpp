#include "dacol/coloring.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "dacol/planar.hpp"
#include "dacol/union_find.hpp"

namespace dacol {

Coloring::Coloring(std::vector<int> colors, int palette) : color(std::move(colors)), k(palette) {}

bool Coloring::is_total() const {
  return std::all_of(color.begin(), color.end(), [&](int c) { return c >= 1 && c <= k; });
}

std::vector<int> Coloring::used() const {
  std::set<int> s(color.begin(), color.end());
  s.erase(0);
  return {s.begin(), s.end()};
}

std::vector<Vertex> Coloring::color_class(int c) const {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < color.size(); ++v) {
    if (color[v] == c) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

Coloring Coloring::restricted(std::span<const Vertex> to_parent) const {
  std::vector<int> sub;
  sub.reserve(to_parent.size());
  for (Vertex x : to_parent) sub.push_back(color.at(x));
  return {std::move(sub), k};
}

Coloring canonical_form(const Coloring& phi) {
  std::vector<int> relabel(static_cast<std::size_t>(phi.k) + 1, 0);
  int next = 0;
  Coloring out = phi;
  for (auto& c : out.color) {
    if (c <= 0) continue;
    if (!relabel[c]) relabel[c] = ++next;
    c = relabel[c];
  }
  return out;
}

void require_total(const PlaneGraph& g, const Coloring& phi) {
  if (phi.size() != static_cast<std::size_t>(g.n())) {
    throw PreconditionError("colouring covers " + std::to_string(phi.size()) + " of " +
                            std::to_string(g.n()) + " vertices");
  }
  if (!phi.is_total()) throw PreconditionError("partial colouring (colour outside 1..k)");
}

bool is_proper(const PlaneGraph& g, const Coloring& phi) {
  require_total(g, phi);
  for (const Edge& e : g.edges()) {
    if (phi[e.u] == phi[e.v]) return false;
  }
  return true;
}

Subgraph bichromatic_subgraph(const PlaneGraph& g, const Coloring& phi, int i, int j) {
  if (i == j) throw PreconditionError("bichromatic_subgraph needs two distinct colours");
  require_total(g, phi);
  std::vector<Vertex> verts;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (phi[v] == i || phi[v] == j) verts.push_back(v);
  }
  return g.induced(verts);
}

namespace {

// Tree path between a and b in the forest given by parent links of a BFS.
std::vector<Vertex> forest_path(const std::vector<std::vector<Vertex>>& forest, Vertex a, Vertex b) {
  std::vector<Vertex> parent(forest.size(), -2);
  std::queue<Vertex> q;
  q.push(a);
  parent[a] = -1;
  while (!q.empty()) {
    Vertex x = q.front();
    q.pop();
    if (x == b) break;
    for (Vertex y : forest[x]) {
      if (parent[y] == -2) {
        parent[y] = x;
        q.push(y);
      }
    }
  }
  std::vector<Vertex> path;
  for (Vertex x = b; x != -1; x = parent[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

std::optional<TwoColoredCycle> two_colored_cycle(const PlaneGraph& g, const Coloring& phi) {
  if (!is_proper(g, phi)) throw PreconditionError("two_colored_cycle needs a proper colouring");
  const auto used = phi.used();
  for (std::size_t a = 0; a < used.size(); ++a) {
    for (std::size_t b = a + 1; b < used.size(); ++b) {
      const int ci = used[a], cj = used[b];
      UnionFind uf(g.n());
      std::vector<std::vector<Vertex>> forest(static_cast<std::size_t>(g.n()));
      for (const Edge& e : g.edges()) {
        const int cu = phi[e.u], cv = phi[e.v];
        if (!((cu == ci && cv == cj) || (cu == cj && cv == ci))) continue;
        if (!uf.unite(e.u, e.v)) {
          return TwoColoredCycle{ci, cj, forest_path(forest, e.u, e.v)};
        }
        forest[e.u].push_back(e.v);
        forest[e.v].push_back(e.u);
      }
    }
  }
  return std::nullopt;
}

bool is_acyclic_coloring(const PlaneGraph& g, const Coloring& phi) {
  return is_proper(g, phi) && !two_colored_cycle(g, phi);
}

std::optional<Coloring> eulerian_three_coloring(const PlaneGraph& g) {
  if (!is_triangulation(g)) throw NotTriangulation("eulerian_three_coloring needs a triangulation");
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.degree(v) % 2 != 0) return std::nullopt;
  }
  std::vector<int> col(static_cast<std::size_t>(g.n()), 0);
  const Triangle seed = triangles(g).front();
  std::queue<Edge> work;
  for (int i = 0; i < 3; ++i) col[seed[i]] = i + 1;
  work.push(make_edge(seed[0], seed[1]));
  work.push(make_edge(seed[0], seed[2]));
  work.push(make_edge(seed[1], seed[2]));
  while (!work.empty()) {
    Edge e = work.front();
    work.pop();
    const int forced = 6 - col[e.u] - col[e.v];
    for (Vertex w : g.neighbors(e.u)) {
      if (!g.adjacent(e.v, w)) continue;
      if (col[w] == 0) {
        col[w] = forced;
        for (Vertex x : g.neighbors(w)) {
          if (col[x] != 0) work.push(make_edge(w, x));
        }
      } else if (col[w] != forced) {
        throw InternalError("forced 3-colouring disagrees with itself at vertex " +
                            std::to_string(w));
      }
    }
  }
  if (std::find(col.begin(), col.end(), 0) != col.end()) {
    throw InternalError("3-colouring propagation did not reach every vertex");
  }
  Coloring out(std::move(col), 3);
  if (!is_proper(g, out)) throw InternalError("propagated 3-colouring is not proper");
  return out;
}

Coloring apex_recoloring(const PlaneGraph& g, const Coloring& phi3, Vertex v) {
  if (!is_proper(g, phi3)) throw PreconditionError("apex_recoloring needs a proper colouring");
  const auto used = phi3.used();
  if (used != std::vector<int>{1, 2, 3}) {
    throw PreconditionError("apex_recoloring needs a colouring using exactly colours 1, 2, 3");
  }
  if (v < 0 || v >= g.n()) throw PreconditionError("vertex out of range");
  Coloring out = phi3;
  out.k = 4;
  out.color[v] = 4;
  return out;
}

namespace {

class Backtracker {
 public:
  Backtracker(const PlaneGraph& g, int k, bool acyclic, std::uint64_t budget)
      : g_(g), k_(k), acyclic_(acyclic), budget_(budget), col_(static_cast<std::size_t>(g.n()), 0) {}

  // Returns false when the budget is exhausted.
  bool run(const std::function<bool(const Coloring&)>& visit) {
    visit_ = &visit;
    stopped_ = false;
    exhausted_ = false;
    if (k_ < 1) return true;
    descend(0, 0);
    return !exhausted_;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  // True if colouring v with c closes a cycle in some G_{c,d}.
  bool closes_cycle(Vertex v, int c) {
    for (int d = 1; d <= k_; ++d) {
      if (d == c) continue;
      std::vector<Vertex> hits;
      for (Vertex w : g_.neighbors(v)) {
        if (col_[w] == d) hits.push_back(w);
      }
      if (hits.size() < 2) continue;
      // A cycle closes iff two of the hits already share a component of
      // G_{c,d} - v.
      std::vector<char> seen(static_cast<std::size_t>(g_.n()), 0);
      seen[v] = 1;
      for (Vertex start : hits) {
        if (seen[start]) return true;
        seen[start] = 1;
        std::vector<Vertex> stack{start};
        while (!stack.empty()) {
          Vertex x = stack.back();
          stack.pop_back();
          for (Vertex y : g_.neighbors(x)) {
            if (seen[y] || (col_[y] != c && col_[y] != d)) continue;
            seen[y] = 1;
            stack.push_back(y);
          }
        }
      }
    }
    return false;
  }

  void descend(Vertex v, int max_used) {
    if (stopped_) return;
    if (v == g_.n()) {
      if (!(*visit_)(Coloring(col_, k_))) stopped_ = true;
      return;
    }
    const int limit = std::min(k_, max_used + 1);
    for (int c = 1; c <= limit && !stopped_; ++c) {
      if (++nodes_ > budget_) {
        exhausted_ = stopped_ = true;
        return;
      }
      bool clash = false;
      for (Vertex w : g_.neighbors(v)) {
        if (col_[w] == c) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      if (acyclic_ && closes_cycle(v, c)) continue;
      col_[v] = c;
      descend(v + 1, std::max(max_used, c));
      col_[v] = 0;
    }
  }

  const PlaneGraph& g_;
  int k_;
  bool acyclic_;
  std::uint64_t budget_;
  std::vector<int> col_;
  std::uint64_t nodes_ = 0;
  const std::function<bool(const Coloring&)>* visit_ = nullptr;
  bool stopped_ = false;
  bool exhausted_ = false;
};

}  // namespace

bool for_each_coloring(const PlaneGraph& g, int k, bool require_acyclic,
                       const std::function<bool(const Coloring&)>& visit, std::uint64_t node_budget) {
  Backtracker bt(g, k, require_acyclic, node_budget);
  return bt.run(visit);
}

SearchResult search_coloring(const PlaneGraph& g, int k, bool require_acyclic,
                             std::uint64_t node_budget) {
  if (k < 1) throw PreconditionError("search_coloring needs k >= 1");
  SearchResult result;
  Backtracker bt(g, k, require_acyclic, node_budget);
  const bool completed = bt.run([&](const Coloring& c) {
    result.coloring = c;
    return false;
  });
  result.nodes = bt.nodes();
  if (result.coloring) {
    result.status = SearchStatus::Found;
  } else {
    result.status = completed ? SearchStatus::NoColoring : SearchStatus::BudgetExhausted;
  }
  return result;
}

std::optional<Coloring> random_proper_coloring(const PlaneGraph& g, int k, std::mt19937_64& rng) {
  const int n = g.n();
  std::vector<int> col(static_cast<std::size_t>(n), 0);
  std::vector<int> palette(static_cast<std::size_t>(std::max(k, 0)));
  for (int c = 0; c < k; ++c) palette[c] = c + 1;
  std::vector<std::uint64_t> tie(static_cast<std::size_t>(n));
  for (auto& t : tie) t = rng();
  auto options = [&](Vertex v) {
    int free = 0;
    for (int c = 1; c <= k; ++c) {
      bool clash = false;
      for (Vertex w : g.neighbors(v)) clash = clash || col[w] == c;
      free += !clash;
    }
    return free;
  };
  // Most constrained uncoloured vertex first; a vertex without options
  // means the branch is dead.
  std::function<bool(int)> go = [&](int placed) -> bool {
    if (placed == n) return true;
    Vertex best = -1;
    int best_free = k + 1;
    for (Vertex v = 0; v < n; ++v) {
      if (col[v]) continue;
      const int free = options(v);
      if (free == 0) return false;
      if (free < best_free || (free == best_free && tie[v] < tie[best])) {
        best = v;
        best_free = free;
      }
    }
    auto order = palette;
    std::shuffle(order.begin(), order.end(), rng);
    for (int c : order) {
      bool clash = false;
      for (Vertex w : g.neighbors(best)) clash = clash || col[w] == c;
      if (clash) continue;
      col[best] = c;
      if (go(placed + 1)) return true;
      col[best] = 0;
    }
    return false;
  };
  if (!go(0)) return std::nullopt;
  return Coloring(std::move(col), k);
}

}  // namespace dacol

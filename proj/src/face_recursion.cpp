#include <algorithm>
#include <set>

#include "dacol/transversal.hpp"

namespace dacol {

namespace {

bool valid_for(const PlaneGraph& g, const Coloring& phi, const EdgeSet& edges,
               std::span<const Vertex> f) {
  return is_u_acyclic(g.n(), edges, f) && !surviving_cycle(g, phi, edges);
}

// Smallest valid set base ∪ S with S drawn from `pool`, |S| <= max_extra.
std::optional<EdgeSet> smallest_extension(const PlaneGraph& g, const Coloring& phi,
                                          const EdgeSet& base, const std::vector<Edge>& pool,
                                          std::span<const Vertex> f, int max_extra) {
  const int p = static_cast<int>(pool.size());
  for (int size = 0; size <= std::min(max_extra, p); ++size) {
    std::vector<int> pick(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      EdgeSet trial = base;
      for (int i : pick) trial.insert(pool[i]);
      if (valid_for(g, phi, trial, f)) return trial;
      int i = size - 1;
      while (i >= 0 && pick[i] == p - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

EdgeSet brute_force(const PlaneGraph& g, const Coloring& phi, std::span<const Vertex> f) {
  const auto all = g.edges();
  auto found = smallest_extension(g, phi, {}, all, f, static_cast<int>(all.size()));
  if (!found) throw InternalError("no F-acyclic transversal on a small triangulation");
  return *found;
}

std::vector<Vertex> inverse(const std::vector<Vertex>& old_to_new, int new_n) {
  std::vector<Vertex> back(static_cast<std::size_t>(new_n), -1);
  for (std::size_t x = 0; x < old_to_new.size(); ++x) {
    if (old_to_new[x] >= 0 && back[old_to_new[x]] == -1) back[old_to_new[x]] = static_cast<Vertex>(x);
  }
  return back;
}

std::vector<Vertex> map_set(const std::vector<Vertex>& old_to_new, std::span<const Vertex> f) {
  std::set<Vertex> out;
  for (Vertex x : f) out.insert(old_to_new[x]);
  return {out.begin(), out.end()};
}

struct Recursion {
  bool check_each_level;

  EdgeSet run(const PlaneGraph& input, const Coloring& phi, std::span<const Vertex> f) {
    PlaneGraph g = embed_triangulation(input);
    EdgeSet out = step(g, phi, f);
    if (!valid_for(g, phi, out, f)) throw InternalError("face recursion produced an invalid set");
    if (check_each_level) {
      const Bound bound = applicable_bound(g, phi);
      if (static_cast<long long>(out.size()) > static_cast<long long>(g.n()) - phi.num_used()) {
        throw InternalError("face recursion level exceeds n - |used| (" + std::to_string(out.size()) +
                            " > " + std::to_string(g.n() - phi.num_used()) + ", " + bound.kind + ")");
      }
    }
    return out;
  }

  EdgeSet step(const PlaneGraph& g, const Coloring& phi, std::span<const Vertex> f) {
    if (g.n() <= 6) return brute_force(g, phi, f);
    if (auto split = split_at_triangle(g, phi, f)) return *split;
    std::vector<Vertex> order;
    for (Vertex v = 0; v < g.n(); ++v) {
      if (g.degree(v) <= 5 && std::find(f.begin(), f.end(), v) == f.end()) order.push_back(v);
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
    for (Vertex v : order) {
      if (auto done = reduce_at(g, phi, f, v)) return *done;
    }
    throw InternalError("face recursion found no reducible vertex");
  }

  // Both sides of the first separating triangle T: the side holding F keeps
  // F, the other side takes T as its forbidden set.
  std::optional<EdgeSet> split_at_triangle(const PlaneGraph& g, const Coloring& phi,
                                           std::span<const Vertex> f) {
    for (const auto& tri : triangles(g)) {
      std::vector<char> alive(static_cast<std::size_t>(g.n()), 1);
      for (Vertex x : tri) alive[x] = 0;
      std::vector<int> comp(static_cast<std::size_t>(g.n()), -1);
      int comps = 0;
      for (Vertex s = 0; s < g.n(); ++s) {
        if (!alive[s] || comp[s] >= 0) continue;
        std::vector<Vertex> stack{s};
        comp[s] = comps;
        while (!stack.empty()) {
          Vertex x = stack.back();
          stack.pop_back();
          for (Vertex y : g.neighbors(x)) {
            if (alive[y] && comp[y] < 0) {
              comp[y] = comps;
              stack.push_back(y);
            }
          }
        }
        ++comps;
      }
      if (comps < 2) continue;
      int f_side = 0;
      for (Vertex x : f) {
        if (comp[x] >= 0) f_side = comp[x];
      }
      EdgeSet out;
      for (int side : {f_side, 1 - f_side}) {
        std::vector<Vertex> verts;
        for (Vertex x = 0; x < g.n(); ++x) {
          if (comp[x] == side || comp[x] < 0) verts.push_back(x);
        }
        Subgraph sub = g.induced(verts);
        std::vector<Vertex> to_sub(static_cast<std::size_t>(g.n()), -1);
        for (std::size_t i = 0; i < sub.to_parent.size(); ++i) to_sub[sub.to_parent[i]] = static_cast<Vertex>(i);
        std::vector<Vertex> forbid = side == f_side ? map_set(to_sub, f)
                                                    : map_set(to_sub, std::span<const Vertex>(tri));
        EdgeSet part = run(sub.graph, phi.restricted(sub.to_parent), forbid);
        for (const Edge& e : part) out.insert(make_edge(sub.to_parent[e.u], sub.to_parent[e.v]));
      }
      return out;
    }
    return std::nullopt;
  }

  std::optional<EdgeSet> reduce_at(const PlaneGraph& g, const Coloring& phi,
                                   std::span<const Vertex> f, Vertex v) {
    const auto& rim = g.rotation(v);
    const int d = static_cast<int>(rim.size());
    auto r = [&](int i) { return rim[((i % d) + d) % d]; };
    auto common_ok = [&](Vertex a, Vertex b, std::initializer_list<Vertex> allowed) {
      for (Vertex w : g.neighbors(a)) {
        if (!g.adjacent(b, w)) continue;
        if (std::find(allowed.begin(), allowed.end(), w) == allowed.end()) return false;
      }
      return true;
    };

    if (d == 4) {
      for (int s = 0; s < 2; ++s) {
        const Vertex v1 = r(s), v2 = r(s + 1), v3 = r(s + 2), v4 = r(s + 3);
        if (g.adjacent(v1, v3) || !common_ok(v1, v3, {v, v2, v4})) continue;
        if (phi[v1] != phi[v3]) {
          const std::array<Edge, 1> chords{make_edge(v1, v3)};
          if (auto done = by_deletion(g, phi, f, v, chords)) return done;
        } else if (auto done = by_contraction(g, phi, f, v1, v, v3)) {
          return done;
        }
      }
      return std::nullopt;
    }

    std::set<int> rim_colours;
    for (Vertex x : rim) rim_colours.insert(phi[x]);
    if (rim_colours.size() == 3) {
      // Colour counts (2, 2, 1): v5 is the singleton, v1..v4 alternate.
      int s5 = 0;
      for (int i = 0; i < d; ++i) {
        int same = 0;
        for (Vertex x : rim) same += phi[x] == phi[r(i)];
        if (same == 1) s5 = i;
      }
      const Vertex v1 = r(s5 + 1), v2 = r(s5 + 2), v3 = r(s5 + 3), v4 = r(s5 + 4);
      if (!g.adjacent(v1, v3) && common_ok(v1, v3, {v, v2})) {
        if (auto done = by_contraction(g, phi, f, v1, v, v3)) return done;
      }
      if (!g.adjacent(v2, v4) && common_ok(v2, v4, {v, v3})) {
        if (auto done = by_contraction(g, phi, f, v2, v, v4)) return done;
      }
      return std::nullopt;
    }
    // At least 4 colours on the rim: pick v5 so that v1..v4 are pairwise distinct.
    for (int s5 = 0; s5 < d; ++s5) {
      std::set<int> rest;
      for (int i = 1; i <= 4; ++i) rest.insert(phi[r(s5 + i)]);
      if (rest.size() != 4) continue;
      const Vertex v1 = r(s5 + 1), v3 = r(s5 + 3), v4 = r(s5 + 4);
      if (g.adjacent(v1, v3) || g.adjacent(v1, v4)) continue;
      const std::array<Edge, 2> chords{make_edge(v1, v3), make_edge(v1, v4)};
      if (auto done = by_deletion(g, phi, f, v, chords)) return done;
    }
    return std::nullopt;
  }

  std::optional<EdgeSet> by_deletion(const PlaneGraph& g, const Coloring& phi,
                                     std::span<const Vertex> f, Vertex v, std::span<const Edge> chords) {
    Rewrite rw;
    try {
      rw = delete_and_retriangulate(g, v, chords);
    } catch (const PreconditionError&) {
      return std::nullopt;
    }
    const auto back = inverse(rw.old_to_new, rw.graph.n());
    Coloring sub = phi.restricted(back);
    EdgeSet lower = run(rw.graph, sub, map_set(rw.old_to_new, f));

    EdgeSet base;
    for (const Edge& e : lower) {
      const Edge lifted = make_edge(back[e.u], back[e.v]);
      if (g.has_edge(lifted)) base.insert(lifted);
    }
    std::vector<Edge> pool;
    for (Vertex x : g.rotation(v)) pool.push_back(make_edge(v, x));
    return smallest_extension(g, phi, base, pool, f, 3);
  }

  std::optional<EdgeSet> by_contraction(const PlaneGraph& g, const Coloring& phi,
                                        std::span<const Vertex> f, Vertex x, Vertex v, Vertex y) {
    std::optional<Contraction> c;
    try {
      c = contract_path(g, x, v, y);
    } catch (const PreconditionError&) {
      return std::nullopt;
    }
    const auto back = inverse(c->old_to_new, c->graph.n());
    Coloring sub = phi.restricted(back);
    sub.color[c->merged] = phi[x];
    EdgeSet lower = run(c->graph, sub, map_set(c->old_to_new, f));

    // An edge v'w lifts uniquely when w sees exactly one of x, v, y.
    const std::array<Vertex, 3> trio{x, v, y};
    EdgeSet base;
    for (const Edge& e : lower) {
      if (e.u != c->merged && e.v != c->merged) {
        base.insert(make_edge(back[e.u], back[e.v]));
        continue;
      }
      const Vertex w = back[e.u == c->merged ? e.v : e.u];
      std::vector<Vertex> ends;
      for (Vertex t : trio) {
        if (g.adjacent(w, t)) ends.push_back(t);
      }
      if (ends.size() == 1) base.insert(make_edge(w, ends[0]));
    }
    std::set<Edge> pool_set;
    for (Vertex w : g.rotation(v)) pool_set.insert(make_edge(v, w));
    for (Vertex w : g.neighbors(x)) {
      if (g.adjacent(w, y) || g.adjacent(w, v)) pool_set.insert(make_edge(x, w));
    }
    for (Vertex w : g.neighbors(y)) {
      if (g.adjacent(w, x) || g.adjacent(w, v)) pool_set.insert(make_edge(y, w));
    }
    pool_set.erase(make_edge(x, v));
    pool_set.erase(make_edge(y, v));
    std::vector<Edge> pool{pool_set.begin(), pool_set.end()};
    pool.insert(pool.begin(), make_edge(x, v));
    pool.insert(pool.begin() + 1, make_edge(y, v));
    return smallest_extension(g, phi, base, pool, f, 4);
  }
};

}  // namespace

TransversalCertificate face_recursive_transversal(const PlaneGraph& g, const Coloring& phi,
                                                  std::span<const Vertex> u, bool check_each_level) {
  if (!is_triangulation(g)) throw NotTriangulation("face recursion needs a triangulation");
  require_u_clique(g, u);
  if (!is_proper(g, phi)) throw PreconditionError("face recursion needs a proper colouring");
  Recursion rec{check_each_level};
  EdgeSet edges = rec.run(g, phi, u);
  return certify(g, phi, std::move(edges), u, "face-recursion");
}

}  // namespace dacol

#include <algorithm>
#include <map>
#include <queue>

#include "dacol/transversal.hpp"
#include "dacol/union_find.hpp"

namespace dacol {

namespace {

// Ground set: the edges of G. A set I is independent in
//   A: the direct sum of the cographic matroids of the G_ij
//      (G_ij - I has as many components as G_ij),
//   B: the graphic matroid of G with U identified to one vertex.
class Intersection {
 public:
  Intersection(const PlaneGraph& g, const Coloring& phi, std::span<const Vertex> u)
      : n_(g.n()), edges_(g.edges()), u_(u.begin(), u.end()) {
    std::map<std::pair<int, int>, int> slot;
    for (const Edge& e : edges_) {
      std::pair key{std::min(phi[e.u], phi[e.v]), std::max(phi[e.u], phi[e.v])};
      auto it = slot.try_emplace(key, static_cast<int>(slot.size())).first;
      pair_.push_back(it->second);
    }
    members_.resize(slot.size());
    for (std::size_t i = 0; i < edges_.size(); ++i) members_[pair_[i]].push_back(static_cast<int>(i));
    in_.assign(edges_.size(), 0);
    rank_.resize(slot.size());
    for (std::size_t p = 0; p < members_.size(); ++p) rank_[p] = forest_rank(static_cast<int>(p), -1, -1);
  }

  EdgeSet solve() {
    for (std::size_t z = 0; z < edges_.size(); ++z) {
      if (fits_a(static_cast<int>(z)) && fits_b(static_cast<int>(z))) in_[z] = 1;
    }
    while (augment()) {
    }
    EdgeSet out;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (in_[i]) out.insert(edges_[i]);
    }
    return out;
  }

 private:
  // Rank of the pair-p edges outside I, with `drop` treated as inside and
  // `keep` as outside.
  int forest_rank(int p, int drop, int keep) {
    UnionFind uf(n_);
    int r = 0;
    for (int e : members_[p]) {
      const bool outside = e == keep || (!in_[e] && e != drop);
      if (outside && uf.unite(edges_[e].u, edges_[e].v)) ++r;
    }
    return r;
  }

  bool fits_a(int z) { return forest_rank(pair_[z], z, -1) == rank_[pair_[z]]; }

  UnionFind contracted_forest(int skip) {
    UnionFind uf(n_);
    for (std::size_t i = 1; i < u_.size(); ++i) uf.unite(u_[0], u_[i]);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      if (in_[e] && static_cast<int>(e) != skip) uf.unite(edges_[e].u, edges_[e].v);
    }
    return uf;
  }

  bool fits_b(int z) { return !contracted_forest(-1).same(edges_[z].u, edges_[z].v); }

  // One shortest augmenting path in the exchange graph; false if none exists.
  bool augment() {
    const int m = static_cast<int>(edges_.size());
    std::vector<int> inside, outside;
    for (int e = 0; e < m; ++e) (in_[e] ? inside : outside).push_back(e);

    std::vector<char> source(m, 0), sink(m, 0);
    UnionFind base = contracted_forest(-1);
    for (int z : outside) {
      source[z] = fits_a(z);
      sink[z] = !base.same(edges_[z].u, edges_[z].v);
    }
    // y -> z when I - y + z is independent in A; z -> y when in B.
    std::vector<std::vector<int>> arcs(m);
    for (int y : inside) {
      UnionFind without_y = contracted_forest(y);
      for (int z : outside) {
        bool in_a;
        if (pair_[y] != pair_[z]) {
          in_a = source[z];
        } else {
          in_[y] = 0;
          in_a = forest_rank(pair_[z], z, -1) == rank_[pair_[z]];
          in_[y] = 1;
        }
        if (in_a) arcs[y].push_back(z);
        if (!without_y.same(edges_[z].u, edges_[z].v)) arcs[z].push_back(y);
      }
    }

    std::vector<int> prev(m, -2);
    std::queue<int> bfs;
    for (int z : outside) {
      if (source[z]) {
        prev[z] = -1;
        bfs.push(z);
      }
    }
    int end = -1;
    while (!bfs.empty() && end < 0) {
      int x = bfs.front();
      bfs.pop();
      if (!in_[x] && sink[x]) {
        end = x;
        break;
      }
      for (int y : arcs[x]) {
        if (prev[y] == -2) {
          prev[y] = x;
          bfs.push(y);
        }
      }
    }
    if (end < 0) return false;
    for (int x = end; x != -1; x = prev[x]) in_[x] = !in_[x];
    return true;
  }

  int n_;
  std::vector<Edge> edges_;
  std::vector<Vertex> u_;
  std::vector<int> pair_;
  std::vector<std::vector<int>> members_;
  std::vector<int> rank_;
  std::vector<char> in_;
};

}  // namespace

void require_u_clique(const PlaneGraph& g, std::span<const Vertex> u) {
  if (u.size() > 3) throw PreconditionError("|U| must be at most 3");
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] < 0 || u[i] >= g.n()) throw PreconditionError("U vertex out of range");
    for (std::size_t j = i + 1; j < u.size(); ++j) {
      if (u[i] == u[j]) throw PreconditionError("U has a repeated vertex");
      if (!g.adjacent(u[i], u[j])) throw PreconditionError("U is not a clique");
    }
  }
}

TransversalCertificate u_acyclic_transversal(const PlaneGraph& g, const Coloring& phi,
                                             std::span<const Vertex> u,
                                             const UAcyclicOptions& options) {
  require_u_clique(g, u);
  if (!is_proper(g, phi)) throw PreconditionError("u_acyclic_transversal needs a proper colouring");
  Intersection solver(g, phi, u);
  TransversalCertificate cert = certify(g, phi, solver.solve(), u, "matroid-intersection");
  if (cert.optimal && cert.kills_all && cert.no_u_path) return cert;
  if (options.allow_fallback && is_triangulation(g)) {
    return face_recursive_transversal(g, phi, u, options.check_each_level);
  }
  throw InternalError("no U-acyclic transversal of size m(G, phi) exists; the input is not planar "
                      "or U is not a clique");
}

}  // namespace dacol

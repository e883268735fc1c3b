#include "dacol/planar.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>

namespace dacol {

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const Check* ValidationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

void ValidationReport::add(std::string name, bool passed, std::string message) {
  checks.push_back({std::move(name), passed, std::move(message)});
}

namespace {

// Number of connected components of g restricted to `alive` vertices.
int count_components(const PlaneGraph& g, const std::vector<char>& alive) {
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  int components = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (!alive[s] || seen[s]) continue;
    ++components;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbors(x)) {
        if (alive[y] && !seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
  }
  return components;
}

bool separates(const PlaneGraph& g, const Triangle& t) {
  if (g.n() <= 4) return false;
  std::vector<char> alive(static_cast<std::size_t>(g.n()), 1);
  for (Vertex x : t) alive[x] = 0;
  return count_components(g, alive) > 1;
}

// Candidate facial triangles of a graph assumed to be a triangulation: every
// triangle of a triangulation on four or more vertices is either a face or
// separating.
std::vector<std::array<Vertex, 3>> candidate_faces(const PlaneGraph& g) {
  std::vector<std::array<Vertex, 3>> out;
  auto tris = triangles(g);
  if (g.n() == 3) {
    for (const auto& t : tris) {
      out.push_back({t[0], t[1], t[2]});
      out.push_back({t[0], t[2], t[1]});
    }
    return out;
  }
  for (const auto& t : tris) {
    if (!separates(g, t)) out.push_back({t[0], t[1], t[2]});
  }
  return out;
}

bool rotation_is_triangular(const PlaneGraph& g) {
  auto fs = faces(g);
  if (fs.size() != static_cast<std::size_t>(2 * g.n() - 4)) return false;
  return std::all_of(fs.begin(), fs.end(), [](const auto& f) { return f.size() == 3; });
}

PlaneGraph require_embedded_triangulation(const PlaneGraph& g) {
  if (g.n() < 3 || g.num_edges() != static_cast<std::size_t>(3 * g.n() - 6)) {
    throw NotTriangulation("not a triangulation: edge count " + std::to_string(g.num_edges()) +
                           " != 3n-6");
  }
  return embed_triangulation(g);
}

// Oriented facial triples in traversal order.
std::vector<std::array<Vertex, 3>> oriented_faces(const PlaneGraph& g) {
  std::vector<std::array<Vertex, 3>> out;
  for (const auto& f : faces(g)) {
    if (f.size() != 3) throw NotTriangulation("non-triangular face");
    out.push_back({f[0], f[1], f[2]});
  }
  return out;
}

bool face_contains(const std::array<Vertex, 3>& f, Vertex x) {
  return f[0] == x || f[1] == x || f[2] == x;
}

}  // namespace

bool is_connected(const PlaneGraph& g) {
  if (g.n() == 0) return true;
  std::vector<char> alive(static_cast<std::size_t>(g.n()), 1);
  return count_components(g, alive) == 1;
}

bool is_two_connected(const PlaneGraph& g) {
  const int n = g.n();
  if (n < 3 || !is_connected(g)) return false;
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  int timer = 0;
  bool articulation = false;
  std::function<void(Vertex, Vertex)> dfs = [&](Vertex x, Vertex parent) {
    disc[x] = low[x] = timer++;
    int children = 0;
    for (Vertex y : g.neighbors(x)) {
      if (y == parent) continue;
      if (disc[y] != -1) {
        low[x] = std::min(low[x], disc[y]);
      } else {
        ++children;
        dfs(y, x);
        low[x] = std::min(low[x], low[y]);
        if (parent != -1 && low[y] >= disc[x]) articulation = true;
      }
    }
    if (parent == -1 && children > 1) articulation = true;
  };
  dfs(0, -1);
  return !articulation;
}

std::vector<std::vector<Vertex>> faces(const PlaneGraph& g) {
  const auto& rot = g.rotation();
  // position[v][w] = index of w in rotation of v
  std::vector<std::map<Vertex, std::size_t>> position(static_cast<std::size_t>(g.n()));
  for (Vertex v = 0; v < g.n(); ++v) {
    for (std::size_t i = 0; i < rot[v].size(); ++i) position[v][rot[v][i]] = i;
  }
  std::set<std::pair<Vertex, Vertex>> used;
  std::vector<std::vector<Vertex>> out;
  for (Vertex u = 0; u < g.n(); ++u) {
    for (Vertex w : rot[u]) {
      if (used.contains({u, w})) continue;
      std::vector<Vertex> walk;
      Vertex a = u, b = w;
      while (!used.contains({a, b})) {
        used.insert({a, b});
        walk.push_back(a);
        const auto& rb = rot[b];
        Vertex c = rb[(position[b][a] + 1) % rb.size()];
        a = b;
        b = c;
      }
      out.push_back(std::move(walk));
    }
  }
  return out;
}

std::vector<Triangle> triangles(const PlaneGraph& g) {
  std::vector<Triangle> out;
  for (Vertex u = 0; u < g.n(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (v <= u) continue;
      for (Vertex w : g.neighbors(v)) {
        if (w > v && g.adjacent(u, w)) out.push_back({u, v, w});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_triangulation(const PlaneGraph& g) {
  if (g.n() < 3 || g.num_edges() != static_cast<std::size_t>(3 * g.n() - 6)) return false;
  if (!is_connected(g)) return false;
  try {
    (void)PlaneGraph::from_faces(g.n(), candidate_faces(g));
  } catch (const NotTriangulation&) {
    return false;
  }
  return true;
}

PlaneGraph embed_triangulation(const PlaneGraph& g) {
  if (g.has_rotation() && g.n() >= 3 &&
      g.num_edges() == static_cast<std::size_t>(3 * g.n() - 6) && is_connected(g) &&
      rotation_is_triangular(g)) {
    return g;
  }
  if (g.n() < 3 || g.num_edges() != static_cast<std::size_t>(3 * g.n() - 6) || !is_connected(g)) {
    throw NotTriangulation("not a triangulation");
  }
  PlaneGraph embedded = PlaneGraph::from_faces(g.n(), candidate_faces(g), g.labels());
  if (embedded.edges() != g.edges()) throw NotTriangulation("facial triangles miss an edge");
  return embedded;
}

std::vector<Triangle> facial_triangles(const PlaneGraph& g) {
  PlaneGraph e = require_embedded_triangulation(g);
  std::set<Triangle> out;
  for (const auto& f : faces(e)) out.insert(make_triangle(f[0], f[1], f[2]));
  return {out.begin(), out.end()};
}

std::vector<Triangle> separating_triangles(const PlaneGraph& g) {
  if (!is_triangulation(g)) throw NotTriangulation("separating_triangles needs a triangulation");
  std::vector<Triangle> out;
  for (const auto& t : triangles(g)) {
    if (separates(g, t)) out.push_back(t);
  }
  return out;
}

bool is_four_connected_triangulation(const PlaneGraph& g) {
  return g.n() >= 5 && is_triangulation(g) && separating_triangles(g).empty();
}

ValidationReport validate(const PlaneGraph& g, bool expect_triangulation) {
  ValidationReport report;
  report.add("simple", true);
  const bool connected = is_connected(g);
  report.add("connected", connected, connected ? "" : "graph is disconnected");
  if (g.has_rotation()) {
    auto fs = faces(g);
    const long long euler = static_cast<long long>(g.n()) -
                            static_cast<long long>(g.num_edges()) +
                            static_cast<long long>(fs.size());
    const bool ok = !connected || euler == 2;
    report.add("euler", ok,
               std::to_string(g.n()) + " - " + std::to_string(g.num_edges()) + " + " +
                   std::to_string(fs.size()) + " = " + std::to_string(euler));
  }
  if (expect_triangulation) {
    const long long want = 3LL * g.n() - 6;
    const bool count_ok = g.n() >= 3 && static_cast<long long>(g.num_edges()) == want;
    report.add("edge-count", count_ok,
               "edge count " + std::to_string(g.num_edges()) +
                   (count_ok ? " == " : " != ") + "3n-6 = " + std::to_string(want));
    if (count_ok && connected) {
      bool faces_ok = false;
      std::string message;
      try {
        PlaneGraph e = embed_triangulation(g);
        faces_ok = true;
        message = std::to_string(faces(e).size()) + " triangular faces";
        if (g.has_rotation() && !rotation_is_triangular(g)) {
          faces_ok = false;
          message = "rotation does not give triangular faces";
        }
      } catch (const NotTriangulation& ex) {
        message = ex.what();
      }
      report.add("triangulation", faces_ok, message);
    } else {
      report.add("triangulation", false, "edge count or connectivity check failed");
    }
  }
  return report;
}

DecompositionTree decompose(const PlaneGraph& input) {
  if (input.n() < 4) throw PreconditionError("decompose needs at least 4 vertices");
  if (!is_triangulation(input)) throw NotTriangulation("decompose needs a triangulation");
  PlaneGraph g = embed_triangulation(input);

  DecompositionTree tree;
  struct Work {
    PlaneGraph graph;
    std::vector<Vertex> to_root;
  };
  std::vector<Work> stack;
  std::vector<Vertex> identity(static_cast<std::size_t>(g.n()));
  std::iota(identity.begin(), identity.end(), 0);
  stack.push_back({g, identity});
  while (!stack.empty()) {
    Work work = std::move(stack.back());
    stack.pop_back();
    std::optional<Triangle> split;
    for (const auto& t : triangles(work.graph)) {
      if (separates(work.graph, t)) {
        split = t;
        break;
      }
    }
    if (!split) {
      tree.pieces.push_back(work.graph);
      tree.piece_maps.push_back(work.to_root);
      continue;
    }
    const Triangle& t = *split;
    tree.triangles.push_back(make_triangle(work.to_root[t[0]], work.to_root[t[1]],
                                           work.to_root[t[2]]));
    std::vector<char> alive(static_cast<std::size_t>(work.graph.n()), 1);
    for (Vertex x : t) alive[x] = 0;
    std::vector<int> comp(static_cast<std::size_t>(work.graph.n()), -1);
    int comps = 0;
    for (Vertex s = 0; s < work.graph.n(); ++s) {
      if (!alive[s] || comp[s] != -1) continue;
      std::vector<Vertex> q{s};
      comp[s] = comps;
      while (!q.empty()) {
        Vertex x = q.back();
        q.pop_back();
        for (Vertex y : work.graph.neighbors(x)) {
          if (alive[y] && comp[y] == -1) {
            comp[y] = comps;
            q.push_back(y);
          }
        }
      }
      ++comps;
    }
    if (comps != 2) throw InternalError("separating triangle of a triangulation left " +
                                        std::to_string(comps) + " components");
    // Push the second side first so the first side is processed first.
    for (int side = 1; side >= 0; --side) {
      std::vector<Vertex> verts;
      for (Vertex x = 0; x < work.graph.n(); ++x) {
        if (comp[x] == side || !alive[x]) verts.push_back(x);
      }
      Subgraph sub = work.graph.induced(verts);
      std::vector<Vertex> to_root;
      for (Vertex x : sub.to_parent) to_root.push_back(work.to_root[x]);
      stack.push_back({std::move(sub.graph), std::move(to_root)});
    }
  }

  for (std::size_t ti = 0; ti < tree.triangles.size(); ++ti) {
    const Triangle& t = tree.triangles[ti];
    std::vector<int> holders;
    for (std::size_t p = 0; p < tree.pieces.size(); ++p) {
      const auto& map = tree.piece_maps[p];
      if (std::all_of(t.begin(), t.end(), [&](Vertex x) {
            return std::find(map.begin(), map.end(), x) != map.end();
          })) {
        holders.push_back(static_cast<int>(p));
      }
    }
    if (holders.size() != 2) {
      throw InternalError("separating triangle held by " + std::to_string(holders.size()) +
                          " pieces");
    }
    tree.tree_edges.push_back({holders[0], holders[1], static_cast<int>(ti)});
  }
  return tree;
}

PlaneGraph reglue(const DecompositionTree& tree, int n) {
  EdgeSet all;
  for (std::size_t p = 0; p < tree.pieces.size(); ++p) {
    for (const Edge& e : tree.pieces[p].edges()) {
      all.insert(make_edge(tree.piece_maps[p][e.u], tree.piece_maps[p][e.v]));
    }
  }
  std::vector<Edge> edges(all.begin(), all.end());
  return PlaneGraph(n, edges);
}

Contraction contract_path(const PlaneGraph& input, Vertex v1, Vertex v, Vertex v3) {
  PlaneGraph g = require_embedded_triangulation(input);
  if (v1 == v3 || v1 == v || v3 == v) throw PreconditionError("contract_path needs three vertices");
  if (!g.adjacent(v, v1) || !g.adjacent(v, v3)) {
    throw PreconditionError("contract_path: v1 and v3 must be neighbours of v");
  }
  if (g.adjacent(v1, v3)) throw PreconditionError("contraction would create a loop (v1 ~ v3)");
  if (g.n() < 5) throw PreconditionError("contraction would leave fewer than 3 vertices");

  Contraction out;
  const int n = g.n();
  out.old_to_new.assign(static_cast<std::size_t>(n), -1);
  std::vector<Label> new_labels;
  Vertex next = 0;
  for (Vertex x = 0; x < n; ++x) {
    if (x == v1 || x == v || x == v3) continue;
    out.old_to_new[x] = next++;
    new_labels.push_back(g.label(x));
  }
  out.merged = next;
  out.old_to_new[v1] = out.old_to_new[v] = out.old_to_new[v3] = out.merged;
  const Label fresh = *std::max_element(g.labels().begin(), g.labels().end()) + 1;
  new_labels.push_back(fresh);
  out.merged_labels = {g.label(v1), g.label(v), g.label(v3)};

  std::vector<std::array<Vertex, 3>> new_faces;
  for (const auto& f : oriented_faces(g)) {
    const bool touches = face_contains(f, v1) || face_contains(f, v) || face_contains(f, v3);
    if (touches) out.original_faces.push_back({g.label(f[0]), g.label(f[1]), g.label(f[2])});
    std::array<Vertex, 3> m{out.old_to_new[f[0]], out.old_to_new[f[1]], out.old_to_new[f[2]]};
    if (m[0] == m[1] || m[1] == m[2] || m[0] == m[2]) continue;
    new_faces.push_back(m);
  }
  try {
    out.graph = PlaneGraph::from_faces(n - 2, new_faces, std::move(new_labels));
  } catch (const NotTriangulation& ex) {
    throw PreconditionError(std::string("contraction would create a parallel edge (") + ex.what() +
                            ")");
  }
  return out;
}

PlaneGraph expand(const Contraction& c) {
  const PlaneGraph& g = c.graph;
  std::vector<Label> labels;
  for (Vertex x = 0; x < g.n(); ++x) {
    if (x != c.merged) labels.push_back(g.label(x));
  }
  labels.insert(labels.end(), c.merged_labels.begin(), c.merged_labels.end());
  std::sort(labels.begin(), labels.end());
  std::map<Label, Vertex> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index[labels[i]] = static_cast<Vertex>(i);

  std::vector<std::array<Vertex, 3>> fs;
  for (const auto& f : c.original_faces) fs.push_back({index.at(f[0]), index.at(f[1]), index.at(f[2])});
  for (const auto& f : oriented_faces(g)) {
    if (face_contains(f, c.merged)) continue;
    fs.push_back({index.at(g.label(f[0])), index.at(g.label(f[1])), index.at(g.label(f[2]))});
  }
  return PlaneGraph::from_faces(static_cast<int>(labels.size()), fs, labels);
}

Rewrite delete_and_retriangulate(const PlaneGraph& input, Vertex v, std::span<const Edge> chords) {
  PlaneGraph g = require_embedded_triangulation(input);
  const int d = g.degree(v);
  if (d != 4 && d != 5) throw PreconditionError("delete_and_retriangulate needs degree 4 or 5");
  const auto& rim = g.rotation(v);
  if (chords.size() != static_cast<std::size_t>(d - 3)) {
    throw PreconditionError("hole of size " + std::to_string(d) + " needs " +
                            std::to_string(d - 3) + " chords");
  }
  auto pos = [&](Vertex x) -> int {
    auto it = std::find(rim.begin(), rim.end(), x);
    if (it == rim.end()) throw PreconditionError("chord endpoint is not on the hole boundary");
    return static_cast<int>(it - rim.begin());
  };
  std::set<std::pair<int, int>> diag;
  for (const Edge& c : chords) {
    int a = pos(c.u), b = pos(c.v);
    if (a == b) throw PreconditionError("degenerate chord");
    if ((a + 1) % d == b || (b + 1) % d == a) {
      throw PreconditionError("chord " + to_string(c) + " joins adjacent rim vertices");
    }
    if (g.adjacent(c.u, c.v)) throw PreconditionError("chord " + to_string(c) + " is already an edge");
    if (!diag.insert({std::min(a, b), std::max(a, b)}).second) {
      throw PreconditionError("repeated chord");
    }
  }
  for (auto [a, b] : diag) {
    for (auto [c, e] : diag) {
      if ((a < c && c < b && b < e) || (c < a && a < e && e < b)) {
        throw PreconditionError("chords cross");
      }
    }
  }
  auto linked = [&](int a, int b) {
    if ((a + 1) % d == b || (b + 1) % d == a) return true;
    return diag.contains({std::min(a, b), std::max(a, b)});
  };

  Rewrite out;
  out.old_to_new.assign(static_cast<std::size_t>(g.n()), -1);
  std::vector<Label> labels;
  Vertex next = 0;
  for (Vertex x = 0; x < g.n(); ++x) {
    if (x == v) continue;
    out.old_to_new[x] = next++;
    labels.push_back(g.label(x));
  }
  std::vector<std::array<Vertex, 3>> fs;
  for (const auto& f : oriented_faces(g)) {
    if (face_contains(f, v)) continue;
    fs.push_back({out.old_to_new[f[0]], out.old_to_new[f[1]], out.old_to_new[f[2]]});
  }
  int added = 0;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      for (int k = j + 1; k < d; ++k) {
        if (linked(i, j) && linked(j, k) && linked(i, k)) {
          fs.push_back({out.old_to_new[rim[k]], out.old_to_new[rim[j]], out.old_to_new[rim[i]]});
          ++added;
        }
      }
    }
  }
  if (added != d - 2) throw PreconditionError("chords do not triangulate the hole");
  try {
    out.graph = PlaneGraph::from_faces(g.n() - 1, fs, std::move(labels));
  } catch (const NotTriangulation& ex) {
    throw PreconditionError(std::string("chords do not triangulate the hole: ") + ex.what());
  }
  return out;
}

}  // namespace dacol

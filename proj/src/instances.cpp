#include "dacol/instances.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>
#include <set>

#include "dacol/planar.hpp"

namespace dacol {

namespace {

using Face = std::array<Vertex, 3>;

PlaneGraph wheel_pair(int n) {
  const int rim = n - 2;
  std::vector<Face> fs;
  for (int i = 0; i < rim; ++i) {
    const int j = (i + 1) % rim;
    fs.push_back({i, j, n - 2});
    fs.push_back({j, i, n - 1});
  }
  return PlaneGraph::from_faces(n, fs);
}

std::vector<Face> k4_faces() { return {{0, 1, 2}, {0, 3, 1}, {1, 3, 2}, {0, 2, 3}}; }

// Replaces face (a, b, c) by three faces around the new vertex x.
void insert_into(std::vector<Face>& fs, std::size_t idx, Vertex x) {
  const Face f = fs[idx];
  fs[idx] = {f[0], f[1], x};
  fs.push_back({f[1], f[2], x});
  fs.push_back({f[2], f[0], x});
}

}  // namespace

PlaneGraph k3() {
  const std::array<Face, 2> fs{Face{0, 1, 2}, Face{0, 2, 1}};
  return PlaneGraph::from_faces(3, fs);
}

PlaneGraph k4() { return PlaneGraph::from_faces(4, k4_faces()); }

PlaneGraph octahedron() { return even_double_wheel(6); }

PlaneGraph icosahedron() {
  std::vector<Face> fs;
  auto a = [](int i) { return 1 + (i % 5); };
  auto b = [](int i) { return 6 + (i % 5); };
  for (int i = 0; i < 5; ++i) {
    fs.push_back({0, a(i), a(i + 1)});
    fs.push_back({a(i + 1), a(i), b(i)});
    fs.push_back({a(i + 1), b(i), b(i + 1)});
    fs.push_back({11, b(i + 1), b(i)});
  }
  return PlaneGraph::from_faces(12, fs);
}

PlaneGraph double_wheel(int n) {
  if (n < 7 || n % 2 == 0) throw PreconditionError("double_wheel needs odd n >= 7");
  return wheel_pair(n);
}

PlaneGraph even_double_wheel(int n) {
  if (n < 6 || n % 2 != 0) throw PreconditionError("even_double_wheel needs even n >= 6");
  return wheel_pair(n);
}

PlaneGraph stacked_chain(int t) {
  if (t < 1) throw PreconditionError("stacked_chain needs t >= 1");
  std::vector<Face> fs = k4_faces();
  for (int j = 4; j < t + 3; ++j) {
    const Triangle want = make_triangle(j - 3, j - 2, j - 1);
    auto it = std::find_if(fs.begin(), fs.end(),
                           [&](const Face& f) { return make_triangle(f[0], f[1], f[2]) == want; });
    if (it == fs.end()) throw InternalError("stacked_chain lost its insertion face");
    insert_into(fs, static_cast<std::size_t>(it - fs.begin()), j);
  }
  return PlaneGraph::from_faces(t + 3, fs);
}

PlaneGraph random_triangulation(int n, std::uint64_t seed) {
  if (n < 4) throw PreconditionError("random_triangulation needs n >= 4");
  std::mt19937_64 rng(seed);
  std::vector<Face> fs = k4_faces();
  for (int x = 4; x < n; ++x) insert_into(fs, rng() % fs.size(), x);
  return PlaneGraph::from_faces(n, fs);
}

PlaneGraph glue_along_face(const PlaneGraph& a, std::array<Vertex, 3> fa, const PlaneGraph& b,
                           std::array<Vertex, 3> fb) {
  const Triangle ta = make_triangle(fa[0], fa[1], fa[2]);
  const Triangle tb = make_triangle(fb[0], fb[1], fb[2]);
  const auto fas = facial_triangles(a);
  const auto fbs = facial_triangles(b);
  if (!std::binary_search(fas.begin(), fas.end(), ta) || !std::binary_search(fbs.begin(), fbs.end(), tb)) {
    throw PreconditionError("glue_along_face needs a facial triangle on each side");
  }
  std::vector<Vertex> map_b(static_cast<std::size_t>(b.n()), -1);
  for (int i = 0; i < 3; ++i) map_b[fb[i]] = fa[i];
  Vertex next = a.n();
  for (Vertex x = 0; x < b.n(); ++x) {
    if (map_b[x] < 0) map_b[x] = next++;
  }
  std::vector<Face> fs;
  for (const auto& f : faces(embed_triangulation(a))) {
    if (make_triangle(f[0], f[1], f[2]) != ta) fs.push_back({f[0], f[1], f[2]});
  }
  for (const auto& f : faces(embed_triangulation(b))) {
    if (make_triangle(f[0], f[1], f[2]) != tb) fs.push_back({map_b[f[0]], map_b[f[1]], map_b[f[2]]});
  }
  return PlaneGraph::from_faces(next, fs);
}

PlaneGraph glued_even_double_wheels(int n1, int n2) {
  PlaneGraph a = even_double_wheel(n1);
  PlaneGraph b = even_double_wheel(n2);
  return glue_along_face(a, {0, 1, n1 - 2}, b, {0, 1, n2 - 2});
}

OctahedronReplacement octahedron_replacement(const PlaneGraph& input) {
  if (!is_triangulation(input)) throw NotTriangulation("octahedron_replacement needs a triangulation");
  for (Vertex v = 0; v < input.n(); ++v) {
    if (input.degree(v) % 2 != 0) throw PreconditionError("octahedron_replacement needs an Eulerian triangulation");
  }
  const PlaneGraph h = embed_triangulation(input);
  const auto fs = faces(h);
  // Proper 2-colouring of the dual; exists because every degree is even.
  std::map<Edge, std::vector<int>> by_edge;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (int j = 0; j < 3; ++j) by_edge[make_edge(fs[i][j], fs[i][(j + 1) % 3])].push_back(static_cast<int>(i));
  }
  std::vector<int> side(fs.size(), -1);
  std::queue<int> q;
  side[0] = 0;
  q.push(0);
  while (!q.empty()) {
    const int f = q.front();
    q.pop();
    for (int j = 0; j < 3; ++j) {
      for (int g : by_edge[make_edge(fs[f][j], fs[f][(j + 1) % 3])]) {
        if (g == f) continue;
        if (side[g] < 0) {
          side[g] = 1 - side[f];
          q.push(g);
        } else if (side[g] == side[f]) {
          throw InternalError("dual of an Eulerian triangulation is not bipartite");
        }
      }
    }
  }

  OctahedronReplacement out;
  std::vector<Face> nf;
  Vertex next = h.n();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const Vertex a = fs[i][0], b = fs[i][1], c = fs[i][2];
    if (side[i] != 0) {
      nf.push_back({a, b, c});
      continue;
    }
    const Vertex xab = next++, xbc = next++, xca = next++;
    nf.push_back({a, b, xab});
    nf.push_back({b, c, xbc});
    nf.push_back({c, a, xca});
    nf.push_back({a, xab, xca});
    nf.push_back({b, xbc, xab});
    nf.push_back({c, xca, xbc});
    nf.push_back({xab, xbc, xca});
    out.blocks.push_back({a, b, c, xab, xbc, xca});
  }
  out.graph = PlaneGraph::from_faces(next, nf);
  return out;
}

std::vector<Edge> canonical_edges(const PlaneGraph& g) {
  const int n = g.n();
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return g.degree(a) != g.degree(b) ? g.degree(a) < g.degree(b) : a < b;
  });
  std::vector<Edge> best;
  const auto all = g.edges();
  do {
    bool sorted = true;
    for (int i = 1; i < n && sorted; ++i) sorted = g.degree(order[i - 1]) <= g.degree(order[i]);
    if (!sorted) continue;
    std::vector<Vertex> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    std::vector<Edge> mapped;
    for (const Edge& e : all) mapped.push_back(make_edge(pos[e.u], pos[e.v]));
    std::sort(mapped.begin(), mapped.end());
    if (best.empty() || mapped < best) best = std::move(mapped);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

std::vector<PlaneGraph> catalog_of_order(int n) {
  if (n < 3 || n > 6) throw PreconditionError("catalog covers 3 <= n <= 6");
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
  }
  const int want = 3 * n - 6;
  const int total = static_cast<int>(pairs.size());
  std::set<std::vector<Edge>> seen;
  std::vector<int> pick(static_cast<std::size_t>(want));
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    std::vector<Edge> es;
    for (int i : pick) es.push_back(pairs[i]);
    PlaneGraph g(n, es);
    if (is_triangulation(g)) seen.insert(canonical_edges(g));
    int i = want - 1;
    while (i >= 0 && pick[i] == total - want + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < want; ++j) pick[j] = pick[j - 1] + 1;
  }
  std::vector<PlaneGraph> out;
  for (const auto& es : seen) out.push_back(embed_triangulation(PlaneGraph(n, es)));
  return out;
}

const std::vector<PlaneGraph>& catalog_small() {
  static const std::vector<PlaneGraph> all = [] {
    std::vector<PlaneGraph> v;
    for (int n = 3; n <= 6; ++n) {
      auto part = catalog_of_order(n);
      v.insert(v.end(), part.begin(), part.end());
    }
    return v;
  }();
  return all;
}

InstanceDescriptor generate(const std::string& family, const std::vector<long long>& params,
                            std::uint64_t seed) {
  auto need = [&](std::size_t count) {
    if (params.size() != count) {
      throw PreconditionError(family + " takes " + std::to_string(count) + " parameter(s)");
    }
  };
  InstanceDescriptor d;
  d.family = family;
  d.provenance = "dacol-gen 1";
  if (family == "k3") {
    need(0);
    d.graph = k3();
  } else if (family == "k4") {
    need(0);
    d.graph = k4();
  } else if (family == "octahedron") {
    need(0);
    d.graph = octahedron();
  } else if (family == "icosahedron") {
    need(0);
    d.graph = icosahedron();
  } else if (family == "double-wheel") {
    need(1);
    d.parameters["n"] = params[0];
    d.graph = double_wheel(static_cast<int>(params[0]));
  } else if (family == "even-double-wheel") {
    need(1);
    d.parameters["n"] = params[0];
    d.graph = even_double_wheel(static_cast<int>(params[0]));
  } else if (family == "stacked-chain") {
    need(1);
    d.parameters["t"] = params[0];
    d.graph = stacked_chain(static_cast<int>(params[0]));
  } else if (family == "random") {
    need(1);
    d.parameters["n"] = params[0];
    d.graph = random_triangulation(static_cast<int>(params[0]), seed);
    d.provenance += " seed " + std::to_string(seed);
  } else if (family == "catalog") {
    need(2);
    d.parameters["n"] = params[0];
    d.parameters["index"] = params[1];
    auto part = catalog_of_order(static_cast<int>(params[0]));
    if (params[1] < 0 || params[1] >= static_cast<long long>(part.size())) {
      throw PreconditionError("catalog index out of range (order " + std::to_string(params[0]) +
                              " has " + std::to_string(part.size()) + " graphs)");
    }
    d.graph = part[params[1]];
  } else if (family == "glued-even-double-wheels") {
    need(2);
    d.parameters["n1"] = params[0];
    d.parameters["n2"] = params[1];
    d.graph = glued_even_double_wheels(static_cast<int>(params[0]), static_cast<int>(params[1]));
  } else {
    throw PreconditionError("unknown family '" + family + "'");
  }
  return d;
}

}  // namespace dacol

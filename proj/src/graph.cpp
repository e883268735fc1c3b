#include "dacol/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace dacol {

Triangle make_triangle(Vertex a, Vertex b, Vertex c) {
  Triangle t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

std::string to_string(const Edge& e) { return std::to_string(e.u) + " " + std::to_string(e.v); }

namespace {

void normalise_cycle(std::vector<Vertex>& cycle) {
  if (cycle.empty()) return;
  auto smallest = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), smallest, cycle.end());
}

}  // namespace

PlaneGraph::PlaneGraph(int n, std::span<const Edge> edges, std::optional<Rotation> rotation,
                       std::vector<Label> labels)
    : adjacency_(static_cast<std::size_t>(n < 0 ? 0 : n)), labels_(std::move(labels)) {
  if (n < 0) throw InvalidGraph("negative vertex count");
  for (const Edge& raw : edges) {
    if (raw.u < 0 || raw.v < 0 || raw.u >= n || raw.v >= n) {
      throw InvalidGraph("edge endpoint out of range: " + to_string(raw));
    }
    if (raw.u == raw.v) throw InvalidGraph("loop at vertex " + std::to_string(raw.u));
    adjacency_[raw.u].push_back(raw.v);
    adjacency_[raw.v].push_back(raw.u);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& nb = adjacency_[v];
    std::sort(nb.begin(), nb.end());
    if (auto dup = std::adjacent_find(nb.begin(), nb.end()); dup != nb.end()) {
      throw InvalidGraph("parallel edge " + to_string(make_edge(v, *dup)));
    }
    num_edges_ += nb.size();
  }
  num_edges_ /= 2;

  if (labels_.empty()) {
    labels_.resize(static_cast<std::size_t>(n));
    std::iota(labels_.begin(), labels_.end(), Label{0});
  } else if (labels_.size() != static_cast<std::size_t>(n)) {
    throw InvalidGraph("label count does not match vertex count");
  }

  if (rotation) {
    if (rotation->size() != static_cast<std::size_t>(n)) {
      throw InvalidGraph("rotation system does not cover every vertex");
    }
    for (Vertex v = 0; v < n; ++v) {
      auto sorted = (*rotation)[v];
      std::sort(sorted.begin(), sorted.end());
      if (sorted != adjacency_[v]) {
        throw InvalidGraph("rotation at vertex " + std::to_string(v) +
                           " is not a permutation of its neighbours");
      }
      normalise_cycle((*rotation)[v]);
    }
    rotation_ = std::move(rotation);
  }
}

bool PlaneGraph::adjacent(Vertex a, Vertex b) const {
  if (a < 0 || a >= n()) return false;
  const auto& nb = adjacency_[a];
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::vector<Edge> PlaneGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < n(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

const Rotation& PlaneGraph::rotation() const {
  if (!rotation_) throw MissingRotation("graph has no rotation system");
  return *rotation_;
}

Vertex PlaneGraph::rotation_next(Vertex v, Vertex u) const {
  const auto& rot = rotation(v);
  auto it = std::find(rot.begin(), rot.end(), u);
  if (it == rot.end()) throw PreconditionError("not a neighbour in rotation");
  ++it;
  return it == rot.end() ? rot.front() : *it;
}

std::optional<Vertex> PlaneGraph::find_label(Label label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Vertex>(it - labels_.begin());
}

Subgraph PlaneGraph::induced(std::span<const Vertex> vertices) const {
  std::vector<Vertex> to_local(static_cast<std::size_t>(n()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (to_local.at(vertices[i]) != -1) throw PreconditionError("duplicate vertex in induced()");
    to_local[vertices[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> local_edges;
  std::vector<Label> local_labels;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    local_labels.push_back(labels_[vertices[i]]);
    for (Vertex w : adjacency_[vertices[i]]) {
      Vertex j = to_local[w];
      if (j > static_cast<Vertex>(i)) local_edges.push_back({static_cast<Vertex>(i), j});
    }
  }
  std::optional<Rotation> local_rotation;
  if (rotation_) {
    local_rotation.emplace(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      for (Vertex w : (*rotation_)[vertices[i]]) {
        if (to_local[w] != -1) (*local_rotation)[i].push_back(to_local[w]);
      }
    }
  }
  return {PlaneGraph(static_cast<int>(vertices.size()), local_edges, std::move(local_rotation),
                     std::move(local_labels)),
          std::vector<Vertex>(vertices.begin(), vertices.end())};
}

PlaneGraph PlaneGraph::without_edges(const EdgeSet& removed) const {
  std::vector<Edge> kept;
  for (const Edge& e : edges()) {
    if (!removed.contains(e)) kept.push_back(e);
  }
  std::optional<Rotation> rot;
  if (rotation_) {
    rot = *rotation_;
    for (Vertex v = 0; v < n(); ++v) {
      auto& r = (*rot)[v];
      std::erase_if(r, [&](Vertex w) { return removed.contains(make_edge(v, w)); });
    }
  }
  return PlaneGraph(n(), kept, std::move(rot), labels_);
}

PlaneGraph PlaneGraph::without_rotation() const {
  PlaneGraph copy = *this;
  copy.rotation_.reset();
  return copy;
}

PlaneGraph PlaneGraph::with_rotation(Rotation rotation) const {
  auto e = edges();
  return PlaneGraph(n(), e, std::move(rotation), labels_);
}

PlaneGraph PlaneGraph::from_faces(int n, std::span<const std::array<Vertex, 3>> faces,
                                  std::vector<Label> labels) {
  if (n < 3) throw NotTriangulation("a triangulation needs at least 3 vertices");
  const std::size_t f = faces.size();
  if (f != static_cast<std::size_t>(2 * n - 4)) {
    throw NotTriangulation("face count " + std::to_string(f) + " != 2n-4");
  }

  // Darts of each face in its current orientation and the faces on each edge.
  std::vector<std::array<Vertex, 3>> oriented(faces.begin(), faces.end());
  std::map<Edge, std::vector<std::size_t>> faces_on_edge;
  std::set<Triangle> distinct;
  for (std::size_t i = 0; i < f; ++i) {
    const auto& t = oriented[i];
    for (Vertex x : t) {
      if (x < 0 || x >= n) throw InvalidGraph("face vertex out of range");
    }
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
      throw NotTriangulation("degenerate face");
    }
    distinct.insert(make_triangle(t[0], t[1], t[2]));
    for (int k = 0; k < 3; ++k) faces_on_edge[make_edge(t[k], t[(k + 1) % 3])].push_back(i);
  }
  if (n > 3 && distinct.size() != f) throw NotTriangulation("repeated facial triangle");
  for (const auto& [e, list] : faces_on_edge) {
    if (list.size() != 2) {
      throw NotTriangulation("edge " + to_string(e) + " lies on " + std::to_string(list.size()) +
                             " faces");
    }
  }

  auto has_dart = [](const std::array<Vertex, 3>& t, Vertex a, Vertex b) {
    for (int k = 0; k < 3; ++k) {
      if (t[k] == a && t[(k + 1) % 3] == b) return true;
    }
    return false;
  };

  std::vector<int> state(f, 0);  // 0 unvisited, 1 oriented
  for (std::size_t root = 0; root < f; ++root) {
    if (state[root]) continue;
    state[root] = 1;
    std::queue<std::size_t> queue;
    queue.push(root);
    while (!queue.empty()) {
      std::size_t cur = queue.front();
      queue.pop();
      const auto t = oriented[cur];
      for (int k = 0; k < 3; ++k) {
        Vertex a = t[k], b = t[(k + 1) % 3];
        for (std::size_t other : faces_on_edge[make_edge(a, b)]) {
          if (other == cur) continue;
          // The neighbour must traverse the shared edge as b -> a.
          if (!state[other]) {
            if (has_dart(oriented[other], a, b)) std::swap(oriented[other][0], oriented[other][1]);
            state[other] = 1;
            queue.push(other);
          } else if (has_dart(oriented[other], a, b)) {
            throw NotTriangulation("faces cannot be oriented consistently");
          }
        }
      }
    }
  }

  // succ_b(a) = c for every oriented face (a, b, c).
  std::vector<std::map<Vertex, Vertex>> succ(static_cast<std::size_t>(n));
  for (const auto& t : oriented) {
    for (int k = 0; k < 3; ++k) {
      Vertex a = t[k], b = t[(k + 1) % 3], c = t[(k + 2) % 3];
      if (!succ[b].emplace(a, c).second) throw NotTriangulation("inconsistent face orientation");
    }
  }
  std::vector<Edge> edges;
  for (const auto& [e, list] : faces_on_edge) edges.push_back(e);
  Rotation rotation(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    if (succ[v].empty()) throw NotTriangulation("vertex " + std::to_string(v) + " lies on no face");
    Vertex start = succ[v].begin()->first;
    Vertex cur = start;
    do {
      rotation[v].push_back(cur);
      auto it = succ[v].find(cur);
      if (it == succ[v].end()) throw NotTriangulation("open link at vertex " + std::to_string(v));
      cur = it->second;
    } while (cur != start && rotation[v].size() <= succ[v].size());
    if (rotation[v].size() != succ[v].size()) {
      throw NotTriangulation("link of vertex " + std::to_string(v) + " is not a single cycle");
    }
  }
  const long long euler = static_cast<long long>(n) - static_cast<long long>(edges.size()) +
                          static_cast<long long>(f);
  if (euler != 2) throw NotTriangulation("Euler characteristic " + std::to_string(euler) + " != 2");
  return PlaneGraph(n, edges, std::move(rotation), std::move(labels));
}

}  // namespace dacol

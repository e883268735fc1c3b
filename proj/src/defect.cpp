#include "dacol/defect.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "dacol/planar.hpp"

namespace dacol {

namespace {

struct Step {
  EdgeSet removed;
  Coloring coloring;
  int chosen = 0;
  int cost = 0;
};

// Recolours one class of phi (palette 1..palette) on h so that each class
// vertex keeps at most `keep` neighbours, all of distinct colours.
Step recolour_class(const PlaneGraph& h, const Coloring& phi, int palette, int keep) {
  std::vector<int> cost(static_cast<std::size_t>(palette) + 1, 0);
  std::vector<int> size(static_cast<std::size_t>(palette) + 1, 0);
  long long total = 0;
  for (Vertex v = 0; v < h.n(); ++v) {
    const int c = std::max(0, h.degree(v) - keep);
    cost[phi[v]] += c;
    ++size[phi[v]];
    total += c;
  }
  int chosen = 1;
  for (int c = 2; c <= palette; ++c) {
    if (std::pair{cost[c], size[c]} < std::pair{cost[chosen], size[chosen]}) chosen = c;
  }
  if (static_cast<long long>(palette) * cost[chosen] > total) {
    throw InternalError("chosen class exceeds the average deletion cost");
  }

  Step out;
  out.chosen = chosen;
  out.cost = cost[chosen];
  std::vector<int> col = phi.color;
  for (Vertex v : phi.color_class(chosen)) {
    const auto& nb = h.neighbors(v);
    const int d = static_cast<int>(nb.size());
    const int want = std::min(d, keep);
    // Lexicographically first neighbour subset of size `want` with distinct colours.
    std::vector<int> pick(static_cast<std::size_t>(want));
    for (int i = 0; i < want; ++i) pick[i] = i;
    bool found = false;
    while (true) {
      std::set<int> seen;
      for (int i : pick) seen.insert(phi[nb[i]]);
      if (static_cast<int>(seen.size()) == want) {
        found = true;
        break;
      }
      int i = want - 1;
      while (i >= 0 && pick[i] == d - want + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < want; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!found) {
      throw PreconditionError("vertex " + std::to_string(v) + " sees fewer than " +
                              std::to_string(want) + " colours among its neighbours");
    }
    std::set<int> kept_colours;
    std::vector<char> kept(static_cast<std::size_t>(d), 0);
    for (int i : pick) {
      kept[i] = 1;
      kept_colours.insert(phi[nb[i]]);
    }
    for (int i = 0; i < d; ++i) {
      if (!kept[i]) out.removed.insert(make_edge(v, nb[i]));
    }
    int fresh = 0;
    for (int c = 1; c <= palette && !fresh; ++c) {
      if (c != chosen && !kept_colours.contains(c)) fresh = c;
    }
    col[v] = fresh;
  }
  for (int& c : col) c = c > chosen ? c - 1 : c;
  out.coloring = Coloring(std::move(col), palette - 1);
  return out;
}

void check_recoloured(const PlaneGraph& h, const Coloring& phi, const std::vector<Vertex>& touched, int keep) {
  for (Vertex v : touched) {
    std::set<int> colours;
    for (Vertex w : h.neighbors(v)) colours.insert(phi[w]);
    if (h.degree(v) > keep || static_cast<int>(colours.size()) != h.degree(v)) {
      throw InternalError("recoloured vertex " + std::to_string(v) + " keeps a repeated colour");
    }
  }
  if (!is_acyclic_coloring(h, phi)) throw InternalError("recoloured graph still has a 2-coloured cycle");
}

}  // namespace

DefectReport reduce_to_four(const PlaneGraph& g, const Coloring& phi5) {
  if (!is_triangulation(g)) throw NotTriangulation("reduce_to_four needs a triangulation");
  require_total(g, phi5);
  if (phi5.k > 5) throw PreconditionError("reduce_to_four needs a palette of at most 5 colours");
  if (!is_acyclic_coloring(g, phi5)) throw PreconditionError("reduce_to_four needs an acyclic colouring");
  Coloring phi = phi5;
  phi.k = 5;
  Step s = recolour_class(g, phi, 5, 3);
  const PlaneGraph h = g.without_edges(s.removed);
  check_recoloured(h, s.coloring, phi.color_class(s.chosen), 3);

  DefectReport r;
  r.k = 4;
  r.deleted = std::move(s.removed);
  r.coloring = std::move(s.coloring);
  r.bound = (3.0 * g.n() - 12.0) / 5.0;
  r.bound_floor = static_cast<long long>(std::floor(r.bound));
  r.met = static_cast<long long>(r.deleted.size()) <= r.bound_floor;
  r.chosen_class = s.chosen;
  r.class_cost = s.cost;
  return r;
}

DefectReport reduce_to_three(const PlaneGraph& g, const Coloring& phi4, const EdgeSet& prior) {
  const PlaneGraph h = g.without_edges(prior);
  require_total(h, phi4);
  if (phi4.k > 4) throw PreconditionError("reduce_to_three needs a palette of at most 4 colours");
  if (!is_acyclic_coloring(h, phi4)) throw PreconditionError("reduce_to_three needs an acyclic colouring");
  Coloring phi = phi4;
  phi.k = 4;
  Step s = recolour_class(h, phi, 4, 2);
  const PlaneGraph result = h.without_edges(s.removed);
  check_recoloured(result, s.coloring, phi.color_class(s.chosen), 2);

  DefectReport r;
  r.k = 3;
  r.deleted = prior;
  r.deleted.insert(s.removed.begin(), s.removed.end());
  r.coloring = std::move(s.coloring);
  r.bound = (13.0 * g.n() - 42.0) / 10.0;
  r.bound_floor = static_cast<long long>(std::floor(r.bound));
  r.met = static_cast<long long>(r.deleted.size()) <= r.bound_floor;
  r.chosen_class = s.chosen;
  r.class_cost = s.cost;
  return r;
}

DefectBounds defect_bounds(const PlaneGraph& g, const std::optional<Coloring>& phi5, std::uint64_t budget) {
  DefectBounds out;
  PlaneGraph t = g;
  if (!is_triangulation(g)) {
    t = complete_to_triangulation(g);
    out.completed = true;
  }
  Coloring start;
  std::string source;
  if (phi5) {
    start = *phi5;
    source = "supplied";
  } else {
    const SearchResult found = search_coloring(t, 5, true, budget);
    if (found.status == SearchStatus::BudgetExhausted) {
      throw SizeGuardExceeded("acyclic 5-colouring search ran out of budget after " +
                              std::to_string(found.nodes) + " nodes");
    }
    if (!found.coloring) throw InternalError("planar graph without an acyclic 5-colouring");
    start = *found.coloring;
    source = "searched (" + std::to_string(found.nodes) + " nodes)";
  }
  if (out.completed) source += ", completed to a triangulation";

  out.four = reduce_to_four(t, start);
  out.three = reduce_to_three(t, out.four.coloring, out.four.deleted);

  const auto own = g.edges();
  const EdgeSet original(own.begin(), own.end());
  for (DefectReport* r : {&out.four, &out.three}) {
    EdgeSet kept;
    std::set_intersection(r->deleted.begin(), r->deleted.end(), original.begin(), original.end(),
                          std::inserter(kept, kept.begin()));
    r->deleted = std::move(kept);
    r->met = static_cast<long long>(r->deleted.size()) <= r->bound_floor;
    r->source = source;
    if (!is_acyclic_coloring(g.without_edges(r->deleted), r->coloring)) {
      throw InternalError("defect colouring fails on the input graph");
    }
  }
  return out;
}

}  // namespace dacol

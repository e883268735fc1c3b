#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/make_biconnected_planar.hpp>
#include <boost/graph/make_connected.hpp>
#include <boost/graph/make_maximal_planar.hpp>

#include "dacol/planar.hpp"

namespace dacol {

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>,
                          boost::property<boost::edge_index_t, int>>;
using EmbeddingRow = std::vector<boost::graph_traits<BoostGraph>::edge_descriptor>;

void reindex_edges(BoostGraph& bg) {
  auto index = get(boost::edge_index, bg);
  int count = 0;
  for (auto [it, end] = boost::edges(bg); it != end; ++it) put(index, *it, count++);
}

bool embed(BoostGraph& bg, std::vector<EmbeddingRow>& embedding) {
  reindex_edges(bg);
  embedding.assign(boost::num_vertices(bg), {});
  return boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                             boost::boyer_myrvold_params::embedding = &embedding[0]);
}

}  // namespace

PlaneGraph complete_to_triangulation(const PlaneGraph& g) {
  const int n = g.n();
  if (n < 3) return g.without_rotation();
  if (is_triangulation(g)) return embed_triangulation(g);

  BoostGraph bg(static_cast<std::size_t>(n));
  for (const Edge& e : g.edges()) boost::add_edge(e.u, e.v, bg);

  std::vector<EmbeddingRow> embedding;
  if (!embed(bg, embedding)) throw PreconditionError("graph is not planar");
  boost::make_connected(bg);
  if (!embed(bg, embedding)) throw InternalError("make_connected broke planarity");
  boost::make_biconnected_planar(bg, &embedding[0]);
  if (!embed(bg, embedding)) throw InternalError("make_biconnected_planar broke planarity");
  boost::make_maximal_planar(bg, &embedding[0]);

  EdgeSet all;
  for (auto [it, end] = boost::edges(bg); it != end; ++it) {
    Vertex a = static_cast<Vertex>(boost::source(*it, bg));
    Vertex b = static_cast<Vertex>(boost::target(*it, bg));
    if (a != b) all.insert(make_edge(a, b));
  }
  std::vector<Edge> edges(all.begin(), all.end());
  PlaneGraph completed(n, edges, std::nullopt, g.labels());
  if (!is_triangulation(completed)) throw InternalError("completion did not yield a triangulation");
  for (const Edge& e : g.edges()) {
    if (!completed.has_edge(e)) throw InternalError("completion dropped an edge");
  }
  return embed_triangulation(completed);
}

}  // namespace dacol

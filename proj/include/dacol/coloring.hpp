#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "dacol/graph.hpp"

namespace dacol {

// Total map from vertices to colours 1..k. Colour 0 marks an unassigned
// vertex and makes the colouring partial.
struct Coloring {
  std::vector<int> color;
  int k = 0;

  Coloring() = default;
  Coloring(std::vector<int> colors, int palette);

  int operator[](Vertex v) const { return color.at(v); }
  std::size_t size() const { return color.size(); }
  bool is_total() const;
  // Colours that actually occur, ascending.
  std::vector<int> used() const;
  int num_used() const { return static_cast<int>(used().size()); }
  std::vector<Vertex> color_class(int c) const;
  // Restriction along a subgraph's vertex injection.
  Coloring restricted(std::span<const Vertex> to_parent) const;

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

// Relabels colours by order of first appearance (same palette).
Coloring canonical_form(const Coloring& phi);

// Throws PreconditionError unless phi assigns a palette colour to every vertex.
void require_total(const PlaneGraph& g, const Coloring& phi);

bool is_proper(const PlaneGraph& g, const Coloring& phi);

// Subgraph induced by the colour classes i and j (G_ij).
Subgraph bichromatic_subgraph(const PlaneGraph& g, const Coloring& phi, int i, int j);

struct TwoColoredCycle {
  int color_a = 0;
  int color_b = 0;
  std::vector<Vertex> cycle;  // closed walk without the repeated start
};

// Some cycle using only two colours, or nullopt when phi is acyclic.
// Throws PreconditionError on an improper colouring.
std::optional<TwoColoredCycle> two_colored_cycle(const PlaneGraph& g, const Coloring& phi);

bool is_acyclic_coloring(const PlaneGraph& g, const Coloring& phi);

// The proper 3-colouring of a triangulation with all degrees even, or
// nullopt if some degree is odd. Throws NotTriangulation.
std::optional<Coloring> eulerian_three_coloring(const PlaneGraph& g);

// phi3 with v moved to colour 4.
Coloring apex_recoloring(const PlaneGraph& g, const Coloring& phi3, Vertex v);

enum class SearchStatus { Found, NoColoring, BudgetExhausted };

struct SearchResult {
  SearchStatus status = SearchStatus::NoColoring;
  std::optional<Coloring> coloring;
  std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 50'000'000;

// Exact backtracking over vertices 0..n-1. The first vertex gets colour 1 and
// a new colour is only opened after all smaller ones are in use, so each
// partition into colour classes is visited once.
SearchResult search_coloring(const PlaneGraph& g, int k, bool require_acyclic,
                             std::uint64_t node_budget = kDefaultNodeBudget);

// Visits every proper colouring with at most k colours, one per colour-class
// partition, in the same order search_coloring explores. The callback returns
// false to stop early. Returns false if the budget ran out.
bool for_each_coloring(const PlaneGraph& g, int k, bool require_acyclic,
                       const std::function<bool(const Coloring&)>& visit,
                       std::uint64_t node_budget = kDefaultNodeBudget);

// Uniformly shuffled backtracking; any proper colouring with palette k can
// come out. Returns nullopt if none exists.
std::optional<Coloring> random_proper_coloring(const PlaneGraph& g, int k, std::mt19937_64& rng);

}  // namespace dacol

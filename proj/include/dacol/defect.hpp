#pragma once

#include <optional>
#include <string>

#include "dacol/coloring.hpp"
#include "dacol/graph.hpp"

namespace dacol {

struct DefectReport {
  int k = 0;
  EdgeSet deleted;       // cumulative deletions
  Coloring coloring;     // acyclic k-colouring of G - deleted
  double bound = 0;      // (3n - 12) / 5 or (13n - 42) / 10
  long long bound_floor = 0;
  bool met = false;      // |deleted| <= bound_floor
  std::string source;
  int chosen_class = 0;  // colour class of the input that was recoloured
  int class_cost = 0;    // deletions charged to that class
};

// Recolours one class of an acyclic 5-colouring of a triangulation. Each
// vertex of the class keeps three neighbours of distinct colours and takes the
// fourth colour. The class minimises its deletions (ties: smaller class, then
// smaller colour). Colours are renumbered to 1..4.
DefectReport reduce_to_four(const PlaneGraph& g, const Coloring& phi5);

// Same step from an acyclic 4-colouring of g - prior, keeping two neighbours
// of distinct colours. Throws PreconditionError if a recoloured vertex of
// degree >= 2 sees a single colour. `deleted` includes prior.
DefectReport reduce_to_three(const PlaneGraph& g, const Coloring& phi4, const EdgeSet& prior);

struct DefectBounds {
  DefectReport four;
  DefectReport three;
  bool completed = false;  // g was not a triangulation and was completed first
};

// The two-stage pipeline on a planar graph. Non-triangulations are completed
// first; added edges never appear in the reports. Without phi5 an acyclic
// 5-colouring is searched with the given budget (SizeGuardExceeded when it
// runs out).
DefectBounds defect_bounds(const PlaneGraph& g, const std::optional<Coloring>& phi5 = std::nullopt,
                           std::uint64_t budget = kDefaultNodeBudget);

}  // namespace dacol

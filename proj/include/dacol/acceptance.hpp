#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "dacol/coloring.hpp"
#include "dacol/graph.hpp"

namespace dacol {

struct AcceptanceOptions {
  // Oracle-heavy checks stay at n <= 7.
  bool quick = false;
  // Replaces m_value wherever the suite compares it with an oracle; used to
  // check that a broken formula is caught.
  std::function<int(const PlaneGraph&, const Coloring&)> m_value_override;
};

struct AcceptanceRow {
  int criterion = 0;
  std::string claim;
  std::string instance;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct CriterionResult {
  int criterion = 0;
  std::string title;
  std::vector<AcceptanceRow> rows;
  double seconds = 0;
  bool pass() const;
};

inline constexpr int kCriteria = 10;

// Runs criterion 1..10.
CriterionResult run_criterion(int criterion, const AcceptanceOptions& options = {});

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

// One line per row plus one summary line per criterion.
void print_rows(std::ostream& out, const CriterionResult& result);

}  // namespace dacol

// Runs every acceptance criterion at full size and prints one verdict line each.
#include <cstdio>
#include <iostream>

#include "dacol/acceptance.hpp"

int main() {
  bool all = true;
  for (int c = 1; c <= dacol::kCriteria; ++c) {
    const dacol::CriterionResult r = dacol::run_criterion(c);
    dacol::print_rows(std::cout, r);
    std::printf("criterion %d: %s (%zu rows, %.1fs) %s\n", c, r.pass() ? "pass" : "FAIL", r.rows.size(), r.seconds,
                r.title.c_str());
    std::fflush(stdout);
    all = all && r.pass();
  }
  std::cout << (all ? "acceptance: all criteria pass\n" : "acceptance: FAILED\n");
  return all ? 0 : 1;
}

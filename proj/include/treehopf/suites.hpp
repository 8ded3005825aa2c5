#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "treehopf/algebra.hpp"

namespace treehopf {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail; // first counterexample, if any
};

struct SuiteReport {
  std::string suite;
  int max_weight = 0;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  bool ok() const;
};

const std::vector<std::string> &suite_names();
/// 5 for axiom suites, 8 for basis suites, 29 for the tables.
int default_max_weight(const std::string &suite);
/// Throws invalid_argument for an unknown suite. "all" runs every suite at
/// its default weight, capped by max_weight when given.
SuiteReport run_suite(const std::string &suite, int max_weight, std::uint64_t seed);

/// r_n and h_{n,1} for n = 1..29, tabulated.
const std::vector<Integer> &reference_forest_counts();
const std::vector<Integer> &reference_primitive_counts();

} // namespace treehopf

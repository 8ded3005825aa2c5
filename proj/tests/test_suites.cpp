#include <doctest.h>

#include "treehopf/suites.hpp"

using namespace treehopf;

TEST_CASE("every suite passes at small weights") {
  for (const auto &name : suite_names()) {
    if (name == "all")
      continue;
    SuiteReport r = run_suite(name, name == "tables" ? 29 : 4, 3);
    for (const auto &c : r.checks)
      CHECK_MESSAGE(c.passed, name << ": " << c.name << " " << c.detail);
  }
}

TEST_CASE("defaults and errors") {
  CHECK(default_max_weight("hopf-axioms") == 5);
  CHECK(default_max_weight("primitives") == 8);
  CHECK(default_max_weight("tables") == 29);
  CHECK(run_suite("hopf-axioms", 0, 1).max_weight == 5);
  CHECK_THROWS_AS((void)run_suite("nope", 3, 1), std::invalid_argument);
}

TEST_CASE("reports are deterministic for a seed") {
  SuiteReport a = run_suite("roundtrip", 4, 77), b = run_suite("roundtrip", 4, 77);
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t k = 0; k < a.checks.size(); ++k) {
    CHECK(a.checks[k].passed == b.checks[k].passed);
    CHECK(a.checks[k].detail == b.checks[k].detail);
  }
  CHECK(a.seed == 77);
}

TEST_CASE("reference tables") {
  CHECK(reference_forest_counts().size() == 29);
  CHECK(reference_primitive_counts().size() == 29);
  CHECK(reference_forest_counts()[28] == Integer("354426847597"));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <iostream>

#include "dqclab/acceptance.hpp"

TEST_CASE("acceptance criteria") {
  const auto results = dqclab::acceptance::run_criteria({}, std::cout);
  REQUIRE(results.size() == dqclab::acceptance::kCriterionCount);
  for (const auto& r : results) {
    INFO("criterion ", r.id, ": ", r.name, " (", r.note, ")");
    CHECK(r.passed);
  }
}

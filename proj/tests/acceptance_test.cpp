// Acceptance suite: every criterion is exact (tolerance zero) and prints
// one PASS/FAIL line.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <iostream>

#include "vw/acceptance.hpp"

TEST_CASE("acceptance criteria") {
    std::vector<vw::CriterionResult> results = vw::run_acceptance();
    REQUIRE(results.size() == 12);
    vw::report_acceptance(results, std::cout);
    for (const vw::CriterionResult& r : results) {
        CAPTURE(r.id);
        CAPTURE(r.label);
        CAPTURE(r.detail);
        CHECK(r.pass);
    }
}

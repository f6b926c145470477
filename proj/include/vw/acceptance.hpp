#pragma once

#include <string>
#include <vector>

namespace vw {

struct CriterionResult {
    int id = 0;
    std::string label;
    bool pass = false;
    std::string detail;  // failure context, empty when passing
};

/// Runs every acceptance criterion (all exact, tolerance zero) and returns
/// one result per criterion.
std::vector<CriterionResult> run_acceptance();

/// Prints "PASS"/"FAIL" lines; returns true iff everything passed.
bool report_acceptance(const std::vector<CriterionResult>& results, std::ostream& out);

}  // namespace vw

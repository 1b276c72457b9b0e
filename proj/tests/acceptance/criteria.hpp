// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

namespace arcspace::acceptance
{

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    // The criterion as written contradicts the mathematics; it is run
    // literally, reported as FAIL, and does not count against the exit status.
    bool known_erratum = false;
    std::string detail;
    double seconds = 0;
    double budget = 0;
};

// Criteria 1..10.
CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_all();
// "PASS  3  title (0.123 s / 10 s): detail"
std::string format(const CriterionResult &r);
// True when every failure is a known erratum.
bool acceptable(const std::vector<CriterionResult> &rs);

} // namespace arcspace::acceptance

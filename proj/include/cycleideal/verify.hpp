#pragma once

// The verification suites: every acceptance criterion as a runnable check
// with its tolerance and time bound pinned in code. The CLI `verify`
// subcommand runs a named subset; the acceptance binary runs everything.

#include <string>
#include <vector>

namespace cycleideal {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;  // failure lines and load-bearing notes
    double seconds = 0.0;
};

// Criterion ids run in ascending order; unknown ids are rejected.
std::vector<CriterionResult> run_criteria(const std::vector<int>& ids, int jobs);

std::vector<std::string> verify_suite_names();

// figures -> {1,2,3}, thm-3-5-7 -> {4}, revised-conjecture -> {5},
// uniform-linear-part -> {6}, path-lemmas -> {10}.
std::vector<int> verify_suite_criteria(const std::string& suite);

inline const std::vector<int> kAllCriteria = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};

}  // namespace cycleideal

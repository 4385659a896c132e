#pragma once

#include <string>
#include <vector>

namespace critlib::acceptance {

struct CriterionInfo {
    int id = 0;
    std::string name;
    std::vector<std::string> tags;  // module names, used by --only
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::vector<std::string> failures;  // empty when passed
    std::vector<std::string> notes;     // counts and other facts worth printing
    double seconds = 0;
};

const std::vector<CriterionInfo>& criteria();

// Selector is a criterion number ("7") or a tag ("rootsys"); empty selects everything.
std::vector<int> select_criteria(const std::vector<std::string>& selectors);

CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_criteria(const std::vector<int>& ids);

}  // namespace critlib::acceptance

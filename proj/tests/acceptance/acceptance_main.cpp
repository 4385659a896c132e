// One line per acceptance criterion; exit status is nonzero if any fails.
#include <cstdio>
#include <string>
#include <vector>

#include "critlib_acceptance/acceptance.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> selectors(argv + 1, argv + argc);
    int failed = 0;
    for (int id : critlib::acceptance::select_criteria(selectors)) {
        auto r = critlib::acceptance::run_criterion(id);
        std::printf("%s criterion %2d: %s (%.2f s)\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds);
        for (const auto& n : r.notes) std::printf("     note: %s\n", n.c_str());
        for (const auto& f : r.failures) std::printf("     fail: %s\n", f.c_str());
        if (!r.passed) ++failed;
    }
    std::fflush(stdout);
    return failed == 0 ? 0 : 1;
}

// Acceptance gate: one pass/fail line per criterion.  Tolerances are pinned
// inside the suite (1e-6 critical-value fidelity, 1e-3 capacity localization,
// 1e-9 index comparisons); everything else is exact.
#include "sbl/acceptance_suite.hpp"
#include <cstdio>

int main() {
    std::vector<sbl::CriterionResult> results = sbl::run_acceptance(20260826u);
    bool all = true;
    for (const auto& r : results) {
        std::printf("[%s] %2d  %-62s %s  (%.1fs)\n", r.pass ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.detail.c_str(), r.seconds);
        all = all && r.pass;
    }
    std::printf("%s: %zu/%zu criteria passed\n", all ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
                static_cast<std::size_t>(
                    std::count_if(results.begin(), results.end(),
                                  [](const sbl::CriterionResult& r) { return r.pass; })),
                results.size());
    return all ? 0 : 1;
}

// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.
#include <cstdio>

#include "swfront/acceptance.hpp"

int main() {
    int failures = 0;
    auto results = swfront::acceptance::run_all(
        [&](const swfront::acceptance::CriterionResult& r) {
            std::printf("[%s] criterion %2d: %s%s%s\n", r.passed ? "PASS" : "FAIL", r.id,
                        r.name.c_str(), r.details.empty() ? "" : " -- ",
                        r.details.c_str());
            std::fflush(stdout);
            if (!r.passed) ++failures;
        });
    std::printf("%zu/%zu criteria passed\n", results.size() - failures, results.size());
    return failures == 0 ? 0 : 1;
}

#ifndef SWFRONT_ACCEPTANCE_HPP
#define SWFRONT_ACCEPTANCE_HPP

#include <functional>
#include <string>
#include <vector>

namespace swfront::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string details;
};

// Runs every acceptance criterion at its pinned tolerance; the callback (when
// given) fires as each criterion finishes.
std::vector<CriterionResult> run_all(
    const std::function<void(const CriterionResult&)>& on_done = {});

} // namespace swfront::acceptance

#endif

#pragma once

#include <functional>
#include <string>
#include <vector>

namespace workbench {

struct ScenarioResult {
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct Scenario {
    std::string name;
    std::string summary;
    std::function<ScenarioResult()> run;
};

/// The full verification suite, one scenario per release gate. Each scenario
/// pins its own tolerances and time budgets.
const std::vector<Scenario>& acceptance_scenarios();

}  // namespace workbench

#ifndef ATTDEL_SCENARIOS_HPP
#define ATTDEL_SCENARIOS_HPP

#include <optional>
#include <string>
#include <vector>

#include "attdel/kripke.hpp"

namespace attdel {

// The invisible-gorilla starting point: Ann (a) attends the ball passes
// (p) but not the gorilla (g) and falsely believes she attends both; Bob
// (b) attends everything and knows the facts.
PointedModel gorilla_model();

struct ScenarioCheck {
  std::string formula;
  bool expected;
};

// One stage of a scenario: an optional event to apply, then checks on
// the current model.
struct ScenarioStage {
  std::optional<std::string> event;
  std::vector<ScenarioCheck> checks;
};

struct Scenario {
  std::string name;
  std::string description;
  PointedModel initial;
  std::vector<ScenarioStage> stages;
};

std::vector<std::string> scenario_names();
Scenario get_scenario(const std::string& name);

struct ScenarioCheckResult {
  int stage;
  std::string formula;
  bool expected;
  bool actual;
};

struct ScenarioReport {
  std::string name;
  std::vector<ScenarioCheckResult> checks;
  bool ok = true;
  // Models after each stage, serialized lazily by callers that need
  // them; kept here so the CLI can expose intermediate states.
  std::vector<PointedModel> states;
};

ScenarioReport run_scenario(const std::string& name);

}  // namespace attdel

#endif

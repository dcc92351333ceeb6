#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jel/agents.hpp"
#include "jel/dialogue.hpp"

namespace jel {

// Sections [agents], [store], [kb], [universe] and [script]; '#' starts a
// comment. Formulas use the concrete grammar of syntax.hpp.
struct Scenario {
  std::vector<AgentProfile> agents;
  std::vector<std::pair<Agent, Commitment>> store;  // owner, commitment
  KnowledgeBase kb;
  std::vector<SpeechAct> script;
};

// Throws ScenarioFormat (with a line number) or the underlying parse error.
Scenario parse_scenario(std::string_view text, bool require_agents = true);

// One [script] line, e.g. "request-just a t j t trip".
SpeechAct parse_script_line(std::string_view line);

std::string_view trip_booking_text();
Scenario trip_booking_scenario();

DialogueState initial_state(const Scenario& s);

struct AgentOutcome {
  AgentProfile profile;
  std::optional<Formula> goal;  // body of the agent's first justification request
  std::optional<Decision> decision;
  std::vector<OpposingExplanation> opposing;
};

struct ScenarioRun {
  DialogueState state;
  std::vector<AgentOutcome> outcomes;
};

// Runs the script, then evaluates every agent that asked for a justification.
ScenarioRun run_scenario(const Scenario& s, int depth = 3);

std::vector<std::string> trace_lines(const DialogueState& state);
// accepts(...) lines plus defeated/undefeated opposing explanations.
std::vector<std::string> outcome_lines(const ScenarioRun& run);

}  // namespace jel

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vd/game.hpp"
#include "vd/rules.hpp"

namespace vd {

// Strategy of one villager in the repeated game. All kinds are deterministic
// functions of the round history.
struct AgentSpec {
  enum class Kind {
    fixed,                  // always the same action
    best_response_to_last,  // lowest best response to the others' last-round
                            // actions; the first round assumes everyone
                            // played action 0
    coordinator,            // plays its slot of an agreed target profile
    trigger,                // plays `start` until any opponent has betrayed,
                            // then `fallback` for good
  };

  Kind kind = Kind::fixed;
  int action = kObey;                      // fixed
  ActionProfile target;                    // coordinator
  int start = kDefy;                       // trigger
  int fallback = kBetray;                  // trigger
  std::optional<Rational> exit_below;      // leave the game when a round pays less

  static AgentSpec make_fixed(int action);
  static AgentSpec make_best_response_to_last();
  static AgentSpec make_coordinator(ActionProfile target);
  static AgentSpec make_trigger(int start, int fallback);

  friend bool operator==(const AgentSpec&, const AgentSpec&) = default;
};

struct RoundRecord {
  ActionProfile profile;
  PayoffVector villager_payoffs;
  Rational robber_payoff;
};

enum class TerminationReason { robber_defeated, participant_exit, round_limit };

// Round-by-round log of one repeated game. `exited_participant` is the
// villager index, or n_villagers for the robber.
struct Trajectory {
  VillagerRules rules;
  std::vector<RoundRecord> rounds;
  TerminationReason termination = TerminationReason::round_limit;
  std::optional<int> exited_participant;
  PayoffVector cumulative_villagers;
  Rational cumulative_robber;
};

// Plays the stage game round by round. Stops when defiance succeeds (the
// robber is defeated for good), when a villager's exit policy fires, when the
// robber's round take falls below its exit threshold, or at the round limit —
// checked in that order. The seed is reserved for randomized agents; the
// built-in agents ignore it. Throws AgentCountMismatchError and
// InvalidActionError.
Trajectory simulate(const VillagerRules& rules, const std::vector<AgentSpec>& agents,
                    const std::optional<Rational>& robber_exit_threshold, int rounds,
                    std::uint64_t seed);

struct TrajectorySummary {
  int rounds_played = 0;
  TerminationReason termination = TerminationReason::round_limit;
  std::optional<int> exited_participant;
  PayoffVector cumulative_villagers;
  Rational cumulative_robber;
  std::vector<std::vector<int>> action_counts;  // [villager][action]
  bool final_profile_is_weak_equilibrium = false;
};

// Throws EmptyTrajectoryError when the trajectory holds no rounds.
TrajectorySummary trajectory_summary(const Trajectory& trajectory);

enum class DynamicsTerminal { fixed_point, cycle, step_limit };

struct DynamicsResult {
  std::vector<ActionProfile> path;  // starts at the initial profile; a cycle
                                    // ends with the revisited profile
  DynamicsTerminal terminal = DynamicsTerminal::step_limit;
  int cycle_length = 0;
};

// Sequential best-response dynamics: each step, the lowest-indexed player not
// already best-responding switches to its lowest-indexed best response. Fixed
// points are exactly the weak pure equilibria; revisiting a profile proves a
// cycle.
DynamicsResult best_response_dynamics(const NormalFormGame& game, const ActionProfile& initial,
                                      int max_steps);

}  // namespace vd

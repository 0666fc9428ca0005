#include "vd/dynamics.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "vd/errors.hpp"
#include "vd/solver.hpp"

namespace vd {

AgentSpec AgentSpec::make_fixed(int action) {
  AgentSpec spec;
  spec.kind = Kind::fixed;
  spec.action = action;
  return spec;
}

AgentSpec AgentSpec::make_best_response_to_last() {
  AgentSpec spec;
  spec.kind = Kind::best_response_to_last;
  return spec;
}

AgentSpec AgentSpec::make_coordinator(ActionProfile target) {
  AgentSpec spec;
  spec.kind = Kind::coordinator;
  spec.target = std::move(target);
  return spec;
}

AgentSpec AgentSpec::make_trigger(int start, int fallback) {
  AgentSpec spec;
  spec.kind = Kind::trigger;
  spec.start = start;
  spec.fallback = fallback;
  return spec;
}

namespace {

void check_action(int action, const std::string& what) {
  if (action < 0 || action > kBetray) {
    throw InvalidActionError(what + " action index " + std::to_string(action) +
                             " is not a villager action");
  }
}

void validate_agents(const VillagerRules& rules, const std::vector<AgentSpec>& agents) {
  if (static_cast<int>(agents.size()) != rules.n_villagers) {
    throw AgentCountMismatchError("got " + std::to_string(agents.size()) + " agents for " +
                                  std::to_string(rules.n_villagers) + " villagers");
  }
  for (const AgentSpec& agent : agents) {
    switch (agent.kind) {
      case AgentSpec::Kind::fixed:
        check_action(agent.action, "fixed");
        break;
      case AgentSpec::Kind::best_response_to_last:
        break;
      case AgentSpec::Kind::coordinator:
        if (agent.target.size() != rules.n_villagers) {
          throw InvalidActionError("coordinator target has length " +
                                   std::to_string(agent.target.size()) + ", expected " +
                                   std::to_string(rules.n_villagers));
        }
        for (int a : agent.target.actions) check_action(a, "coordinator target");
        break;
      case AgentSpec::Kind::trigger:
        check_action(agent.start, "trigger start");
        check_action(agent.fallback, "trigger fallback");
        if (agent.start == agent.fallback) {
          throw InvalidActionError("trigger fallback must differ from its start action");
        }
        break;
    }
  }
}

int decide(const AgentSpec& agent, int self, const std::vector<RoundRecord>& history,
           const NormalFormGame& stage_game) {
  switch (agent.kind) {
    case AgentSpec::Kind::fixed:
      return agent.action;
    case AgentSpec::Kind::coordinator:
      return agent.target[self];
    case AgentSpec::Kind::best_response_to_last: {
      std::vector<int> others;
      if (history.empty()) {
        others.assign(static_cast<std::size_t>(stage_game.player_count() - 1), 0);
      } else {
        others = others_of(history.back().profile, self);
      }
      return best_responses(stage_game, self, others).front();
    }
    case AgentSpec::Kind::trigger: {
      for (const RoundRecord& round : history) {
        for (int p = 0; p < round.profile.size(); ++p) {
          if (p != self && round.profile[p] == kBetray) return agent.fallback;
        }
      }
      return agent.start;
    }
  }
  return agent.action;  // unreachable
}

}  // namespace

Trajectory simulate(const VillagerRules& rules, const std::vector<AgentSpec>& agents,
                    const std::optional<Rational>& robber_exit_threshold, int rounds,
                    std::uint64_t seed) {
  (void)seed;  // deterministic agents only, for now
  rules.validate();
  validate_agents(rules, agents);
  if (rounds < 1) {
    throw EmptyTrajectoryError("round limit must be at least 1, got " + std::to_string(rounds));
  }

  const NormalFormGame stage_game = build_villager_game(rules);
  const int n = rules.n_villagers;

  Trajectory trajectory;
  trajectory.rules = rules;
  trajectory.cumulative_villagers.assign(static_cast<std::size_t>(n), Rational(0));
  trajectory.cumulative_robber = 0;

  for (int round = 0; round < rounds; ++round) {
    ActionProfile profile;
    profile.actions.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      profile[i] = decide(agents[static_cast<std::size_t>(i)], i, trajectory.rounds, stage_game);
    }
    VillagerOutcome result = outcome(rules, profile);
    for (int i = 0; i < n; ++i) {
      trajectory.cumulative_villagers[static_cast<std::size_t>(i)] +=
          result.villager_payoffs[static_cast<std::size_t>(i)];
    }
    trajectory.cumulative_robber += result.robber_payoff;
    trajectory.rounds.push_back(
        {std::move(profile), std::move(result.villager_payoffs), result.robber_payoff});

    if (result.defiance_succeeded) {
      // Beating the robber once ends the depredation for good.
      trajectory.termination = TerminationReason::robber_defeated;
      return trajectory;
    }
    const RoundRecord& played = trajectory.rounds.back();
    for (int i = 0; i < n; ++i) {
      const auto& policy = agents[static_cast<std::size_t>(i)].exit_below;
      if (policy && played.villager_payoffs[static_cast<std::size_t>(i)] < *policy) {
        trajectory.termination = TerminationReason::participant_exit;
        trajectory.exited_participant = i;
        return trajectory;
      }
    }
    if (robber_exit_threshold && played.robber_payoff < *robber_exit_threshold) {
      trajectory.termination = TerminationReason::participant_exit;
      trajectory.exited_participant = n;  // the robber walks away
      return trajectory;
    }
  }
  trajectory.termination = TerminationReason::round_limit;
  return trajectory;
}

TrajectorySummary trajectory_summary(const Trajectory& trajectory) {
  if (trajectory.rounds.empty()) {
    throw EmptyTrajectoryError("trajectory holds no rounds");
  }
  const int n = trajectory.rules.n_villagers;
  TrajectorySummary summary;
  summary.rounds_played = static_cast<int>(trajectory.rounds.size());
  summary.termination = trajectory.termination;
  summary.exited_participant = trajectory.exited_participant;
  summary.cumulative_villagers = trajectory.cumulative_villagers;
  summary.cumulative_robber = trajectory.cumulative_robber;
  summary.action_counts.assign(static_cast<std::size_t>(n), std::vector<int>(3, 0));
  for (const RoundRecord& round : trajectory.rounds) {
    for (int i = 0; i < n; ++i) {
      ++summary.action_counts[static_cast<std::size_t>(i)][static_cast<std::size_t>(round.profile[i])];
    }
  }
  const NormalFormGame stage_game = build_villager_game(trajectory.rules);
  summary.final_profile_is_weak_equilibrium =
      is_pure_equilibrium(stage_game, trajectory.rounds.back().profile, DominanceMode::weak);
  return summary;
}

DynamicsResult best_response_dynamics(const NormalFormGame& game, const ActionProfile& initial,
                                      int max_steps) {
  game.payoff_at(initial);  // validates the profile

  DynamicsResult result;
  result.path.push_back(initial);
  std::map<ActionProfile, std::size_t> first_seen;
  first_seen.emplace(initial, 0);

  ActionProfile current = initial;
  for (int step = 0; step <= max_steps; ++step) {
    int mover = -1;
    int switch_to = -1;
    for (int p = 0; p < game.player_count() && mover < 0; ++p) {
      const std::vector<int> best = best_responses(game, p, others_of(current, p));
      if (!std::binary_search(best.begin(), best.end(), current[p])) {
        mover = p;
        switch_to = best.front();
      }
    }
    if (mover < 0) {
      result.terminal = DynamicsTerminal::fixed_point;
      return result;
    }
    if (step == max_steps) break;  // out of budget before this switch

    current[mover] = switch_to;
    result.path.push_back(current);
    auto [it, inserted] = first_seen.emplace(current, result.path.size() - 1);
    if (!inserted) {
      result.terminal = DynamicsTerminal::cycle;
      result.cycle_length = static_cast<int>(result.path.size() - 1 - it->second);
      return result;
    }
  }
  result.terminal = DynamicsTerminal::step_limit;
  return result;
}

}  // namespace vd

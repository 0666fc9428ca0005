#include "vd/solver.hpp"

#include <algorithm>
#include <numeric>

#include "vd/errors.hpp"

namespace vd {

namespace {

// Calls fn(profile) for every combination of the listed actions of every
// player except `skip`, leaving profile[skip] untouched.
template <typename Fn>
void for_each_opponent_profile(const std::vector<std::vector<int>>& actions, int skip,
                               ActionProfile& profile, int player, Fn&& fn) {
  if (player == static_cast<int>(actions.size())) {
    fn(profile);
    return;
  }
  if (player == skip) {
    for_each_opponent_profile(actions, skip, profile, player + 1, fn);
    return;
  }
  for (int a : actions[static_cast<std::size_t>(player)]) {
    profile[player] = a;
    for_each_opponent_profile(actions, skip, profile, player + 1, fn);
  }
}

std::vector<std::vector<int>> full_action_sets(const NormalFormGame& game) {
  std::vector<std::vector<int>> actions(static_cast<std::size_t>(game.player_count()));
  for (int p = 0; p < game.player_count(); ++p) {
    actions[static_cast<std::size_t>(p)].resize(static_cast<std::size_t>(game.action_count(p)));
    std::iota(actions[static_cast<std::size_t>(p)].begin(),
              actions[static_cast<std::size_t>(p)].end(), 0);
  }
  return actions;
}

// Dominance of `dominator` over `dominated` for `player`, restricted to the
// given alive action sets of the opponents.
bool dominates(const NormalFormGame& game, const std::vector<std::vector<int>>& actions, int player,
               int dominated, int dominator, DominanceMode mode) {
  bool strictly_somewhere = false;
  bool everywhere = true;
  ActionProfile probe;
  probe.actions.assign(static_cast<std::size_t>(game.player_count()), 0);
  for_each_opponent_profile(actions, player, probe, 0, [&](ActionProfile& profile) {
    if (!everywhere) return;
    profile[player] = dominated;
    const Rational low = game.payoff_at(profile)[static_cast<std::size_t>(player)];
    profile[player] = dominator;
    const Rational high = game.payoff_at(profile)[static_cast<std::size_t>(player)];
    if (mode == DominanceMode::strict) {
      if (high <= low) everywhere = false;
    } else {
      if (high < low) everywhere = false;
      if (high > low) strictly_somewhere = true;
    }
  });
  if (!everywhere) return false;
  return mode == DominanceMode::strict || strictly_somewhere;
}

}  // namespace

bool is_pure_equilibrium(const NormalFormGame& game, const ActionProfile& profile,
                         DominanceMode mode) {
  ActionProfile probe = profile;
  game.payoff_at(profile);  // validates
  for (int p = 0; p < game.player_count(); ++p) {
    const Rational current = game.payoff_at(profile)[static_cast<std::size_t>(p)];
    for (int a = 0; a < game.action_count(p); ++a) {
      if (a == profile[p]) continue;
      probe[p] = a;
      const Rational deviated = game.payoff_at(probe)[static_cast<std::size_t>(p)];
      if (mode == DominanceMode::weak ? deviated > current : deviated >= current) {
        return false;
      }
    }
    probe[p] = profile[p];
  }
  return true;
}

std::vector<ActionProfile> pure_equilibria(const NormalFormGame& game, DominanceMode mode) {
  std::vector<ActionProfile> equilibria;
  for (std::size_t i = 0; i < game.profile_count(); ++i) {
    ActionProfile profile = game.profile_at(i);
    if (is_pure_equilibrium(game, profile, mode)) equilibria.push_back(std::move(profile));
  }
  return equilibria;
}

std::vector<std::pair<int, int>> dominated_actions(const NormalFormGame& game, int player,
                                                   DominanceMode mode) {
  const auto actions = full_action_sets(game);
  std::vector<std::pair<int, int>> pairs;
  for (int dominated = 0; dominated < game.action_count(player); ++dominated) {
    for (int dominator = 0; dominator < game.action_count(player); ++dominator) {
      if (dominated == dominator) continue;
      if (dominates(game, actions, player, dominated, dominator, mode)) {
        pairs.emplace_back(dominated, dominator);
      }
    }
  }
  return pairs;
}

EliminationResult iterated_elimination(const NormalFormGame& game, DominanceMode mode) {
  auto alive = full_action_sets(game);
  std::vector<EliminationStep> trace;

  bool eliminated = true;
  while (eliminated) {
    eliminated = false;
    for (int p = 0; p < game.player_count() && !eliminated; ++p) {
      const auto& own = alive[static_cast<std::size_t>(p)];
      if (own.size() <= 1) continue;
      for (std::size_t i = 0; i < own.size() && !eliminated; ++i) {
        for (std::size_t j = 0; j < own.size(); ++j) {
          if (i == j) continue;
          if (dominates(game, alive, p, own[i], own[j], mode)) {
            trace.push_back({p, own[i], mode, own[j]});
            alive[static_cast<std::size_t>(p)].erase(alive[static_cast<std::size_t>(p)].begin() +
                                                     static_cast<std::ptrdiff_t>(i));
            eliminated = true;
            break;
          }
        }
      }
    }
  }

  // Rebuild the reduced game over the surviving actions.
  std::vector<std::vector<std::string>> names(static_cast<std::size_t>(game.player_count()));
  std::size_t product = 1;
  for (int p = 0; p < game.player_count(); ++p) {
    for (int a : alive[static_cast<std::size_t>(p)]) {
      names[static_cast<std::size_t>(p)].push_back(game.action_name(p, a));
    }
    product *= alive[static_cast<std::size_t>(p)].size();
  }
  std::vector<PayoffVector> payoffs;
  std::vector<ProfileAnnotation> annotations;
  payoffs.reserve(product);
  ActionProfile original;
  original.actions.assign(static_cast<std::size_t>(game.player_count()), 0);
  for (std::size_t index = 0; index < product; ++index) {
    std::size_t rest = index;
    for (int p = game.player_count() - 1; p >= 0; --p) {
      const auto& own = alive[static_cast<std::size_t>(p)];
      original[p] = own[rest % own.size()];
      rest /= own.size();
    }
    payoffs.push_back(game.payoff_at(original));
    if (game.has_annotations()) annotations.push_back(game.annotation_at(original));
  }

  EliminationResult result;
  result.reduced = make_game_dense(game.player_count(), std::move(names), std::move(payoffs),
                                   std::move(annotations));
  result.trace = std::move(trace);
  result.surviving_actions = std::move(alive);
  return result;
}

bool pareto_dominates(const PayoffVector& a, const PayoffVector& b) {
  bool strictly = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
    if (a[i] > b[i]) strictly = true;
  }
  return strictly;
}

std::vector<ActionProfile> pareto_front(const NormalFormGame& game) {
  const auto profiles = enumerate_profiles(game);
  std::vector<ActionProfile> front;
  for (const auto& candidate : profiles) {
    const PayoffVector& value = game.payoff_at(candidate);
    bool dominated = false;
    for (const auto& other : profiles) {
      if (pareto_dominates(game.payoff_at(other), value)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) front.push_back(candidate);
  }
  return front;
}

Selection select_among_equilibria(const NormalFormGame& game,
                                  const std::vector<ActionProfile>& equilibria,
                                  SelectionRule rule) {
  if (equilibria.empty()) {
    throw EmptyEquilibriumSetError("cannot select among zero equilibria");
  }
  std::vector<ActionProfile> sorted = equilibria;
  std::sort(sorted.begin(), sorted.end());

  Selection selection;
  selection.rule = rule;
  switch (rule) {
    case SelectionRule::first:
      selection.candidates.push_back(sorted.front());
      break;
    case SelectionRule::payoff_dominance: {
      for (const auto& candidate : sorted) {
        const PayoffVector& value = game.payoff_at(candidate);
        bool dominated = false;
        for (const auto& other : sorted) {
          if (pareto_dominates(game.payoff_at(other), value)) {
            dominated = true;
            break;
          }
        }
        if (!dominated) selection.candidates.push_back(candidate);
      }
      break;
    }
    case SelectionRule::maximin: {
      Rational best_floor;
      bool have = false;
      for (const auto& candidate : sorted) {
        const PayoffVector& value = game.payoff_at(candidate);
        Rational floor = value.front();
        for (const Rational& v : value) floor = min(floor, v);
        if (!have || floor > best_floor) {
          best_floor = floor;
          have = true;
          selection.candidates.assign(1, candidate);
        } else if (floor == best_floor) {
          selection.candidates.push_back(candidate);
        }
      }
      break;
    }
  }
  selection.ambiguous = selection.candidates.size() != 1;
  selection.selected = selection.candidates.front();
  return selection;
}

EquilibriumReport analyze(const NormalFormGame& game, const AnalysisOptions& options) {
  EquilibriumReport report;
  report.weak_equilibria = pure_equilibria(game, DominanceMode::weak);
  report.strict_equilibria = pure_equilibria(game, DominanceMode::strict);
  if (options.pareto) report.pareto = pareto_front(game);
  if (options.elimination) {
    EliminationResult elimination = iterated_elimination(game, *options.elimination);
    report.dominance_trace = std::move(elimination.trace);
    report.surviving_actions = std::move(elimination.surviving_actions);
  }
  if (options.selection) {
    const auto& pool = options.equilibria_mode == DominanceMode::weak ? report.weak_equilibria
                                                                      : report.strict_equilibria;
    if (!pool.empty()) {
      report.selection = select_among_equilibria(game, pool, *options.selection);
    }
  }
  return report;
}

}  // namespace vd

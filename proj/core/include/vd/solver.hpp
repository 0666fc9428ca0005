#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "vd/game.hpp"

namespace vd {

enum class DominanceMode { weak, strict };

// Pure-strategy Nash equilibria in lexicographic profile order. A weak
// equilibrium admits no strictly improving unilateral deviation; a strict one
// loses strictly on every deviation.
std::vector<ActionProfile> pure_equilibria(const NormalFormGame& game, DominanceMode mode);

bool is_pure_equilibrium(const NormalFormGame& game, const ActionProfile& profile,
                         DominanceMode mode);

// (dominated action, dominating action) pairs for one player, compared over
// every combination of opponent actions. Weak dominance requires <= everywhere
// and < somewhere; strict requires < everywhere. Ordered by dominated action,
// then dominating action.
std::vector<std::pair<int, int>> dominated_actions(const NormalFormGame& game, int player,
                                                   DominanceMode mode);

struct EliminationStep {
  int player = 0;
  int action = 0;             // index in the original game
  DominanceMode mode = DominanceMode::strict;
  int dominating_action = 0;  // index in the original game
};

struct EliminationResult {
  NormalFormGame reduced;
  std::vector<EliminationStep> trace;
  // Surviving actions per player, as indices into the original game.
  std::vector<std::vector<int>> surviving_actions;
};

// Removes dominated actions one at a time until none remain, always picking
// the lowest (player, action) pair with its lowest dominating action. For
// strict dominance the surviving set is order-independent; for weak dominance
// this fixed order is the tie-break that makes runs reproducible.
EliminationResult iterated_elimination(const NormalFormGame& game, DominanceMode mode);

// Profiles not Pareto-dominated by any other profile, lexicographic order.
std::vector<ActionProfile> pareto_front(const NormalFormGame& game);

bool pareto_dominates(const PayoffVector& a, const PayoffVector& b);

enum class SelectionRule { payoff_dominance, maximin, first };

struct Selection {
  ActionProfile selected;                 // lexicographically first candidate
  std::vector<ActionProfile> candidates;  // all maximal equilibria under the rule
  SelectionRule rule = SelectionRule::first;
  bool ambiguous = false;                 // more than one candidate survived the rule
};

// Coordinated choice among equilibria; the model of players who can talk
// before playing. payoff_dominance keeps the Pareto-maximal equilibria,
// maximin keeps those maximizing the worst per-player payoff, first keeps the
// lexicographically first. Ties are reported, never silently resolved beyond
// the lexicographic representative. Throws EmptyEquilibriumSetError.
Selection select_among_equilibria(const NormalFormGame& game,
                                  const std::vector<ActionProfile>& equilibria,
                                  SelectionRule rule);

struct EquilibriumReport {
  std::vector<ActionProfile> weak_equilibria;
  std::vector<ActionProfile> strict_equilibria;
  std::vector<ActionProfile> pareto;
  std::vector<EliminationStep> dominance_trace;
  std::vector<std::vector<int>> surviving_actions;  // empty unless elimination ran
  std::optional<Selection> selection;
};

struct AnalysisOptions {
  DominanceMode equilibria_mode = DominanceMode::weak;  // which set feeds selection
  std::optional<SelectionRule> selection = SelectionRule::payoff_dominance;
  bool pareto = true;
  std::optional<DominanceMode> elimination;  // run iterated elimination when set
};

// One-stop analysis used by the scenario runner.
EquilibriumReport analyze(const NormalFormGame& game, const AnalysisOptions& options);

}  // namespace vd

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vd/game.hpp"
#include "vd/rational.hpp"

namespace vd {

// Canonical villager action order. Profile enumeration, tie-breaking and the
// scenario format all depend on this order staying fixed.
enum VillagerAction : int { kDefy = 0, kObey = 1, kBetray = 2 };

const std::vector<std::string>& villager_action_names();

// The rule maker's full parameter set. Defaults are the base scenario: three
// villagers, five bags produced each, a three-bag tax, a two-bag reward pool
// and a robber two and a half times as strong as one villager.
struct VillagerRules {
  int n_villagers = 3;
  Rational endowment = 5;                      // bags produced per villager
  Rational tax = 3;                            // bags taken from a compliant villager
  Rational reward_pool = 2;                    // bags split among betrayers
  bool reward_enabled = true;
  bool punishment_enabled = true;              // failed defiers lose everything
  Rational robber_strength = Rational(5, 2);
  Rational villager_strength = 1;
  bool betrayer_aids_robber = false;           // betrayers add their strength to the robber
  std::optional<Rational> survival_threshold;  // bags needed to survive, when modeled

  // Throws ValidationError; `context` prefixes the offending field name.
  void validate(const std::string& context = "rules") const;

  friend bool operator==(const VillagerRules&, const VillagerRules&) = default;
};

// Resolution of one action profile under a rule set.
struct VillagerOutcome {
  PayoffVector villager_payoffs;  // bags kept, per villager
  Rational robber_payoff;         // bags taken minus rewards paid
  bool defiance_succeeded = false;
  int defier_count = 0;
  int betrayer_count = 0;
};

// Resolves a profile over {Defy, Obey, Betray}:
//   - defiance succeeds iff d*w > sigma (+ b*w when betrayers aid the robber);
//     on success everyone keeps the endowment and the robber gets nothing;
//   - on failure, obeyers pay min(tax, endowment); defiers lose everything
//     when punishment is enabled, otherwise pay like obeyers; betrayers with
//     at least one defier to report split the reward pool evenly and pay no
//     tax, otherwise they are treated as obeyers.
// Grain conservation holds by construction:
//   sum(villager_payoffs) + robber_payoff == n_villagers * endowment.
VillagerOutcome outcome(const VillagerRules& rules, const ActionProfile& profile);

// The full n-player, 3-action game induced by a rule set. Per-profile
// annotations carry the robber's take and the defiance flag.
NormalFormGame build_villager_game(const VillagerRules& rules);

// With no defier, betraying and obeying are the same act; this rewrites every
// Betray to Obey in that case. Idempotent and outcome-preserving.
ActionProfile canonical_profile(const VillagerRules& rules, const ActionProfile& profile);

// Survival-threshold utility: payoffs below the threshold all collapse to the
// ruin level zero; everything at or above it is kept as is. Componentwise.
// Throws NegativePayoffError on negative input.
PayoffVector survival_utilities(const PayoffVector& payoffs, const Rational& threshold);

// The two prisoner's dilemma matrices, with utilities as negated sentence
// years (six months = 1/2). The modified variant keeps the classic value for
// the cell where both stay silent.
enum class PdVariant { classic, modified };

NormalFormGame pd_game(PdVariant variant);

}  // namespace vd

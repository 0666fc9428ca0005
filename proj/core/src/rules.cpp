#include "vd/rules.hpp"

#include <utility>

#include "vd/errors.hpp"

namespace vd {

const std::vector<std::string>& villager_action_names() {
  static const std::vector<std::string> names = {"Defy", "Obey", "Betray"};
  return names;
}

void VillagerRules::validate(const std::string& context) const {
  auto reject = [&](const std::string& field, const std::string& why) {
    throw ValidationError(context + "." + field + ": " + why);
  };
  if (n_villagers < 2) reject("n_villagers", "need at least 2 villagers");
  if (endowment < 0) reject("endowment", "must be non-negative");
  if (tax < 0) reject("tax", "must be non-negative");
  if (reward_pool < 0) reject("reward_pool", "must be non-negative");
  if (robber_strength <= 0) reject("robber_strength", "must be positive");
  if (villager_strength <= 0) reject("villager_strength", "must be positive");
  if (survival_threshold && *survival_threshold < 0) {
    reject("survival_threshold", "must be non-negative");
  }
}

VillagerOutcome outcome(const VillagerRules& rules, const ActionProfile& profile) {
  if (profile.size() != rules.n_villagers) {
    throw InvalidProfileError("profile has length " + std::to_string(profile.size()) +
                              ", expected " + std::to_string(rules.n_villagers));
  }
  VillagerOutcome result;
  for (int i = 0; i < profile.size(); ++i) {
    switch (profile[i]) {
      case kDefy:
        ++result.defier_count;
        break;
      case kObey:
        break;
      case kBetray:
        ++result.betrayer_count;
        break;
      default:
        throw InvalidProfileError("action index " + std::to_string(profile[i]) +
                                  " is not a villager action");
    }
  }

  const Rational defier_force = Rational(result.defier_count) * rules.villager_strength;
  Rational robber_force = rules.robber_strength;
  if (rules.betrayer_aids_robber) {
    robber_force += Rational(result.betrayer_count) * rules.villager_strength;
  }
  result.defiance_succeeded = defier_force > robber_force;

  const int n = rules.n_villagers;
  result.villager_payoffs.assign(static_cast<std::size_t>(n), rules.endowment);
  result.robber_payoff = 0;
  if (result.defiance_succeeded) {
    return result;  // everyone keeps the endowment, the robber leaves empty-handed
  }

  const Rational levy = min(rules.tax, rules.endowment);
  const bool rewards_paid =
      rules.reward_enabled && result.defier_count >= 1 && result.betrayer_count >= 1;
  const Rational reward_share =
      rewards_paid ? rules.reward_pool / Rational(result.betrayer_count) : Rational(0);

  for (int i = 0; i < n; ++i) {
    auto& kept = result.villager_payoffs[static_cast<std::size_t>(i)];
    switch (profile[i]) {
      case kDefy:
        if (rules.punishment_enabled) {
          result.robber_payoff += rules.endowment;
          kept = 0;
        } else {
          result.robber_payoff += levy;
          kept -= levy;
        }
        break;
      case kBetray:
        if (rewards_paid) {
          result.robber_payoff -= reward_share;
          kept += reward_share;
          break;
        }
        [[fallthrough]];  // without a defier to report, a betrayer is just an obeyer
      case kObey:
        result.robber_payoff += levy;
        kept -= levy;
        break;
      default:
        break;  // unreachable, validated above
    }
  }
  return result;
}

NormalFormGame build_villager_game(const VillagerRules& rules) {
  rules.validate();
  const int n = rules.n_villagers;
  std::vector<std::vector<std::string>> names(static_cast<std::size_t>(n),
                                              villager_action_names());

  std::size_t product = 1;
  for (int i = 0; i < n; ++i) product *= villager_action_names().size();

  std::vector<PayoffVector> payoffs;
  std::vector<ProfileAnnotation> annotations;
  payoffs.reserve(product);
  annotations.reserve(product);

  ActionProfile profile;
  profile.actions.assign(static_cast<std::size_t>(n), 0);
  for (std::size_t index = 0; index < product; ++index) {
    std::size_t rest = index;
    for (int p = n - 1; p >= 0; --p) {
      profile[p] = static_cast<int>(rest % 3);
      rest /= 3;
    }
    VillagerOutcome cell = outcome(rules, profile);
    payoffs.push_back(std::move(cell.villager_payoffs));
    annotations.push_back({cell.robber_payoff, cell.defiance_succeeded});
  }
  return make_game_dense(n, std::move(names), std::move(payoffs), std::move(annotations));
}

ActionProfile canonical_profile(const VillagerRules& rules, const ActionProfile& profile) {
  // outcome() validates length and action range
  VillagerOutcome check = outcome(rules, profile);
  if (check.defier_count > 0) return profile;
  ActionProfile canonical = profile;
  for (int i = 0; i < canonical.size(); ++i) {
    if (canonical[i] == kBetray) canonical[i] = kObey;
  }
  return canonical;
}

PayoffVector survival_utilities(const PayoffVector& payoffs, const Rational& threshold) {
  if (threshold < 0) throw NegativePayoffError("survival threshold must be non-negative");
  PayoffVector utilities;
  utilities.reserve(payoffs.size());
  for (const Rational& value : payoffs) {
    if (value < 0) throw NegativePayoffError("survival utility of negative payoff " + value.str());
    utilities.push_back(value >= threshold ? value : Rational(0));
  }
  return utilities;
}

NormalFormGame pd_game(PdVariant variant) {
  const std::vector<std::string> actions = {"Silent", "Betray"};
  const Rational half(1, 2);
  std::vector<PayoffVector> cells;
  if (variant == PdVariant::classic) {
    cells = {
        {-half, -half},  // both silent: six months each
        {-10, 0},        // silent vs betrayer: full sentence vs walking free
        {0, -10},
        {-5, -5},        // mutual betrayal: five years each
    };
  } else {
    cells = {
        {-half, -half},  // unchanged from the classic matrix
        {-2, -5},        // betrayal now hurts the betrayer more than the victim
        {-5, -2},
        {-10, -10},      // mutual betrayal is the worst outcome
    };
  }
  return make_game_dense(2, {actions, actions}, std::move(cells));
}

}  // namespace vd

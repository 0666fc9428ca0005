#include "vd/designer.hpp"

#include <algorithm>
#include <thread>

#include "vd/errors.hpp"

namespace vd {

namespace {

Rational transformed(const VillagerRules& rules, const Rational& payoff) {
  if (!rules.survival_threshold) return payoff;
  return payoff >= *rules.survival_threshold ? payoff : Rational(0);
}

Rational payoff_of(const VillagerRules& rules, const ActionProfile& profile, int villager) {
  return outcome(rules, profile).villager_payoffs[static_cast<std::size_t>(villager)];
}

// Runs fn(0..count-1), striped across up to `jobs` threads. Each index writes
// only its own slot, so the merge is deterministic by construction.
template <typename Fn>
void parallel_for_index(std::size_t count, int jobs, Fn&& fn) {
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&fn, &errors, w, workers, count]() {
      try {
        for (std::size_t i = static_cast<std::size_t>(w); i < count;
             i += static_cast<std::size_t>(workers)) {
          fn(i);
        }
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& thread : pool) thread.join();
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
}

}  // namespace

EffectivenessReport effectiveness(const VillagerRules& rules) {
  rules.validate();
  const int n = rules.n_villagers;

  // Margins come from rule-engine outcomes, not re-derived formulas.
  ActionProfile all_obey;
  all_obey.actions.assign(static_cast<std::size_t>(n), kObey);

  ActionProfile lone_defier = all_obey;
  lone_defier[0] = kDefy;

  ActionProfile defier_and_betrayer = lone_defier;
  defier_and_betrayer[n - 1] = kBetray;

  EffectivenessReport report;
  report.punishment_margin = transformed(rules, payoff_of(rules, all_obey, 0)) -
                             transformed(rules, payoff_of(rules, lone_defier, 0));
  report.reward_margin = transformed(rules, payoff_of(rules, defier_and_betrayer, n - 1)) -
                         transformed(rules, payoff_of(rules, lone_defier, n - 1));
  report.effective = (!rules.punishment_enabled || report.punishment_margin > 0) &&
                     (!rules.reward_enabled || report.reward_margin > 0);
  return report;
}

RuleEvaluation evaluate_rules(const VillagerRules& rules, SelectionRule selection_rule) {
  RuleEvaluation evaluation;
  evaluation.rules = rules;
  const NormalFormGame game = build_villager_game(rules);
  evaluation.weak_equilibria = pure_equilibria(game, DominanceMode::weak);
  evaluation.selected = select_among_equilibria(game, evaluation.weak_equilibria, selection_rule);
  evaluation.robber_revenue = game.annotation_at(evaluation.selected.selected).rule_maker_payoff;
  evaluation.effectiveness = effectiveness(rules);
  return evaluation;
}

VillagerRules with_parameter(const VillagerRules& rules, const std::string& name,
                             const Rational& value) {
  VillagerRules next = rules;
  auto as_flag = [&]() {
    if (value != Rational(0) && value != Rational(1)) {
      throw ValidationError("rules." + name + ": flag values must be 0 or 1, got " + value.str());
    }
    return value == Rational(1);
  };
  if (name == "n_villagers") {
    if (!value.is_integer()) {
      throw ValidationError("rules.n_villagers: must be an integer, got " + value.str());
    }
    next.n_villagers = static_cast<int>(value.num());
  } else if (name == "endowment") {
    next.endowment = value;
  } else if (name == "tax") {
    next.tax = value;
  } else if (name == "reward_pool") {
    next.reward_pool = value;
    next.reward_enabled = value > 0;  // a zero pool is no reward rule at all
  } else if (name == "reward_enabled") {
    next.reward_enabled = as_flag();
  } else if (name == "punishment_enabled") {
    next.punishment_enabled = as_flag();
  } else if (name == "robber_strength") {
    next.robber_strength = value;
  } else if (name == "villager_strength") {
    next.villager_strength = value;
  } else if (name == "betrayer_aids_robber") {
    next.betrayer_aids_robber = as_flag();
  } else if (name == "survival_threshold") {
    next.survival_threshold = value;
  } else {
    throw UnknownParameterError("no rule parameter named '" + name + "'");
  }
  next.validate();
  return next;
}

std::vector<RuleEvaluation> optimize_rules(const ParameterGrid& grid, const VillagerRules& base,
                                           SelectionRule selection_rule, bool require_effective,
                                           int jobs) {
  if (grid.empty()) throw EmptyGridError("parameter grid has no parameters");
  for (const auto& [name, values] : grid) {
    if (values.empty()) throw EmptyGridError("parameter '" + name + "' has no values");
  }

  // Materialize grid points in enumeration order: names sorted (std::map),
  // first name most significant, values in the listed order.
  std::vector<std::vector<std::pair<std::string, Rational>>> points;
  std::vector<std::pair<std::string, Rational>> current;
  auto expand = [&](auto&& self, ParameterGrid::const_iterator it) -> void {
    if (it == grid.end()) {
      points.push_back(current);
      return;
    }
    auto next = std::next(it);
    for (const Rational& value : it->second) {
      current.emplace_back(it->first, value);
      self(self, next);
      current.pop_back();
    }
  };
  expand(expand, grid.begin());

  std::vector<RuleEvaluation> evaluations(points.size());
  auto evaluate_point = [&](std::size_t index) {
    VillagerRules rules = base;
    for (const auto& [name, value] : points[index]) {
      rules = with_parameter(rules, name, value);
    }
    RuleEvaluation evaluation = evaluate_rules(rules, selection_rule);
    evaluation.overrides = points[index];
    if (require_effective && !evaluation.effectiveness.effective) {
      // An ineffective rule cannot hold the table together; score it as the
      // villagers walking out.
      evaluation.forced_defiance = true;
      evaluation.robber_revenue = 0;
    }
    evaluations[index] = std::move(evaluation);
  };

  parallel_for_index(points.size(), jobs, evaluate_point);

  std::stable_sort(evaluations.begin(), evaluations.end(),
                   [](const RuleEvaluation& a, const RuleEvaluation& b) {
                     return a.robber_revenue > b.robber_revenue;
                   });
  return evaluations;
}

Regime regime_of(const Selection& selection) {
  auto has_defier = [](const ActionProfile& profile) {
    return std::any_of(profile.actions.begin(), profile.actions.end(),
                       [](int a) { return a == kDefy; });
  };
  bool any_defiance = false;
  bool any_compliance = false;
  for (const ActionProfile& candidate : selection.candidates) {
    (has_defier(candidate) ? any_defiance : any_compliance) = true;
  }
  if (any_defiance && any_compliance) return Regime::ambiguous;
  return any_defiance ? Regime::defiance : Regime::compliance;
}

SweepResult breakpoint_sweep(const VillagerRules& base, const std::string& parameter,
                             const std::vector<Rational>& values, SelectionRule selection_rule,
                             int jobs) {
  if (values.empty()) throw EmptyGridError("sweep over '" + parameter + "' has no values");
  // Unknown names should fail fast, not on the first worker to get there.
  with_parameter(base, parameter, values.front());

  SweepResult result;
  result.parameter = parameter;
  result.points.resize(values.size());
  parallel_for_index(values.size(), jobs, [&](std::size_t i) {
    const VillagerRules rules = with_parameter(base, parameter, values[i]);
    RuleEvaluation evaluation = evaluate_rules(rules, selection_rule);
    SweepPoint point;
    point.value = values[i];
    point.regime = regime_of(evaluation.selected);
    point.selected = std::move(evaluation.selected);
    point.robber_revenue = evaluation.robber_revenue;
    result.points[i] = std::move(point);
  });
  for (std::size_t i = 0; i + 1 < result.points.size(); ++i) {
    if (result.points[i].regime != result.points[i + 1].regime) {
      result.flip_indices.push_back(static_cast<int>(i));
    }
  }
  return result;
}

}  // namespace vd

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "vd/rules.hpp"
#include "vd/solver.hpp"

namespace vd {

// Incentive margins a rule set actually delivers, measured from single
// deviations against an all-obey table and passed through the survival
// transform when a threshold is set. A rule is effective when every enabled
// instrument keeps a strictly positive margin; a disabled instrument is
// exempt.
struct EffectivenessReport {
  Rational punishment_margin;  // obeying vs defying alone
  Rational reward_margin;      // betraying vs obeying, one defier present
  bool effective = false;
};

EffectivenessReport effectiveness(const VillagerRules& rules);

// Full rule-maker's view of one rule set: the induced equilibria, the
// coordinated choice among them and the robber's take at that choice.
struct RuleEvaluation {
  VillagerRules rules;
  std::vector<std::pair<std::string, Rational>> overrides;  // grid point, if any
  std::vector<ActionProfile> weak_equilibria;
  Selection selected;
  Rational robber_revenue;
  EffectivenessReport effectiveness;
  bool forced_defiance = false;  // ineffective under a require-effective search
};

RuleEvaluation evaluate_rules(const VillagerRules& rules, SelectionRule selection_rule);

// Parameter name -> candidate values; evaluation runs over the cross product.
using ParameterGrid = std::map<std::string, std::vector<Rational>>;

// Returns a copy of `rules` with one parameter replaced. Accepts the scenario
// field names (endowment, tax, reward_pool, ...); flags take 0/1. Setting
// reward_pool also switches reward_enabled to (value > 0): a zero pool means
// the reward rule is off the books. Throws UnknownParameterError.
VillagerRules with_parameter(const VillagerRules& rules, const std::string& name,
                             const Rational& value);

// Evaluates every grid point and ranks by robber revenue, highest first;
// equal revenues keep grid enumeration order (parameter names sorted, values
// as listed). With require_effective, ineffective rule sets are scored as
// defiance with zero revenue instead of their nominal take. Grid points are
// independent; `jobs` > 1 evaluates them concurrently with a deterministic
// merge. Throws EmptyGridError.
std::vector<RuleEvaluation> optimize_rules(const ParameterGrid& grid, const VillagerRules& base,
                                           SelectionRule selection_rule, bool require_effective,
                                           int jobs = 1);

enum class Regime { defiance, compliance, ambiguous };

// Regime of a coordinated equilibrium choice: defiance when the selected
// profile contains a defier, compliance when none does, ambiguous when the
// selection is torn between candidates on both sides.
Regime regime_of(const Selection& selection);

struct SweepPoint {
  Rational value;
  Regime regime = Regime::ambiguous;
  Selection selected;
  Rational robber_revenue;
};

struct SweepResult {
  std::string parameter;
  std::vector<SweepPoint> points;
  std::vector<int> flip_indices;  // i where points[i] and points[i+1] differ in regime
};

// Evaluates the rule set at each value of one parameter and labels the regime
// at every point, recording where adjacent labels flip. Throws
// UnknownParameterError and EmptyGridError.
SweepResult breakpoint_sweep(const VillagerRules& base, const std::string& parameter,
                             const std::vector<Rational>& values, SelectionRule selection_rule,
                             int jobs = 1);

}  // namespace vd

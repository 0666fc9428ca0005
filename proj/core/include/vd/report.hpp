#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vd/designer.hpp"
#include "vd/dynamics.hpp"
#include "vd/scenario.hpp"
#include "vd/solver.hpp"

namespace vd {

enum class ReportFormat { table, json, csv };

// Which section the CSV renderer tabulates and the table renderer leads with.
enum class ReportFocus { analysis, dynamics, grid, sweep };

// Aggregated result of one scenario run.
struct Report {
  std::string scenario_name;
  Scenario scenario;
  NormalFormGame game;
  ReportFocus focus = ReportFocus::analysis;

  std::optional<EquilibriumReport> analysis;
  std::optional<EffectivenessReport> effectiveness_report;  // villager model
  std::optional<Rational> robber_revenue;                   // at the selected profile
  bool selection_on_pareto = false;

  std::optional<Trajectory> trajectory;
  std::optional<TrajectorySummary> summary;

  std::optional<std::vector<RuleEvaluation>> ranking;  // design grid
  std::optional<SweepResult> sweep;
};

struct RunOptions {
  bool analysis = true;
  bool dynamics = true;
  bool design_grid = true;
  bool design_sweep = true;
  ReportFocus focus = ReportFocus::analysis;
  int jobs = 1;
};

// Executes the requested sections in fixed order: build the game, then
// equilibria / pareto / dominance / selection, then dynamics, then design.
// Sections absent from the scenario are skipped. Module errors propagate.
Report run(const Scenario& scenario, const std::string& name, const RunOptions& options = {});

// table: aligned human-readable output, mirroring the payoff-table layout of
//        2- and 3-player games; json: stable key order, payoffs as canonical
//        rational strings; csv: one row per profile (analysis focus), round,
//        grid point or sweep value.
std::string render_report(const Report& report, ReportFormat format);

}  // namespace vd

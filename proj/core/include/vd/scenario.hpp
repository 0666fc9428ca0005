#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "vd/designer.hpp"
#include "vd/dynamics.hpp"
#include "vd/rules.hpp"
#include "vd/solver.hpp"

namespace vd {

enum class ModelKind { villager, matrix, pd_classic, pd_modified };

// Explicit payoff table for the generic matrix model.
struct MatrixSpec {
  int players = 2;
  std::vector<std::vector<std::string>> actions;
  std::vector<PayoffVector> payoffs;  // lexicographic profile order

  friend bool operator==(const MatrixSpec&, const MatrixSpec&) = default;
};

struct AnalysisSpec {
  DominanceMode equilibria = DominanceMode::weak;           // headline set, feeds selection
  SelectionRule selection = SelectionRule::payoff_dominance;
  bool pareto = true;
  std::optional<DominanceMode> dominance;                   // run iterated elimination when set

  friend bool operator==(const AnalysisSpec&, const AnalysisSpec&) = default;
};

struct DynamicsSpec {
  std::vector<AgentSpec> agents;
  int rounds = 10;
  std::uint64_t seed = 0;
  std::optional<Rational> robber_exit_threshold;

  friend bool operator==(const DynamicsSpec&, const DynamicsSpec&) = default;
};

struct SweepSpec {
  std::string parameter;
  std::vector<Rational> values;

  friend bool operator==(const SweepSpec&, const SweepSpec&) = default;
};

struct DesignSpec {
  std::optional<ParameterGrid> grid;
  std::optional<SweepSpec> sweep;
  bool require_effective = false;
  SelectionRule selection = SelectionRule::payoff_dominance;

  friend bool operator==(const DesignSpec&, const DesignSpec&) = default;
};

// One reproducible experiment: a game source plus the requested analyses.
struct Scenario {
  ModelKind model = ModelKind::villager;
  std::optional<VillagerRules> rules;      // villager model
  std::optional<MatrixSpec> matrix;        // matrix model
  std::optional<AnalysisSpec> analysis;
  std::optional<DynamicsSpec> dynamics;    // villager model only
  std::optional<DesignSpec> design;        // villager model only

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

// Reads and validates a scenario file. Throws IoError when the file cannot be
// read, ParseError on malformed JSON, ValidationError (with the offending
// field path) on schema violations. Unknown keys are rejected at every level.
Scenario load_scenario(const std::filesystem::path& path);

// Same validation for an in-memory document.
Scenario parse_scenario(const std::string& text);

// Canonical JSON form; parse_scenario(render_scenario(s)) == s.
std::string render_scenario(const Scenario& scenario);

// Consistency checks beyond per-field parsing (model source present, sections
// allowed for the model, agent count, ...). load/parse already call this.
void validate_scenario(const Scenario& scenario);

// The stage game a scenario describes.
NormalFormGame build_game(const Scenario& scenario);

// "A", "B", ..., then "P26", "P27", ... for unreasonably large games.
std::string player_label(int player);

const char* to_string(ModelKind model);
const char* to_string(DominanceMode mode);
const char* to_string(SelectionRule rule);
const char* to_string(Regime regime);
const char* to_string(TerminationReason reason);

}  // namespace vd

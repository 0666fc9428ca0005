#include "vd/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

#include "vd/errors.hpp"

namespace vd {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& why) {
  throw ValidationError(path + ": " + why);
}

void check_keys(const json& obj, const std::string& path,
                std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) fail(path, "expected an object");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    const bool known = std::any_of(allowed.begin(), allowed.end(),
                                   [&](const char* key) { return it.key() == key; });
    if (!known) fail(path + "." + it.key(), "unknown key");
  }
}

const json* find(const json& obj, const char* key) {
  auto it = obj.find(key);
  return it == obj.end() || it->is_null() ? nullptr : &*it;
}

Rational parse_rational(const json& value, const std::string& path) {
  if (value.is_number_integer()) return Rational(value.get<long long>());
  if (value.is_number_float()) {
    try {
      return Rational::from_double(value.get<double>());
    } catch (const std::exception& e) {
      fail(path, e.what());
    }
  }
  if (value.is_string()) {
    try {
      return Rational::parse(value.get<std::string>());
    } catch (const std::exception&) {
      fail(path, "not a rational number: '" + value.get<std::string>() + "'");
    }
  }
  fail(path, "expected a number (or a rational string like \"5/2\")");
}

bool parse_bool(const json& value, const std::string& path) {
  if (!value.is_boolean()) fail(path, "expected true or false");
  return value.get<bool>();
}

long long parse_integer(const json& value, const std::string& path) {
  if (!value.is_number_integer()) fail(path, "expected an integer");
  return value.get<long long>();
}

std::string parse_string(const json& value, const std::string& path) {
  if (!value.is_string()) fail(path, "expected a string");
  return value.get<std::string>();
}

int parse_villager_action(const json& value, const std::string& path) {
  const std::string name = parse_string(value, path);
  const auto& names = villager_action_names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return static_cast<int>(i);
  }
  fail(path, "'" + name + "' is not a villager action (Defy, Obey, Betray)");
}

DominanceMode parse_mode(const json& value, const std::string& path) {
  const std::string text = parse_string(value, path);
  if (text == "weak") return DominanceMode::weak;
  if (text == "strict") return DominanceMode::strict;
  fail(path, "expected \"weak\" or \"strict\", got \"" + text + "\"");
}

SelectionRule parse_selection_rule(const json& value, const std::string& path) {
  const std::string text = parse_string(value, path);
  if (text == "payoff-dominance") return SelectionRule::payoff_dominance;
  if (text == "maximin") return SelectionRule::maximin;
  if (text == "first") return SelectionRule::first;
  fail(path, "expected \"payoff-dominance\", \"maximin\" or \"first\", got \"" + text + "\"");
}

VillagerRules parse_rules(const json& obj, const std::string& path) {
  check_keys(obj, path,
             {"n_villagers", "endowment", "tax", "reward_pool", "reward_enabled",
              "punishment_enabled", "robber_strength", "villager_strength",
              "betrayer_aids_robber", "survival_threshold"});
  VillagerRules rules;
  if (const json* v = find(obj, "n_villagers")) {
    rules.n_villagers = static_cast<int>(parse_integer(*v, path + ".n_villagers"));
  }
  if (const json* v = find(obj, "endowment")) rules.endowment = parse_rational(*v, path + ".endowment");
  if (const json* v = find(obj, "tax")) rules.tax = parse_rational(*v, path + ".tax");
  if (const json* v = find(obj, "reward_pool")) {
    rules.reward_pool = parse_rational(*v, path + ".reward_pool");
  }
  if (const json* v = find(obj, "reward_enabled")) {
    rules.reward_enabled = parse_bool(*v, path + ".reward_enabled");
  }
  if (const json* v = find(obj, "punishment_enabled")) {
    rules.punishment_enabled = parse_bool(*v, path + ".punishment_enabled");
  }
  if (const json* v = find(obj, "robber_strength")) {
    rules.robber_strength = parse_rational(*v, path + ".robber_strength");
  }
  if (const json* v = find(obj, "villager_strength")) {
    rules.villager_strength = parse_rational(*v, path + ".villager_strength");
  }
  if (const json* v = find(obj, "betrayer_aids_robber")) {
    rules.betrayer_aids_robber = parse_bool(*v, path + ".betrayer_aids_robber");
  }
  if (const json* v = find(obj, "survival_threshold")) {
    rules.survival_threshold = parse_rational(*v, path + ".survival_threshold");
  }
  rules.validate(path);
  return rules;
}

MatrixSpec parse_matrix(const json& obj, const std::string& path) {
  check_keys(obj, path, {"players", "actions", "payoffs"});
  MatrixSpec matrix;
  const json* players = find(obj, "players");
  if (!players) fail(path + ".players", "required");
  matrix.players = static_cast<int>(parse_integer(*players, path + ".players"));
  if (matrix.players < 2) fail(path + ".players", "need at least 2 players");

  const json* actions = find(obj, "actions");
  if (!actions) fail(path + ".actions", "required");
  if (!actions->is_array() || static_cast<int>(actions->size()) != matrix.players) {
    fail(path + ".actions", "expected one action list per player");
  }
  for (std::size_t p = 0; p < actions->size(); ++p) {
    const json& list = (*actions)[p];
    const std::string list_path = path + ".actions[" + std::to_string(p) + "]";
    if (!list.is_array() || list.empty()) fail(list_path, "expected a non-empty array");
    std::vector<std::string> names;
    for (std::size_t a = 0; a < list.size(); ++a) {
      names.push_back(parse_string(list[a], list_path + "[" + std::to_string(a) + "]"));
    }
    matrix.actions.push_back(std::move(names));
  }

  const json* payoffs = find(obj, "payoffs");
  if (!payoffs) fail(path + ".payoffs", "required");
  // Nested arrays, one level per player, innermost = one payoff per player.
  auto read = [&](auto&& self, const json& node, std::size_t depth, const std::string& node_path) -> void {
    if (depth == matrix.actions.size()) {
      if (!node.is_array() || static_cast<int>(node.size()) != matrix.players) {
        fail(node_path, "expected " + std::to_string(matrix.players) + " payoffs");
      }
      PayoffVector vec;
      for (std::size_t i = 0; i < node.size(); ++i) {
        vec.push_back(parse_rational(node[i], node_path + "[" + std::to_string(i) + "]"));
      }
      matrix.payoffs.push_back(std::move(vec));
      return;
    }
    const std::size_t expected = matrix.actions[depth].size();
    if (!node.is_array() || node.size() != expected) {
      fail(node_path, "expected " + std::to_string(expected) + " entries for player " +
                          std::to_string(depth) + "'s actions");
    }
    for (std::size_t i = 0; i < node.size(); ++i) {
      self(self, node[i], depth + 1, node_path + "[" + std::to_string(i) + "]");
    }
  };
  read(read, *payoffs, 0, path + ".payoffs");
  return matrix;
}

AnalysisSpec parse_analysis(const json& obj, const std::string& path) {
  check_keys(obj, path, {"equilibria", "selection", "pareto", "dominance"});
  AnalysisSpec spec;
  if (const json* v = find(obj, "equilibria")) spec.equilibria = parse_mode(*v, path + ".equilibria");
  if (const json* v = find(obj, "selection")) {
    spec.selection = parse_selection_rule(*v, path + ".selection");
  }
  if (const json* v = find(obj, "pareto")) spec.pareto = parse_bool(*v, path + ".pareto");
  if (const json* v = find(obj, "dominance")) spec.dominance = parse_mode(*v, path + ".dominance");
  return spec;
}

AgentSpec parse_agent(const json& obj, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  const json* kind = find(obj, "kind");
  if (!kind) fail(path + ".kind", "required");
  const std::string text = parse_string(*kind, path + ".kind");

  AgentSpec agent;
  if (text == "fixed") {
    check_keys(obj, path, {"kind", "action", "exit_below"});
    const json* action = find(obj, "action");
    if (!action) fail(path + ".action", "required for a fixed agent");
    agent = AgentSpec::make_fixed(parse_villager_action(*action, path + ".action"));
  } else if (text == "best-response-to-last") {
    check_keys(obj, path, {"kind", "exit_below"});
    agent = AgentSpec::make_best_response_to_last();
  } else if (text == "coordinator") {
    check_keys(obj, path, {"kind", "target", "exit_below"});
    const json* target = find(obj, "target");
    if (!target || !target->is_array()) {
      fail(path + ".target", "required action list for a coordinator agent");
    }
    ActionProfile profile;
    for (std::size_t i = 0; i < target->size(); ++i) {
      profile.actions.push_back(
          parse_villager_action((*target)[i], path + ".target[" + std::to_string(i) + "]"));
    }
    agent = AgentSpec::make_coordinator(std::move(profile));
  } else if (text == "trigger") {
    check_keys(obj, path, {"kind", "start", "fallback", "exit_below"});
    const json* start = find(obj, "start");
    const json* fallback = find(obj, "fallback");
    if (!start) fail(path + ".start", "required for a trigger agent");
    if (!fallback) fail(path + ".fallback", "required for a trigger agent");
    agent = AgentSpec::make_trigger(parse_villager_action(*start, path + ".start"),
                                    parse_villager_action(*fallback, path + ".fallback"));
  } else {
    fail(path + ".kind",
         "expected \"fixed\", \"best-response-to-last\", \"coordinator\" or \"trigger\"");
  }
  if (const json* v = find(obj, "exit_below")) {
    agent.exit_below = parse_rational(*v, path + ".exit_below");
  }
  return agent;
}

DynamicsSpec parse_dynamics(const json& obj, const std::string& path) {
  check_keys(obj, path, {"agents", "rounds", "seed", "robber_exit_threshold"});
  DynamicsSpec spec;
  const json* agents = find(obj, "agents");
  if (!agents || !agents->is_array() || agents->empty()) {
    fail(path + ".agents", "required non-empty agent list");
  }
  for (std::size_t i = 0; i < agents->size(); ++i) {
    spec.agents.push_back(parse_agent((*agents)[i], path + ".agents[" + std::to_string(i) + "]"));
  }
  if (const json* v = find(obj, "rounds")) {
    spec.rounds = static_cast<int>(parse_integer(*v, path + ".rounds"));
    if (spec.rounds < 1) fail(path + ".rounds", "must be at least 1");
  }
  if (const json* v = find(obj, "seed")) {
    spec.seed = static_cast<std::uint64_t>(parse_integer(*v, path + ".seed"));
  }
  if (const json* v = find(obj, "robber_exit_threshold")) {
    spec.robber_exit_threshold = parse_rational(*v, path + ".robber_exit_threshold");
  }
  return spec;
}

DesignSpec parse_design(const json& obj, const std::string& path) {
  check_keys(obj, path, {"grid", "sweep", "require_effective", "selection"});
  DesignSpec spec;
  if (const json* grid = find(obj, "grid")) {
    if (!grid->is_object() || grid->empty()) {
      fail(path + ".grid", "expected a non-empty parameter-to-values object");
    }
    ParameterGrid parameters;
    for (auto it = grid->begin(); it != grid->end(); ++it) {
      const std::string value_path = path + ".grid." + it.key();
      if (!it->is_array() || it->empty()) fail(value_path, "expected a non-empty value array");
      std::vector<Rational> values;
      for (std::size_t i = 0; i < it->size(); ++i) {
        values.push_back(parse_rational((*it)[i], value_path + "[" + std::to_string(i) + "]"));
      }
      parameters.emplace(it.key(), std::move(values));
    }
    spec.grid = std::move(parameters);
  }
  if (const json* sweep = find(obj, "sweep")) {
    check_keys(*sweep, path + ".sweep", {"parameter", "values"});
    SweepSpec sweep_spec;
    const json* parameter = find(*sweep, "parameter");
    if (!parameter) fail(path + ".sweep.parameter", "required");
    sweep_spec.parameter = parse_string(*parameter, path + ".sweep.parameter");
    const json* values = find(*sweep, "values");
    if (!values || !values->is_array() || values->empty()) {
      fail(path + ".sweep.values", "required non-empty value array");
    }
    for (std::size_t i = 0; i < values->size(); ++i) {
      sweep_spec.values.push_back(
          parse_rational((*values)[i], path + ".sweep.values[" + std::to_string(i) + "]"));
    }
    spec.sweep = std::move(sweep_spec);
  }
  if (const json* v = find(obj, "require_effective")) {
    spec.require_effective = parse_bool(*v, path + ".require_effective");
  }
  if (const json* v = find(obj, "selection")) {
    spec.selection = parse_selection_rule(*v, path + ".selection");
  }
  if (!spec.grid && !spec.sweep) fail(path, "needs a grid or a sweep");
  return spec;
}

Scenario parse_document(const json& doc) {
  const std::string path = "scenario";
  check_keys(doc, path, {"model", "rules", "matrix", "analysis", "dynamics", "design"});

  Scenario scenario;
  const json* model = find(doc, "model");
  if (!model) fail(path + ".model", "required");
  const std::string model_name = parse_string(*model, path + ".model");
  if (model_name == "villager") {
    scenario.model = ModelKind::villager;
  } else if (model_name == "matrix") {
    scenario.model = ModelKind::matrix;
  } else if (model_name == "pd-classic") {
    scenario.model = ModelKind::pd_classic;
  } else if (model_name == "pd-modified") {
    scenario.model = ModelKind::pd_modified;
  } else {
    fail(path + ".model",
         "expected \"villager\", \"matrix\", \"pd-classic\" or \"pd-modified\", got \"" +
             model_name + "\"");
  }

  if (const json* rules = find(doc, "rules")) scenario.rules = parse_rules(*rules, path + ".rules");
  if (const json* matrix = find(doc, "matrix")) {
    scenario.matrix = parse_matrix(*matrix, path + ".matrix");
  }
  if (const json* analysis = find(doc, "analysis")) {
    scenario.analysis = parse_analysis(*analysis, path + ".analysis");
  }
  if (const json* dynamics = find(doc, "dynamics")) {
    scenario.dynamics = parse_dynamics(*dynamics, path + ".dynamics");
  }
  if (const json* design = find(doc, "design")) {
    scenario.design = parse_design(*design, path + ".design");
  }

  validate_scenario(scenario);
  return scenario;
}

json rational_to_json(const Rational& value) {
  if (value.is_integer()) return json(value.num());
  return json(value.str());
}

json rules_to_json(const VillagerRules& rules) {
  json obj = json::object();
  obj["n_villagers"] = rules.n_villagers;
  obj["endowment"] = rational_to_json(rules.endowment);
  obj["tax"] = rational_to_json(rules.tax);
  obj["reward_pool"] = rational_to_json(rules.reward_pool);
  obj["reward_enabled"] = rules.reward_enabled;
  obj["punishment_enabled"] = rules.punishment_enabled;
  obj["robber_strength"] = rational_to_json(rules.robber_strength);
  obj["villager_strength"] = rational_to_json(rules.villager_strength);
  obj["betrayer_aids_robber"] = rules.betrayer_aids_robber;
  if (rules.survival_threshold) {
    obj["survival_threshold"] = rational_to_json(*rules.survival_threshold);
  }
  return obj;
}

json agent_to_json(const AgentSpec& agent) {
  json obj = json::object();
  const auto& names = villager_action_names();
  switch (agent.kind) {
    case AgentSpec::Kind::fixed:
      obj["kind"] = "fixed";
      obj["action"] = names[static_cast<std::size_t>(agent.action)];
      break;
    case AgentSpec::Kind::best_response_to_last:
      obj["kind"] = "best-response-to-last";
      break;
    case AgentSpec::Kind::coordinator: {
      obj["kind"] = "coordinator";
      json target = json::array();
      for (int a : agent.target.actions) target.push_back(names[static_cast<std::size_t>(a)]);
      obj["target"] = std::move(target);
      break;
    }
    case AgentSpec::Kind::trigger:
      obj["kind"] = "trigger";
      obj["start"] = names[static_cast<std::size_t>(agent.start)];
      obj["fallback"] = names[static_cast<std::size_t>(agent.fallback)];
      break;
  }
  if (agent.exit_below) obj["exit_below"] = rational_to_json(*agent.exit_below);
  return obj;
}

}  // namespace

void validate_scenario(const Scenario& scenario) {
  const bool wants_villager = scenario.model == ModelKind::villager;
  const bool wants_matrix = scenario.model == ModelKind::matrix;

  if (scenario.rules && scenario.matrix) {
    fail("scenario", "rules and matrix are mutually exclusive game sources");
  }
  if (wants_villager && !scenario.rules) {
    fail("scenario.rules", "required for the villager model");
  }
  if (!wants_villager && scenario.rules) {
    fail("scenario.rules", std::string("not allowed for the ") + to_string(scenario.model) + " model");
  }
  if (wants_matrix && !scenario.matrix) {
    fail("scenario.matrix", "required for the matrix model");
  }
  if (!wants_matrix && scenario.matrix) {
    fail("scenario.matrix", std::string("not allowed for the ") + to_string(scenario.model) + " model");
  }
  if (scenario.rules) scenario.rules->validate("scenario.rules");
  if (scenario.matrix) {
    try {
      make_game_dense(scenario.matrix->players, scenario.matrix->actions, scenario.matrix->payoffs);
    } catch (const Error& e) {
      fail("scenario.matrix", e.what());
    }
  }
  if (scenario.dynamics) {
    if (!wants_villager) fail("scenario.dynamics", "only valid for the villager model");
    if (static_cast<int>(scenario.dynamics->agents.size()) != scenario.rules->n_villagers) {
      fail("scenario.dynamics.agents",
           "got " + std::to_string(scenario.dynamics->agents.size()) + " agents for " +
               std::to_string(scenario.rules->n_villagers) + " villagers");
    }
    if (scenario.dynamics->rounds < 1) fail("scenario.dynamics.rounds", "must be at least 1");
    try {
      // One dry round of validation through the simulator's own checks.
      simulate(*scenario.rules, scenario.dynamics->agents,
               scenario.dynamics->robber_exit_threshold, 1, scenario.dynamics->seed);
    } catch (const Error& e) {
      fail("scenario.dynamics", e.what());
    }
  }
  if (scenario.design) {
    if (!wants_villager) fail("scenario.design", "only valid for the villager model");
    if (!scenario.design->grid && !scenario.design->sweep) {
      fail("scenario.design", "needs a grid or a sweep");
    }
    if (scenario.design->grid) {
      if (scenario.design->grid->empty()) fail("scenario.design.grid", "has no parameters");
      for (const auto& [name, values] : *scenario.design->grid) {
        if (values.empty()) fail("scenario.design.grid." + name, "has no values");
        for (const Rational& value : values) {
          try {
            with_parameter(*scenario.rules, name, value);
          } catch (const Error& e) {
            fail("scenario.design.grid." + name, e.what());
          }
        }
      }
    }
    if (scenario.design->sweep) {
      if (scenario.design->sweep->values.empty()) {
        fail("scenario.design.sweep.values", "has no values");
      }
      for (const Rational& value : scenario.design->sweep->values) {
        try {
          with_parameter(*scenario.rules, scenario.design->sweep->parameter, value);
        } catch (const Error& e) {
          fail("scenario.design.sweep", e.what());
        }
      }
    }
  }
}

Scenario parse_scenario(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("scenario is not valid JSON: ") + e.what());
  }
  return parse_document(doc);
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot read scenario file '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw IoError("error while reading scenario file '" + path.string() + "'");
  }
  return parse_scenario(buffer.str());
}

std::string render_scenario(const Scenario& scenario) {
  json doc = json::object();
  doc["model"] = to_string(scenario.model);
  if (scenario.rules) doc["rules"] = rules_to_json(*scenario.rules);
  if (scenario.matrix) {
    json matrix = json::object();
    matrix["players"] = scenario.matrix->players;
    matrix["actions"] = scenario.matrix->actions;
    // Re-nest the lexicographic payoff list, one level per player.
    std::size_t cursor = 0;
    auto nest = [&](auto&& self, std::size_t depth) -> json {
      if (depth == scenario.matrix->actions.size()) {
        json cell = json::array();
        for (const Rational& v : scenario.matrix->payoffs[cursor]) {
          cell.push_back(rational_to_json(v));
        }
        ++cursor;
        return cell;
      }
      json level = json::array();
      for (std::size_t i = 0; i < scenario.matrix->actions[depth].size(); ++i) {
        level.push_back(self(self, depth + 1));
      }
      return level;
    };
    matrix["payoffs"] = nest(nest, 0);
    doc["matrix"] = std::move(matrix);
  }
  if (scenario.analysis) {
    json analysis = json::object();
    analysis["equilibria"] = to_string(scenario.analysis->equilibria);
    analysis["selection"] = to_string(scenario.analysis->selection);
    analysis["pareto"] = scenario.analysis->pareto;
    if (scenario.analysis->dominance) {
      analysis["dominance"] = to_string(*scenario.analysis->dominance);
    }
    doc["analysis"] = std::move(analysis);
  }
  if (scenario.dynamics) {
    json dynamics = json::object();
    json agents = json::array();
    for (const AgentSpec& agent : scenario.dynamics->agents) agents.push_back(agent_to_json(agent));
    dynamics["agents"] = std::move(agents);
    dynamics["rounds"] = scenario.dynamics->rounds;
    dynamics["seed"] = scenario.dynamics->seed;
    if (scenario.dynamics->robber_exit_threshold) {
      dynamics["robber_exit_threshold"] = rational_to_json(*scenario.dynamics->robber_exit_threshold);
    }
    doc["dynamics"] = std::move(dynamics);
  }
  if (scenario.design) {
    json design = json::object();
    if (scenario.design->grid) {
      json grid = json::object();
      for (const auto& [name, values] : *scenario.design->grid) {
        json list = json::array();
        for (const Rational& v : values) list.push_back(rational_to_json(v));
        grid[name] = std::move(list);
      }
      design["grid"] = std::move(grid);
    }
    if (scenario.design->sweep) {
      json sweep = json::object();
      sweep["parameter"] = scenario.design->sweep->parameter;
      json values = json::array();
      for (const Rational& v : scenario.design->sweep->values) {
        values.push_back(rational_to_json(v));
      }
      sweep["values"] = std::move(values);
      design["sweep"] = std::move(sweep);
    }
    design["require_effective"] = scenario.design->require_effective;
    design["selection"] = to_string(scenario.design->selection);
    doc["design"] = std::move(design);
  }
  return doc.dump(2) + "\n";
}

NormalFormGame build_game(const Scenario& scenario) {
  validate_scenario(scenario);
  switch (scenario.model) {
    case ModelKind::villager:
      return build_villager_game(*scenario.rules);
    case ModelKind::matrix:
      return make_game_dense(scenario.matrix->players, scenario.matrix->actions,
                             scenario.matrix->payoffs);
    case ModelKind::pd_classic:
      return pd_game(PdVariant::classic);
    case ModelKind::pd_modified:
      return pd_game(PdVariant::modified);
  }
  throw ValidationError("scenario.model: unknown model");
}

std::string player_label(int player) {
  if (player >= 0 && player < 26) return std::string(1, static_cast<char>('A' + player));
  return "P" + std::to_string(player);
}

const char* to_string(ModelKind model) {
  switch (model) {
    case ModelKind::villager: return "villager";
    case ModelKind::matrix: return "matrix";
    case ModelKind::pd_classic: return "pd-classic";
    case ModelKind::pd_modified: return "pd-modified";
  }
  return "?";
}

const char* to_string(DominanceMode mode) {
  return mode == DominanceMode::weak ? "weak" : "strict";
}

const char* to_string(SelectionRule rule) {
  switch (rule) {
    case SelectionRule::payoff_dominance: return "payoff-dominance";
    case SelectionRule::maximin: return "maximin";
    case SelectionRule::first: return "first";
  }
  return "?";
}

const char* to_string(Regime regime) {
  switch (regime) {
    case Regime::defiance: return "defiance";
    case Regime::compliance: return "compliance";
    case Regime::ambiguous: return "ambiguous";
  }
  return "?";
}

const char* to_string(TerminationReason reason) {
  switch (reason) {
    case TerminationReason::robber_defeated: return "robber_defeated";
    case TerminationReason::participant_exit: return "participant_exit";
    case TerminationReason::round_limit: return "round_limit";
  }
  return "?";
}

}  // namespace vd

#include "vd/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "vd/errors.hpp"

namespace vd {

namespace {

using json = nlohmann::ordered_json;

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::string payoffs_str(const PayoffVector& payoffs) {
  std::vector<std::string> parts;
  parts.reserve(payoffs.size());
  for (const Rational& v : payoffs) parts.push_back(v.str());
  return join(parts, ",");
}

// Aligned rows, two spaces between columns, no trailing whitespace.
std::string format_table(const std::vector<std::vector<std::string>>& rows,
                         const std::string& indent) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line = indent;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) line += "  ";
      line += row[c];
      if (c + 1 < row.size()) line.append(widths[c] - row[c].size(), ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += "\n";
  }
  return out;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::vector<std::string> escaped;
  escaped.reserve(fields.size());
  for (const auto& f : fields) escaped.push_back(csv_escape(f));
  return join(escaped, ",") + "\n";
}

bool is_villager(const Report& report) { return report.scenario.model == ModelKind::villager; }

bool contains(const std::vector<ActionProfile>& list, const ActionProfile& profile) {
  return std::find(list.begin(), list.end(), profile) != list.end();
}

std::string rules_line(const VillagerRules& rules) {
  std::ostringstream os;
  os << "endowment=" << rules.endowment << " tax=" << rules.tax << " reward_pool="
     << rules.reward_pool << " reward=" << (rules.reward_enabled ? "on" : "off")
     << " punishment=" << (rules.punishment_enabled ? "on" : "off") << " robber_strength="
     << rules.robber_strength << " villager_strength=" << rules.villager_strength
     << " betrayer_aids_robber=" << (rules.betrayer_aids_robber ? "on" : "off");
  if (rules.survival_threshold) os << " survival_threshold=" << *rules.survival_threshold;
  return os.str();
}

std::string exited_label(const Report& report, int participant) {
  if (is_villager(report) && participant == report.scenario.rules->n_villagers) return "robber";
  return "villager " + player_label(participant);
}

// The paper-style slice table for a 3-player game: rows are the last player's
// actions, columns the first two players' combinations.
std::string slice_table(const NormalFormGame& game) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header = {"action"};
  for (int a = 0; a < game.action_count(0); ++a) {
    for (int b = 0; b < game.action_count(1); ++b) {
      const std::string& name_a = game.action_name(0, a);
      const std::string& name_b = game.action_name(1, b);
      header.push_back(name_a == name_b ? "A & B " + name_a : "A " + name_a + ", B " + name_b);
    }
  }
  rows.push_back(std::move(header));
  for (int c = 0; c < game.action_count(2); ++c) {
    std::vector<std::string> row = {game.action_name(2, c)};
    for (int a = 0; a < game.action_count(0); ++a) {
      for (int b = 0; b < game.action_count(1); ++b) {
        row.push_back(game.payoff_at(ActionProfile{a, b, c})[2].str());
      }
    }
    rows.push_back(std::move(row));
  }
  return format_table(rows, "  ");
}

std::string bimatrix_table(const NormalFormGame& game) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header = {"A \\ B"};
  for (int b = 0; b < game.action_count(1); ++b) header.push_back(game.action_name(1, b));
  rows.push_back(std::move(header));
  for (int a = 0; a < game.action_count(0); ++a) {
    std::vector<std::string> row = {game.action_name(0, a)};
    for (int b = 0; b < game.action_count(1); ++b) {
      const PayoffVector& cell = game.payoff_at(ActionProfile{a, b});
      row.push_back(cell[0].str() + ", " + cell[1].str());
    }
    rows.push_back(std::move(row));
  }
  return format_table(rows, "  ");
}

std::string equilibrium_lines(const Report& report, const std::vector<ActionProfile>& profiles) {
  std::vector<std::vector<std::string>> rows;
  for (const ActionProfile& profile : profiles) {
    std::vector<std::string> row = {report.game.profile_label(profile),
                                    "payoffs " + payoffs_str(report.game.payoff_at(profile))};
    if (report.game.has_annotations()) {
      row.push_back("robber " + report.game.annotation_at(profile).rule_maker_payoff.str());
    }
    rows.push_back(std::move(row));
  }
  return format_table(rows, "  ");
}

std::string render_table(const Report& report) {
  std::ostringstream os;
  os << "scenario: " << report.scenario_name << "\n";
  os << "model: " << to_string(report.scenario.model);
  if (is_villager(report)) {
    os << " (" << report.scenario.rules->n_villagers << " villagers)";
  }
  os << "\n";
  if (is_villager(report)) {
    os << "rules: " << rules_line(*report.scenario.rules) << "\n";
  }

  if (report.game.player_count() == 3) {
    if (is_villager(report)) {
      os << "\npayoff table for villager C (rows: C's action; columns: A and B):\n";
    } else {
      os << "\npayoff slice for player C (rows: C's action; columns: A and B):\n";
    }
    os << slice_table(report.game);
  } else if (report.game.player_count() == 2) {
    os << "\npayoff matrix (row player A, column player B):\n" << bimatrix_table(report.game);
  }

  if (report.analysis) {
    const EquilibriumReport& analysis = *report.analysis;
    os << "\nweak equilibria (" << analysis.weak_equilibria.size() << "):\n";
    if (analysis.weak_equilibria.empty()) {
      os << "  none\n";
    } else {
      os << equilibrium_lines(report, analysis.weak_equilibria);
    }
    os << "strict equilibria (" << analysis.strict_equilibria.size() << "):\n";
    if (analysis.strict_equilibria.empty()) {
      os << "  none\n";
    } else {
      os << equilibrium_lines(report, analysis.strict_equilibria);
    }
    if (report.scenario.analysis.value_or(AnalysisSpec{}).pareto) {
      os << "pareto front (" << analysis.pareto.size() << "):\n";
      os << equilibrium_lines(report, analysis.pareto);
    }
    if (report.scenario.analysis && report.scenario.analysis->dominance) {
      os << "iterated elimination (" << to_string(*report.scenario.analysis->dominance) << "):\n";
      if (analysis.dominance_trace.empty()) {
        os << "  no dominated actions\n";
      } else {
        int step = 1;
        for (const EliminationStep& entry : analysis.dominance_trace) {
          os << "  " << step++ << ". player " << player_label(entry.player) << ": "
             << report.game.action_name(entry.player, entry.action) << " dominated by "
             << report.game.action_name(entry.player, entry.dominating_action) << "\n";
        }
      }
      std::vector<std::string> survivors;
      for (int p = 0; p < report.game.player_count(); ++p) {
        std::vector<std::string> names;
        for (int a : analysis.surviving_actions[static_cast<std::size_t>(p)]) {
          names.push_back(report.game.action_name(p, a));
        }
        survivors.push_back(player_label(p) + " {" + join(names, ", ") + "}");
      }
      os << "  surviving actions: " << join(survivors, "; ") << "\n";
    }
    if (analysis.selection) {
      const Selection& selection = *analysis.selection;
      os << "selection (" << to_string(selection.rule)
         << "): " << report.game.profile_label(selection.selected) << "  payoffs "
         << payoffs_str(report.game.payoff_at(selection.selected));
      if (report.robber_revenue) os << "  robber " << report.robber_revenue->str();
      os << "\n";
      if (selection.ambiguous) {
        os << "  ambiguous among " << selection.candidates.size()
           << " candidates; lexicographic representative shown\n";
      }
      if (report.scenario.analysis.value_or(AnalysisSpec{}).pareto) {
        if (report.selection_on_pareto) {
          os << "  note: equilibrium coincides with Pareto optimum\n";
        } else {
          os << "  note: selected equilibrium is not on the Pareto front\n";
        }
      }
    } else {
      os << "selection: no equilibria to select from\n";
    }
    if (report.effectiveness_report) {
      const EffectivenessReport& eff = *report.effectiveness_report;
      os << "effectiveness: punishment margin " << eff.punishment_margin.str() << ", reward margin "
         << eff.reward_margin.str() << " -> " << (eff.effective ? "effective" : "NOT effective")
         << "\n";
    }

    os << "\nprofiles (" << report.game.profile_count() << "):\n";
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header = {"profile", "payoffs"};
    if (report.game.has_annotations()) header.push_back("robber");
    header.insert(header.end(), {"weak", "strict", "pareto"});
    rows.push_back(std::move(header));
    for (const ActionProfile& profile : enumerate_profiles(report.game)) {
      std::vector<std::string> row = {report.game.profile_label(profile),
                                      payoffs_str(report.game.payoff_at(profile))};
      if (report.game.has_annotations()) {
        row.push_back(report.game.annotation_at(profile).rule_maker_payoff.str());
      }
      row.push_back(contains(analysis.weak_equilibria, profile) ? "*" : "-");
      row.push_back(contains(analysis.strict_equilibria, profile) ? "*" : "-");
      row.push_back(contains(analysis.pareto, profile) ? "*" : "-");
      rows.push_back(std::move(row));
    }
    os << format_table(rows, "  ");
  }

  if (report.trajectory) {
    const Trajectory& trajectory = *report.trajectory;
    const DynamicsSpec& spec = *report.scenario.dynamics;
    os << "\ndynamics (" << spec.rounds << " rounds requested, seed " << spec.seed << "):\n";
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"round", "profile", "villagers", "robber"});
    int round_number = 1;
    for (const RoundRecord& round : trajectory.rounds) {
      rows.push_back({std::to_string(round_number++), report.game.profile_label(round.profile),
                      payoffs_str(round.villager_payoffs), round.robber_payoff.str()});
    }
    os << format_table(rows, "  ");
    os << "  termination: " << to_string(trajectory.termination);
    if (trajectory.exited_participant) {
      os << " (" << exited_label(report, *trajectory.exited_participant) << ")";
    }
    os << "\n";
    os << "  cumulative: villagers " << payoffs_str(trajectory.cumulative_villagers) << "; robber "
       << trajectory.cumulative_robber.str() << "\n";
    if (report.summary) {
      std::vector<std::string> counts;
      for (std::size_t i = 0; i < report.summary->action_counts.size(); ++i) {
        std::vector<std::string> per_action;
        for (std::size_t a = 0; a < report.summary->action_counts[i].size(); ++a) {
          per_action.push_back(villager_action_names()[a] + "=" +
                               std::to_string(report.summary->action_counts[i][a]));
        }
        counts.push_back(player_label(static_cast<int>(i)) + ": " + join(per_action, " "));
      }
      os << "  action counts: " << join(counts, "; ") << "\n";
      os << "  final round profile is a weak equilibrium: "
         << (report.summary->final_profile_is_weak_equilibrium ? "yes" : "no") << "\n";
    }
  }

  if (report.ranking) {
    const DesignSpec& spec = *report.scenario.design;
    os << "\nrule search (" << report.ranking->size() << " grid points, selection="
       << to_string(spec.selection) << ", require_effective="
       << (spec.require_effective ? "on" : "off") << "):\n";
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"rank", "parameters", "revenue", "effective", "regime", "selected"});
    int rank = 1;
    for (const RuleEvaluation& evaluation : *report.ranking) {
      std::vector<std::string> overrides;
      for (const auto& [name, value] : evaluation.overrides) {
        overrides.push_back(name + "=" + value.str());
      }
      const Regime regime =
          evaluation.forced_defiance ? Regime::defiance : regime_of(evaluation.selected);
      rows.push_back({std::to_string(rank++), join(overrides, " "),
                      evaluation.robber_revenue.str(),
                      evaluation.effectiveness.effective ? "yes" : "no", to_string(regime),
                      report.game.profile_label(evaluation.selected.selected)});
    }
    os << format_table(rows, "  ");
    if (!report.ranking->empty()) {
      const RuleEvaluation& winner = report.ranking->front();
      std::vector<std::string> overrides;
      for (const auto& [name, value] : winner.overrides) {
        overrides.push_back(name + "=" + value.str());
      }
      os << "  winner: " << join(overrides, " ") << "  revenue " << winner.robber_revenue.str()
         << "\n";
    }
  }

  if (report.sweep) {
    const SweepResult& sweep = *report.sweep;
    os << "\nsweep " << sweep.parameter << " over " << sweep.points.size() << " values (selection="
       << to_string(report.scenario.design ? report.scenario.design->selection
                                           : SelectionRule::payoff_dominance)
       << "):\n";
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"index", "value", "regime", "revenue", "selected"});
    for (std::size_t i = 0; i < sweep.points.size(); ++i) {
      const SweepPoint& point = sweep.points[i];
      rows.push_back({std::to_string(i), point.value.str(), to_string(point.regime),
                      point.robber_revenue.str(),
                      report.game.profile_label(point.selected.selected)});
    }
    os << format_table(rows, "  ");
    if (sweep.flip_indices.empty()) {
      os << "  no regime flips\n";
    } else {
      std::vector<std::string> flips;
      for (int i : sweep.flip_indices) {
        flips.push_back("after index " + std::to_string(i) + " (" +
                        sweep.points[static_cast<std::size_t>(i)].value.str() + " -> " +
                        sweep.points[static_cast<std::size_t>(i) + 1].value.str() + ")");
      }
      os << "  regime flips: " << join(flips, ", ") << "\n";
    }
  }

  return os.str();
}

json profile_to_json(const NormalFormGame& game, const ActionProfile& profile) {
  json names = json::array();
  for (int p = 0; p < game.player_count(); ++p) {
    names.push_back(game.action_name(p, profile[p]));
  }
  return names;
}

json profile_entry(const Report& report, const ActionProfile& profile) {
  json entry = json::object();
  entry["profile"] = profile_to_json(report.game, profile);
  json payoffs = json::array();
  for (const Rational& v : report.game.payoff_at(profile)) payoffs.push_back(v.str());
  entry["payoffs"] = std::move(payoffs);
  if (report.game.has_annotations()) {
    entry["robber_payoff"] = report.game.annotation_at(profile).rule_maker_payoff.str();
  }
  return entry;
}

json rules_to_report_json(const VillagerRules& rules) {
  json obj = json::object();
  obj["n_villagers"] = rules.n_villagers;
  obj["endowment"] = rules.endowment.str();
  obj["tax"] = rules.tax.str();
  obj["reward_pool"] = rules.reward_pool.str();
  obj["reward_enabled"] = rules.reward_enabled;
  obj["punishment_enabled"] = rules.punishment_enabled;
  obj["robber_strength"] = rules.robber_strength.str();
  obj["villager_strength"] = rules.villager_strength.str();
  obj["betrayer_aids_robber"] = rules.betrayer_aids_robber;
  if (rules.survival_threshold) obj["survival_threshold"] = rules.survival_threshold->str();
  return obj;
}

std::string render_json(const Report& report) {
  json doc = json::object();
  doc["scenario"] = report.scenario_name;
  doc["model"] = to_string(report.scenario.model);
  if (is_villager(report)) doc["rules"] = rules_to_report_json(*report.scenario.rules);
  json players = json::array();
  for (int p = 0; p < report.game.player_count(); ++p) players.push_back(player_label(p));
  doc["players"] = std::move(players);
  json actions = json::array();
  for (int p = 0; p < report.game.player_count(); ++p) actions.push_back(report.game.action_names(p));
  doc["actions"] = std::move(actions);

  if (report.analysis) {
    const EquilibriumReport& analysis = *report.analysis;
    json section = json::object();
    const AnalysisSpec spec = report.scenario.analysis.value_or(AnalysisSpec{});
    section["equilibria_mode"] = to_string(spec.equilibria);
    json weak = json::array();
    for (const auto& profile : analysis.weak_equilibria) weak.push_back(profile_entry(report, profile));
    section["weak_equilibria"] = std::move(weak);
    json strict = json::array();
    for (const auto& profile : analysis.strict_equilibria) {
      strict.push_back(profile_entry(report, profile));
    }
    section["strict_equilibria"] = std::move(strict);
    if (spec.pareto) {
      json front = json::array();
      for (const auto& profile : analysis.pareto) front.push_back(profile_entry(report, profile));
      section["pareto_front"] = std::move(front);
    }
    if (spec.dominance) {
      json dominance = json::object();
      dominance["mode"] = to_string(*spec.dominance);
      json trace = json::array();
      for (const EliminationStep& entry : analysis.dominance_trace) {
        json step = json::object();
        step["player"] = player_label(entry.player);
        step["action"] = report.game.action_name(entry.player, entry.action);
        step["dominated_by"] = report.game.action_name(entry.player, entry.dominating_action);
        trace.push_back(std::move(step));
      }
      dominance["trace"] = std::move(trace);
      json surviving = json::array();
      for (int p = 0; p < report.game.player_count(); ++p) {
        json names = json::array();
        for (int a : analysis.surviving_actions[static_cast<std::size_t>(p)]) {
          names.push_back(report.game.action_name(p, a));
        }
        surviving.push_back(std::move(names));
      }
      dominance["surviving_actions"] = std::move(surviving);
      section["dominance"] = std::move(dominance);
    }
    if (analysis.selection) {
      const Selection& selection = *analysis.selection;
      json sel = json::object();
      sel["rule"] = to_string(selection.rule);
      sel["selected"] = profile_to_json(report.game, selection.selected);
      json payoffs = json::array();
      for (const Rational& v : report.game.payoff_at(selection.selected)) payoffs.push_back(v.str());
      sel["payoffs"] = std::move(payoffs);
      sel["ambiguous"] = selection.ambiguous;
      json candidates = json::array();
      for (const auto& candidate : selection.candidates) {
        candidates.push_back(profile_to_json(report.game, candidate));
      }
      sel["candidates"] = std::move(candidates);
      if (spec.pareto) sel["on_pareto_front"] = report.selection_on_pareto;
      if (report.robber_revenue) sel["robber_revenue"] = report.robber_revenue->str();
      section["selection"] = std::move(sel);
    }
    if (report.effectiveness_report) {
      json eff = json::object();
      eff["punishment_margin"] = report.effectiveness_report->punishment_margin.str();
      eff["reward_margin"] = report.effectiveness_report->reward_margin.str();
      eff["effective"] = report.effectiveness_report->effective;
      section["effectiveness"] = std::move(eff);
    }
    json cells = json::array();
    for (const ActionProfile& profile : enumerate_profiles(report.game)) {
      json entry = profile_entry(report, profile);
      entry["weak_equilibrium"] = contains(analysis.weak_equilibria, profile);
      entry["strict_equilibrium"] = contains(analysis.strict_equilibria, profile);
      if (spec.pareto) entry["pareto"] = contains(analysis.pareto, profile);
      cells.push_back(std::move(entry));
    }
    section["profiles"] = std::move(cells);
    doc["analysis"] = std::move(section);
  }

  if (report.trajectory) {
    const Trajectory& trajectory = *report.trajectory;
    json section = json::object();
    section["rounds_requested"] = report.scenario.dynamics->rounds;
    section["seed"] = report.scenario.dynamics->seed;
    json rounds = json::array();
    int number = 1;
    for (const RoundRecord& round : trajectory.rounds) {
      json entry = json::object();
      entry["round"] = number++;
      entry["profile"] = profile_to_json(report.game, round.profile);
      json payoffs = json::array();
      for (const Rational& v : round.villager_payoffs) payoffs.push_back(v.str());
      entry["villager_payoffs"] = std::move(payoffs);
      entry["robber_payoff"] = round.robber_payoff.str();
      rounds.push_back(std::move(entry));
    }
    section["rounds"] = std::move(rounds);
    section["termination"] = to_string(trajectory.termination);
    if (trajectory.exited_participant) {
      section["exited"] = exited_label(report, *trajectory.exited_participant);
    }
    json cumulative = json::object();
    json villagers = json::array();
    for (const Rational& v : trajectory.cumulative_villagers) villagers.push_back(v.str());
    cumulative["villagers"] = std::move(villagers);
    cumulative["robber"] = trajectory.cumulative_robber.str();
    section["cumulative"] = std::move(cumulative);
    if (report.summary) {
      json counts = json::object();
      for (std::size_t i = 0; i < report.summary->action_counts.size(); ++i) {
        json per_action = json::object();
        for (std::size_t a = 0; a < report.summary->action_counts[i].size(); ++a) {
          per_action[villager_action_names()[a]] = report.summary->action_counts[i][a];
        }
        counts[player_label(static_cast<int>(i))] = std::move(per_action);
      }
      section["action_counts"] = std::move(counts);
      section["final_profile_is_weak_equilibrium"] =
          report.summary->final_profile_is_weak_equilibrium;
    }
    doc["dynamics"] = std::move(section);
  }

  if (report.ranking) {
    json section = json::object();
    section["selection"] = to_string(report.scenario.design->selection);
    section["require_effective"] = report.scenario.design->require_effective;
    json points = json::array();
    int rank = 1;
    for (const RuleEvaluation& evaluation : *report.ranking) {
      json entry = json::object();
      entry["rank"] = rank++;
      json overrides = json::object();
      for (const auto& [name, value] : evaluation.overrides) overrides[name] = value.str();
      entry["overrides"] = std::move(overrides);
      entry["revenue"] = evaluation.robber_revenue.str();
      entry["effective"] = evaluation.effectiveness.effective;
      entry["forced_defiance"] = evaluation.forced_defiance;
      const Regime regime =
          evaluation.forced_defiance ? Regime::defiance : regime_of(evaluation.selected);
      entry["regime"] = to_string(regime);
      entry["selected"] = profile_to_json(report.game, evaluation.selected.selected);
      points.push_back(std::move(entry));
    }
    section["ranking"] = std::move(points);
    doc["design"] = std::move(section);
  }

  if (report.sweep) {
    const SweepResult& sweep = *report.sweep;
    json section = json::object();
    section["parameter"] = sweep.parameter;
    json points = json::array();
    for (std::size_t i = 0; i < sweep.points.size(); ++i) {
      const SweepPoint& point = sweep.points[i];
      json entry = json::object();
      entry["index"] = i;
      entry["value"] = point.value.str();
      entry["regime"] = to_string(point.regime);
      entry["revenue"] = point.robber_revenue.str();
      entry["selected"] = profile_to_json(report.game, point.selected.selected);
      points.push_back(std::move(entry));
    }
    section["points"] = std::move(points);
    section["flip_indices"] = sweep.flip_indices;
    doc["sweep"] = std::move(section);
  }

  return doc.dump(2) + "\n";
}

std::string render_csv(const Report& report) {
  std::ostringstream os;
  switch (report.focus) {
    case ReportFocus::analysis: {
      if (!report.analysis) return "";
      std::vector<std::string> header;
      for (int p = 0; p < report.game.player_count(); ++p) header.push_back("action_" + player_label(p));
      for (int p = 0; p < report.game.player_count(); ++p) header.push_back("payoff_" + player_label(p));
      header.insert(header.end(), {"weak_equilibrium", "strict_equilibrium", "pareto"});
      if (report.game.has_annotations()) header.push_back("robber_payoff");
      os << csv_row(header);
      for (const ActionProfile& profile : enumerate_profiles(report.game)) {
        std::vector<std::string> row;
        for (int p = 0; p < report.game.player_count(); ++p) {
          row.push_back(report.game.action_name(p, profile[p]));
        }
        for (const Rational& v : report.game.payoff_at(profile)) row.push_back(v.str());
        row.push_back(contains(report.analysis->weak_equilibria, profile) ? "true" : "false");
        row.push_back(contains(report.analysis->strict_equilibria, profile) ? "true" : "false");
        row.push_back(contains(report.analysis->pareto, profile) ? "true" : "false");
        if (report.game.has_annotations()) {
          row.push_back(report.game.annotation_at(profile).rule_maker_payoff.str());
        }
        os << csv_row(row);
      }
      break;
    }
    case ReportFocus::dynamics: {
      if (!report.trajectory) return "";
      std::vector<std::string> header = {"round"};
      const int n = report.scenario.rules->n_villagers;
      for (int p = 0; p < n; ++p) header.push_back("action_" + player_label(p));
      for (int p = 0; p < n; ++p) header.push_back("payoff_" + player_label(p));
      header.push_back("robber_payoff");
      os << csv_row(header);
      int number = 1;
      for (const RoundRecord& round : report.trajectory->rounds) {
        std::vector<std::string> row = {std::to_string(number++)};
        for (int p = 0; p < n; ++p) {
          row.push_back(villager_action_names()[static_cast<std::size_t>(round.profile[p])]);
        }
        for (const Rational& v : round.villager_payoffs) row.push_back(v.str());
        row.push_back(round.robber_payoff.str());
        os << csv_row(row);
      }
      break;
    }
    case ReportFocus::grid: {
      if (!report.ranking) return "";
      std::vector<std::string> parameters;
      if (!report.ranking->empty()) {
        for (const auto& [name, value] : report.ranking->front().overrides) {
          parameters.push_back(name);
        }
      }
      std::vector<std::string> header = {"rank"};
      header.insert(header.end(), parameters.begin(), parameters.end());
      header.insert(header.end(), {"revenue", "effective", "regime", "selected"});
      os << csv_row(header);
      int rank = 1;
      for (const RuleEvaluation& evaluation : *report.ranking) {
        std::vector<std::string> row = {std::to_string(rank++)};
        for (const auto& [name, value] : evaluation.overrides) row.push_back(value.str());
        row.push_back(evaluation.robber_revenue.str());
        row.push_back(evaluation.effectiveness.effective ? "true" : "false");
        const Regime regime =
            evaluation.forced_defiance ? Regime::defiance : regime_of(evaluation.selected);
        row.push_back(to_string(regime));
        row.push_back(report.game.profile_label(evaluation.selected.selected));
        os << csv_row(row);
      }
      break;
    }
    case ReportFocus::sweep: {
      if (!report.sweep) return "";
      os << csv_row({"index", "value", "regime", "revenue", "selected"});
      for (std::size_t i = 0; i < report.sweep->points.size(); ++i) {
        const SweepPoint& point = report.sweep->points[i];
        os << csv_row({std::to_string(i), point.value.str(), to_string(point.regime),
                       point.robber_revenue.str(),
                       report.game.profile_label(point.selected.selected)});
      }
      break;
    }
  }
  return os.str();
}

}  // namespace

Report run(const Scenario& scenario, const std::string& name, const RunOptions& options) {
  validate_scenario(scenario);

  Report report;
  report.scenario_name = name;
  report.scenario = scenario;
  report.focus = options.focus;
  report.game = build_game(scenario);

  if (options.analysis) {
    const AnalysisSpec spec = scenario.analysis.value_or(AnalysisSpec{});
    AnalysisOptions analysis_options;
    analysis_options.equilibria_mode = spec.equilibria;
    analysis_options.selection = spec.selection;
    analysis_options.pareto = spec.pareto;
    analysis_options.elimination = spec.dominance;
    report.analysis = analyze(report.game, analysis_options);
    if (scenario.model == ModelKind::villager) {
      report.effectiveness_report = effectiveness(*scenario.rules);
      if (report.analysis->selection) {
        report.robber_revenue =
            report.game.annotation_at(report.analysis->selection->selected).rule_maker_payoff;
      }
    }
    if (report.analysis->selection && spec.pareto) {
      report.selection_on_pareto =
          contains(report.analysis->pareto, report.analysis->selection->selected);
    }
  }

  if (options.dynamics && scenario.dynamics) {
    report.trajectory = simulate(*scenario.rules, scenario.dynamics->agents,
                                 scenario.dynamics->robber_exit_threshold,
                                 scenario.dynamics->rounds, scenario.dynamics->seed);
    report.summary = trajectory_summary(*report.trajectory);
  }

  if (scenario.design) {
    if (options.design_grid && scenario.design->grid) {
      report.ranking =
          optimize_rules(*scenario.design->grid, *scenario.rules, scenario.design->selection,
                         scenario.design->require_effective, options.jobs);
    }
    if (options.design_sweep && scenario.design->sweep) {
      report.sweep = breakpoint_sweep(*scenario.rules, scenario.design->sweep->parameter,
                                      scenario.design->sweep->values, scenario.design->selection);
    }
  }

  return report;
}

std::string render_report(const Report& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::table:
      return render_table(report);
    case ReportFormat::json:
      return render_json(report);
    case ReportFormat::csv:
      return render_csv(report);
  }
  return "";
}

}  // namespace vd

#include "vd/game.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "vd/errors.hpp"

namespace vd {

namespace {

std::string profile_key(const ActionProfile& profile) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < profile.size(); ++i) {
    if (i > 0) os << ",";
    os << profile[i];
  }
  os << ")";
  return os.str();
}

}  // namespace

int NormalFormGame::action_count(int player) const {
  return static_cast<int>(action_names(player).size());
}

const std::vector<std::string>& NormalFormGame::action_names(int player) const {
  if (player < 0 || player >= player_count_) {
    throw InvalidProfileError("player index " + std::to_string(player) + " out of range");
  }
  return action_names_[static_cast<std::size_t>(player)];
}

const std::string& NormalFormGame::action_name(int player, int action) const {
  const auto& names = action_names(player);
  if (action < 0 || action >= static_cast<int>(names.size())) {
    throw InvalidProfileError("action index " + std::to_string(action) + " out of range for player " +
                              std::to_string(player));
  }
  return names[static_cast<std::size_t>(action)];
}

void NormalFormGame::check_profile(const ActionProfile& profile) const {
  if (profile.size() != player_count_) {
    throw InvalidProfileError("profile " + profile_key(profile) + " has length " +
                              std::to_string(profile.size()) + ", expected " +
                              std::to_string(player_count_));
  }
  for (int p = 0; p < player_count_; ++p) {
    if (profile[p] < 0 || profile[p] >= action_count(p)) {
      throw InvalidProfileError("profile " + profile_key(profile) + " has no action " +
                                std::to_string(profile[p]) + " for player " + std::to_string(p));
    }
  }
}

std::size_t NormalFormGame::index_of(const ActionProfile& profile) const {
  check_profile(profile);
  std::size_t index = 0;
  for (int p = 0; p < player_count_; ++p) {
    index = index * static_cast<std::size_t>(action_count(p)) + static_cast<std::size_t>(profile[p]);
  }
  return index;
}

ActionProfile NormalFormGame::profile_at(std::size_t index) const {
  ActionProfile profile;
  profile.actions.resize(static_cast<std::size_t>(player_count_));
  for (int p = player_count_ - 1; p >= 0; --p) {
    std::size_t count = static_cast<std::size_t>(action_count(p));
    profile[p] = static_cast<int>(index % count);
    index /= count;
  }
  return profile;
}

const PayoffVector& NormalFormGame::payoff_at(const ActionProfile& profile) const {
  return payoffs_[index_of(profile)];
}

const ProfileAnnotation& NormalFormGame::annotation_at(const ActionProfile& profile) const {
  if (annotations_.empty()) {
    throw InvalidProfileError("game carries no per-profile annotations");
  }
  return annotations_[index_of(profile)];
}

std::string NormalFormGame::profile_label(const ActionProfile& profile) const {
  check_profile(profile);
  std::string label;
  for (int p = 0; p < player_count_; ++p) {
    if (p > 0) label += ",";
    label += action_name(p, profile[p]);
  }
  return label;
}

NormalFormGame make_game_dense(int player_count, std::vector<std::vector<std::string>> action_names,
                               std::vector<PayoffVector> payoffs,
                               std::vector<ProfileAnnotation> annotations) {
  if (player_count < 2) {
    throw LengthMismatchError("player_count must be at least 2, got " + std::to_string(player_count));
  }
  if (static_cast<int>(action_names.size()) != player_count) {
    throw LengthMismatchError("need one action list per player");
  }
  std::size_t product = 1;
  for (int p = 0; p < player_count; ++p) {
    const auto& names = action_names[static_cast<std::size_t>(p)];
    if (names.empty()) {
      throw LengthMismatchError("player " + std::to_string(p) + " has no actions");
    }
    std::set<std::string> unique(names.begin(), names.end());
    if (unique.size() != names.size()) {
      throw DuplicateActionError("duplicate action name for player " + std::to_string(p));
    }
    product *= names.size();
  }
  if (payoffs.size() != product) {
    throw MissingCellError("payoff table has " + std::to_string(payoffs.size()) + " cells, expected " +
                           std::to_string(product));
  }
  for (const auto& vec : payoffs) {
    if (static_cast<int>(vec.size()) != player_count) {
      throw LengthMismatchError("payoff vector has " + std::to_string(vec.size()) +
                                " entries, expected " + std::to_string(player_count));
    }
  }
  if (!annotations.empty() && annotations.size() != product) {
    throw LengthMismatchError("annotation list must be empty or cover every profile");
  }

  NormalFormGame game;
  game.player_count_ = player_count;
  game.action_names_ = std::move(action_names);
  game.payoffs_ = std::move(payoffs);
  game.annotations_ = std::move(annotations);
  return game;
}

NormalFormGame make_game(int player_count, std::vector<std::vector<std::string>> action_names,
                         const std::vector<std::pair<ActionProfile, PayoffVector>>& cells) {
  // Build the skeleton first so profile validation can reuse it.
  std::size_t product = 1;
  for (const auto& names : action_names) product *= std::max<std::size_t>(names.size(), 1);
  NormalFormGame skeleton =
      make_game_dense(player_count, action_names, std::vector<PayoffVector>(product, PayoffVector(static_cast<std::size_t>(player_count), Rational(0))));

  std::vector<PayoffVector> table(product);
  std::vector<bool> seen(product, false);
  for (const auto& [profile, vec] : cells) {
    std::size_t index = skeleton.index_of(profile);
    if (seen[index]) {
      throw InvalidProfileError("duplicate payoff cell for profile " + profile_key(profile));
    }
    if (static_cast<int>(vec.size()) != player_count) {
      throw LengthMismatchError("payoff vector for profile " + profile_key(profile) + " has " +
                                std::to_string(vec.size()) + " entries, expected " +
                                std::to_string(player_count));
    }
    seen[index] = true;
    table[index] = vec;
  }
  for (std::size_t i = 0; i < product; ++i) {
    if (!seen[i]) {
      throw MissingCellError("no payoff for profile " + profile_key(skeleton.profile_at(i)));
    }
  }
  return make_game_dense(player_count, std::move(action_names), std::move(table));
}

std::vector<ActionProfile> enumerate_profiles(const NormalFormGame& game) {
  std::vector<ActionProfile> profiles;
  profiles.reserve(game.profile_count());
  for (std::size_t i = 0; i < game.profile_count(); ++i) {
    profiles.push_back(game.profile_at(i));
  }
  return profiles;
}

std::vector<int> others_of(const ActionProfile& profile, int player) {
  std::vector<int> others;
  others.reserve(profile.actions.size() > 0 ? profile.actions.size() - 1 : 0);
  for (int p = 0; p < profile.size(); ++p) {
    if (p != player) others.push_back(profile[p]);
  }
  return others;
}

std::vector<int> best_responses(const NormalFormGame& game, int player,
                                const std::vector<int>& others) {
  if (player < 0 || player >= game.player_count()) {
    throw InvalidProfileError("player index " + std::to_string(player) + " out of range");
  }
  if (static_cast<int>(others.size()) != game.player_count() - 1) {
    throw InvalidProfileError("expected " + std::to_string(game.player_count() - 1) +
                              " opponent actions, got " + std::to_string(others.size()));
  }
  ActionProfile profile;
  profile.actions.resize(static_cast<std::size_t>(game.player_count()));
  std::size_t k = 0;
  for (int p = 0; p < game.player_count(); ++p) {
    if (p != player) profile[p] = others[k++];
  }

  std::vector<int> best;
  Rational best_value;
  for (int action = 0; action < game.action_count(player); ++action) {
    profile[player] = action;
    const Rational& value = game.payoff_at(profile)[static_cast<std::size_t>(player)];
    if (best.empty() || value > best_value) {
      best_value = value;
      best.assign(1, action);
    } else if (value == best_value) {
      best.push_back(action);
    }
  }
  return best;
}

namespace {

NormalFormGame transformed(const NormalFormGame& game, const Rational& scale, const Rational& offset,
                           int only_player) {
  std::vector<std::vector<std::string>> names;
  for (int p = 0; p < game.player_count(); ++p) names.push_back(game.action_names(p));

  std::vector<PayoffVector> payoffs;
  std::vector<ProfileAnnotation> annotations;
  payoffs.reserve(game.profile_count());
  for (std::size_t i = 0; i < game.profile_count(); ++i) {
    ActionProfile profile = game.profile_at(i);
    PayoffVector vec = game.payoff_at(profile);
    for (int p = 0; p < game.player_count(); ++p) {
      if (only_player >= 0 && p != only_player) continue;
      vec[static_cast<std::size_t>(p)] = scale * vec[static_cast<std::size_t>(p)] + offset;
    }
    payoffs.push_back(std::move(vec));
    if (game.has_annotations()) annotations.push_back(game.annotation_at(profile));
  }
  return make_game_dense(game.player_count(), std::move(names), std::move(payoffs),
                         std::move(annotations));
}

}  // namespace

NormalFormGame affine_transform(const NormalFormGame& game, int player, const Rational& scale,
                                const Rational& offset) {
  if (player < 0 || player >= game.player_count()) {
    throw InvalidProfileError("player index " + std::to_string(player) + " out of range");
  }
  return transformed(game, scale, offset, player);
}

NormalFormGame affine_transform_all(const NormalFormGame& game, const Rational& scale,
                                    const Rational& offset) {
  return transformed(game, scale, offset, -1);
}

}  // namespace vd

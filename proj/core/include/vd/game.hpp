#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "vd/rational.hpp"

namespace vd {

// One payoff per player, in player order.
using PayoffVector = std::vector<Rational>;

// One action index per player; the coordinates of a payoff-table cell.
struct ActionProfile {
  std::vector<int> actions;

  ActionProfile() = default;
  explicit ActionProfile(std::vector<int> a) : actions(std::move(a)) {}
  ActionProfile(std::initializer_list<int> a) : actions(a) {}

  int size() const { return static_cast<int>(actions.size()); }
  int operator[](int player) const { return actions[static_cast<std::size_t>(player)]; }
  int& operator[](int player) { return actions[static_cast<std::size_t>(player)]; }

  friend auto operator<=>(const ActionProfile&, const ActionProfile&) = default;
};

// Optional per-cell annotation attached by game builders. The villager game
// builder records the rule maker's take and whether defiance succeeded.
struct ProfileAnnotation {
  Rational rule_maker_payoff;
  bool defiance_succeeded = false;

  friend bool operator==(const ProfileAnnotation&, const ProfileAnnotation&) = default;
};

// Finite normal-form game with a dense payoff table over the full Cartesian
// product of action sets. Immutable after construction; all queries are pure.
class NormalFormGame {
 public:
  NormalFormGame() = default;

  int player_count() const { return player_count_; }
  int action_count(int player) const;
  const std::vector<std::string>& action_names(int player) const;
  const std::string& action_name(int player, int action) const;

  std::size_t profile_count() const { return payoffs_.size(); }

  // Lexicographic rank of a profile (player 0 most significant).
  std::size_t index_of(const ActionProfile& profile) const;
  ActionProfile profile_at(std::size_t index) const;

  // Throws InvalidProfileError on wrong length or an out-of-range index.
  const PayoffVector& payoff_at(const ActionProfile& profile) const;

  bool has_annotations() const { return !annotations_.empty(); }
  const ProfileAnnotation& annotation_at(const ActionProfile& profile) const;

  // Human-readable "Defy,Obey,Betray" form of a profile.
  std::string profile_label(const ActionProfile& profile) const;

  friend bool operator==(const NormalFormGame&, const NormalFormGame&) = default;

  friend NormalFormGame make_game_dense(int, std::vector<std::vector<std::string>>,
                                        std::vector<PayoffVector>,
                                        std::vector<ProfileAnnotation>);

 private:
  void check_profile(const ActionProfile& profile) const;

  int player_count_ = 0;
  std::vector<std::vector<std::string>> action_names_;
  std::vector<PayoffVector> payoffs_;             // lexicographic profile order
  std::vector<ProfileAnnotation> annotations_;    // empty, or one per profile
};

// Builds a validated game from an explicit cell mapping. Throws
// DuplicateActionError, LengthMismatchError, MissingCellError or
// InvalidProfileError when the mapping is not a complete, well-formed table.
NormalFormGame make_game(int player_count, std::vector<std::vector<std::string>> action_names,
                         const std::vector<std::pair<ActionProfile, PayoffVector>>& cells);

// Same validation, but payoffs arrive already in lexicographic profile order.
NormalFormGame make_game_dense(int player_count, std::vector<std::vector<std::string>> action_names,
                               std::vector<PayoffVector> payoffs,
                               std::vector<ProfileAnnotation> annotations = {});

// All profiles in lexicographic order (player 0 most significant).
std::vector<ActionProfile> enumerate_profiles(const NormalFormGame& game);

// Actions of everyone except `player`, in player order.
std::vector<int> others_of(const ActionProfile& profile, int player);

// Every action of `player` achieving the maximum payoff against the fixed
// actions of the others; ascending action order.
std::vector<int> best_responses(const NormalFormGame& game, int player,
                                const std::vector<int>& others);

// Copy of the game with payoffs of one player (or of everyone) mapped through
// x -> scale*x + offset. Order-preserving for scale > 0; annotations carry over.
NormalFormGame affine_transform(const NormalFormGame& game, int player, const Rational& scale,
                                const Rational& offset);
NormalFormGame affine_transform_all(const NormalFormGame& game, const Rational& scale,
                                    const Rational& offset);

}  // namespace vd

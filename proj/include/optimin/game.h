// Copyright 2026 The Optimin Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef OPTIMIN_GAME_H_
#define OPTIMIN_GAME_H_

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <vector>

#include "optimin/rational.h"

namespace optimin {

// One pure strategy index per player.
class PureProfile {
 public:
  PureProfile() = default;
  explicit PureProfile(std::vector<int> indices) : indices_(std::move(indices)) {}
  PureProfile(std::initializer_list<int> indices) : indices_(indices) {}

  int operator[](std::size_t player) const { return indices_[player]; }
  int& operator[](std::size_t player) { return indices_[player]; }
  std::size_t size() const { return indices_.size(); }
  const std::vector<int>& indices() const { return indices_; }

  // Copy of this profile with `player` switched to `strategy`.
  PureProfile With(int player, int strategy) const {
    PureProfile p = *this;
    p.indices_[player] = strategy;
    return p;
  }

  friend bool operator==(const PureProfile&, const PureProfile&) = default;
  friend auto operator<=>(const PureProfile&, const PureProfile&) = default;

 private:
  std::vector<int> indices_;
};

using Distribution = std::vector<Rational>;

// One probability vector per player.
class MixedProfile {
 public:
  MixedProfile() = default;
  explicit MixedProfile(std::vector<Distribution> distributions)
      : distributions_(std::move(distributions)) {}

  // All mass on `profile`.
  static MixedProfile Degenerate(const class Game& game,
                                 const PureProfile& profile);

  const Distribution& operator[](std::size_t player) const {
    return distributions_[player];
  }
  std::size_t size() const { return distributions_.size(); }
  const std::vector<Distribution>& distributions() const {
    return distributions_;
  }

  friend bool operator==(const MixedProfile&, const MixedProfile&) = default;

 private:
  std::vector<Distribution> distributions_;
};

// Finite n-person normal-form game with exact rational payoffs.
//
// Payoffs are stored densely: cell k holds the n payoffs of the k-th pure
// profile in row-major order (player 0's index varies slowest). Immutable
// after construction.
class Game {
 public:
  // `payoffs` is the flat cell list, n entries per cell. Throws
  // ValidationError if any shape invariant fails.
  Game(std::string title, std::vector<std::string> player_names,
       std::vector<std::vector<std::string>> strategy_labels,
       std::vector<Rational> payoffs);

  const std::string& title() const { return title_; }
  int NumPlayers() const { return static_cast<int>(player_names_.size()); }
  int NumStrategies(int player) const {
    return static_cast<int>(strategy_labels_[player].size());
  }
  std::size_t NumProfiles() const { return num_profiles_; }
  const std::vector<std::string>& player_names() const { return player_names_; }
  const std::vector<std::vector<std::string>>& strategy_labels() const {
    return strategy_labels_;
  }
  const std::string& StrategyLabel(int player, int strategy) const {
    return strategy_labels_[player][strategy];
  }
  // Index of `label` in the player's strategy set; throws ValidationError if
  // absent.
  int StrategyIndex(int player, const std::string& label) const;
  // Profile from one label per player.
  PureProfile ProfileFromLabels(const std::vector<std::string>& labels) const;

  // Row-major position of a profile; ProfileAt is its inverse.
  std::size_t ProfileIndex(const PureProfile& profile) const;
  PureProfile ProfileAt(std::size_t index) const;
  // Distance in cells between profiles differing by one in player's index.
  std::size_t Stride(int player) const { return strides_[player]; }

  // Unchecked access used by the hot loops.
  const Rational& PayoffAt(std::size_t cell, int player) const {
    return payoffs_[cell * player_names_.size() + player];
  }
  std::span<const Rational> flat_payoffs() const { return payoffs_; }

  // Throws ValidationError on a malformed profile or player index.
  void ValidateProfile(const PureProfile& profile) const;
  void ValidatePlayer(int player) const;
  void ValidateMixed(const MixedProfile& profile) const;

  friend bool operator==(const Game&, const Game&) = default;

 private:
  std::string title_;
  std::vector<std::string> player_names_;
  std::vector<std::vector<std::string>> strategy_labels_;
  std::vector<Rational> payoffs_;
  std::vector<std::size_t> strides_;
  std::size_t num_profiles_ = 0;
};

// Payoff vector u(profile), length n.
std::vector<Rational> Payoff(const Game& game, const PureProfile& profile);

// u_player(profile) extended multilinearly to mixed profiles.
Rational ExpectedPayoff(const Game& game, const MixedProfile& profile,
                        int player);

// Iterable view over every pure profile in row-major order.
class ProfileRange {
 public:
  class Iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = PureProfile;
    using difference_type = std::ptrdiff_t;
    using reference = const PureProfile&;
    using pointer = const PureProfile*;

    Iterator() = default;
    Iterator(const Game* game, bool end);

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    Iterator& operator++();
    Iterator operator++(int) {
      Iterator copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const Iterator& a, const Iterator& b) {
      return a.position_ == b.position_;
    }

   private:
    const Game* game_ = nullptr;
    PureProfile current_;
    std::size_t position_ = 0;
  };

  explicit ProfileRange(const Game& game) : game_(&game) {}
  explicit ProfileRange(const Game&& game) = delete;
  Iterator begin() const { return Iterator(game_, false); }
  Iterator end() const { return Iterator(game_, true); }

 private:
  const Game* game_;
};

inline ProfileRange EnumerateProfiles(const Game& game) {
  return ProfileRange(game);
}
ProfileRange EnumerateProfiles(const Game&& game) = delete;

// "(Top,Left)" style rendering with strategy labels.
std::string ProfileToString(const Game& game, const PureProfile& profile);
std::string VectorToString(std::span<const Rational> values);

}  // namespace optimin

#endif  // OPTIMIN_GAME_H_

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

#include "optimin/game.h"

#include <sstream>

#include "optimin/errors.h"

namespace optimin {

Game::Game(std::string title, std::vector<std::string> player_names,
           std::vector<std::vector<std::string>> strategy_labels,
           std::vector<Rational> payoffs)
    : title_(std::move(title)),
      player_names_(std::move(player_names)),
      strategy_labels_(std::move(strategy_labels)),
      payoffs_(std::move(payoffs)) {
  const std::size_t n = player_names_.size();
  if (n == 0) throw ValidationError("a game needs at least one player");
  if (strategy_labels_.size() != n) {
    throw ValidationError("strategy label lists (" +
                          std::to_string(strategy_labels_.size()) +
                          ") do not match player count (" +
                          std::to_string(n) + ")");
  }
  strides_.assign(n, 1);
  num_profiles_ = 1;
  for (std::size_t p = n; p-- > 0;) {
    if (strategy_labels_[p].empty()) {
      throw ValidationError("player " + std::to_string(p) +
                            " has an empty strategy set");
    }
    strides_[p] = num_profiles_;
    num_profiles_ *= strategy_labels_[p].size();
  }
  if (payoffs_.size() != num_profiles_ * n) {
    throw ValidationError("payoff tensor has " +
                          std::to_string(payoffs_.size()) +
                          " entries, expected " +
                          std::to_string(num_profiles_ * n));
  }
}

int Game::StrategyIndex(int player, const std::string& label) const {
  ValidatePlayer(player);
  const auto& labels = strategy_labels_[player];
  for (std::size_t s = 0; s < labels.size(); ++s) {
    if (labels[s] == label) return static_cast<int>(s);
  }
  throw ValidationError("player " + std::to_string(player) +
                        " has no strategy \"" + label + "\"");
}

PureProfile Game::ProfileFromLabels(
    const std::vector<std::string>& labels) const {
  if (static_cast<int>(labels.size()) != NumPlayers()) {
    throw ValidationError("profile needs one label per player");
  }
  std::vector<int> indices;
  indices.reserve(labels.size());
  for (int p = 0; p < NumPlayers(); ++p) {
    indices.push_back(StrategyIndex(p, labels[p]));
  }
  return PureProfile(std::move(indices));
}

std::size_t Game::ProfileIndex(const PureProfile& profile) const {
  std::size_t index = 0;
  for (std::size_t p = 0; p < strides_.size(); ++p) {
    index += strides_[p] * static_cast<std::size_t>(profile[p]);
  }
  return index;
}

PureProfile Game::ProfileAt(std::size_t index) const {
  std::vector<int> indices(strides_.size());
  for (std::size_t p = 0; p < strides_.size(); ++p) {
    indices[p] = static_cast<int>(index / strides_[p]);
    index %= strides_[p];
  }
  return PureProfile(std::move(indices));
}

void Game::ValidatePlayer(int player) const {
  if (player < 0 || player >= NumPlayers()) {
    throw ValidationError("player index " + std::to_string(player) +
                          " out of range [0, " + std::to_string(NumPlayers()) +
                          ")");
  }
}

void Game::ValidateProfile(const PureProfile& profile) const {
  if (static_cast<int>(profile.size()) != NumPlayers()) {
    throw ValidationError("profile has " + std::to_string(profile.size()) +
                          " entries for a " + std::to_string(NumPlayers()) +
                          "-player game");
  }
  for (int p = 0; p < NumPlayers(); ++p) {
    if (profile[p] < 0 || profile[p] >= NumStrategies(p)) {
      throw ValidationError("strategy index " + std::to_string(profile[p]) +
                            " out of range for player " + std::to_string(p));
    }
  }
}

void Game::ValidateMixed(const MixedProfile& profile) const {
  if (static_cast<int>(profile.size()) != NumPlayers()) {
    throw ValidationError("mixed profile has " +
                          std::to_string(profile.size()) +
                          " distributions for a " +
                          std::to_string(NumPlayers()) + "-player game");
  }
  for (int p = 0; p < NumPlayers(); ++p) {
    const Distribution& d = profile[p];
    if (static_cast<int>(d.size()) != NumStrategies(p)) {
      throw ValidationError("distribution of player " + std::to_string(p) +
                            " has wrong length");
    }
    Rational total;
    for (const Rational& x : d) {
      if (x.Sign() < 0) {
        throw ValidationError("negative probability for player " +
                              std::to_string(p));
      }
      total += x;
    }
    if (total != Rational(1)) {
      throw ValidationError("distribution of player " + std::to_string(p) +
                            " sums to " + total.ToString());
    }
  }
}

MixedProfile MixedProfile::Degenerate(const Game& game,
                                      const PureProfile& profile) {
  game.ValidateProfile(profile);
  std::vector<Distribution> dists;
  for (int p = 0; p < game.NumPlayers(); ++p) {
    Distribution d(game.NumStrategies(p));
    d[profile[p]] = 1;
    dists.push_back(std::move(d));
  }
  return MixedProfile(std::move(dists));
}

std::vector<Rational> Payoff(const Game& game, const PureProfile& profile) {
  game.ValidateProfile(profile);
  const std::size_t cell = game.ProfileIndex(profile);
  std::vector<Rational> out;
  out.reserve(game.NumPlayers());
  for (int p = 0; p < game.NumPlayers(); ++p) {
    out.push_back(game.PayoffAt(cell, p));
  }
  return out;
}

Rational ExpectedPayoff(const Game& game, const MixedProfile& profile,
                        int player) {
  game.ValidatePlayer(player);
  game.ValidateMixed(profile);
  Rational total;
  std::size_t cell = 0;
  for (const PureProfile& pure : EnumerateProfiles(game)) {
    Rational weight(1);
    for (int p = 0; p < game.NumPlayers() && weight.Sign() != 0; ++p) {
      weight *= profile[p][pure[p]];
    }
    if (weight.Sign() != 0) total += weight * game.PayoffAt(cell, player);
    ++cell;
  }
  return total;
}

ProfileRange::Iterator::Iterator(const Game* game, bool end) : game_(game) {
  if (end) {
    position_ = game->NumProfiles();
  } else {
    current_ = PureProfile(std::vector<int>(game->NumPlayers(), 0));
  }
}

ProfileRange::Iterator& ProfileRange::Iterator::operator++() {
  ++position_;
  for (int p = game_->NumPlayers() - 1; p >= 0; --p) {
    if (++current_[p] < game_->NumStrategies(p)) break;
    current_[p] = 0;
  }
  return *this;
}

std::string ProfileToString(const Game& game, const PureProfile& profile) {
  std::string out = "(";
  for (std::size_t p = 0; p < profile.size(); ++p) {
    if (p > 0) out += ",";
    out += game.StrategyLabel(static_cast<int>(p), profile[p]);
  }
  return out + ")";
}

std::string VectorToString(std::span<const Rational> values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ",";
    out += values[i].ToString();
  }
  return out + ")";
}

}  // namespace optimin

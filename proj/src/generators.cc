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

#include "optimin/generators.h"

#include <charconv>

#include "optimin/errors.h"

namespace optimin {
namespace {

Game TwoPlayer(std::string title, std::vector<std::string> rows,
               std::vector<std::string> cols,
               const std::vector<std::pair<int, int>>& cells) {
  std::vector<Rational> flat;
  flat.reserve(cells.size() * 2);
  for (const auto& [a, b] : cells) {
    flat.emplace_back(a);
    flat.emplace_back(b);
  }
  return Game(std::move(title), {"Player 1", "Player 2"},
              {std::move(rows), std::move(cols)}, std::move(flat));
}

Action TitForTatRule(int, int, std::span<const Action> opponent) {
  return opponent.empty() ? Action::kCooperate : opponent.back();
}

}  // namespace

Game Figure1Game() {
  return TwoPlayer("Illustrative game", {"Top", "Middle", "Bottom"},
                   {"Left", "Center", "Right"},
                   {{100, 100}, {100, 105}, {0, 0},
                    {105, 100}, {95, 95}, {0, 210},
                    {0, 0}, {210, 0}, {5, 5}});
}

Game PrisonersDilemmaStage() {
  return TwoPlayer("Prisoner's dilemma", {"Cooperate", "Defect"},
                   {"Cooperate", "Defect"},
                   {{3, 3}, {0, 5}, {5, 0}, {1, 1}});
}

Game MatchingPennies() {
  return TwoPlayer("Matching pennies", {"Heads", "Tails"}, {"Heads", "Tails"},
                   {{1, -1}, {-1, 1}, {-1, 1}, {1, -1}});
}

Game BattleOfTheSexes() {
  return TwoPlayer("Battle of the sexes", {"A", "B"}, {"A", "B"},
                   {{2, 1}, {0, 0}, {0, 0}, {1, 2}});
}

void TravelerConfig::Validate() const {
  if (low >= high) {
    throw ValidationError("traveler: low (" + std::to_string(low) +
                          ") must be below high (" + std::to_string(high) +
                          ")");
  }
  if (reward <= Rational(1)) {
    throw ValidationError("traveler: reward must exceed 1, got " +
                          reward.ToString());
  }
}

Game TravelersDilemma(const TravelerConfig& config) {
  config.Validate();
  std::vector<std::string> labels;
  std::vector<int> claims;
  for (int n = config.high; n >= config.low; --n) {
    labels.push_back(std::to_string(n));
    claims.push_back(n);
  }
  std::vector<Rational> flat;
  flat.reserve(claims.size() * claims.size() * 2);
  for (int a : claims) {
    for (int b : claims) {
      if (a == b) {
        flat.emplace_back(a);
        flat.emplace_back(a);
      } else if (a < b) {
        flat.push_back(Rational(a) + config.reward);
        flat.push_back(Rational(a) - config.reward);
      } else {
        flat.push_back(Rational(b) - config.reward);
        flat.push_back(Rational(b) + config.reward);
      }
    }
  }
  return Game("Traveler's dilemma (r=" + config.reward.ToString() + ")",
              {"Player 1", "Player 2"}, {labels, labels}, std::move(flat));
}

RepeatedStrategy AlwaysCooperate() {
  return {"AllC", [](int, int, auto) { return Action::kCooperate; }};
}

RepeatedStrategy AlwaysDefect() {
  return {"AllD", [](int, int, auto) { return Action::kDefect; }};
}

RepeatedStrategy TitForTat() { return {"TFT", TitForTatRule}; }

RepeatedStrategy GrimTrigger() {
  return {"Grim", [](int, int, std::span<const Action> opponent) {
            for (Action a : opponent) {
              if (a == Action::kDefect) return Action::kDefect;
            }
            return Action::kCooperate;
          }};
}

RepeatedStrategy EndDefector(int k) {
  if (k < 0) throw ValidationError("EndDefector needs k >= 0");
  return {"EndDefector(" + std::to_string(k) + ")",
          [k](int round, int horizon, std::span<const Action> opponent) {
            if (round > horizon - k) return Action::kDefect;
            return TitForTatRule(round, horizon, opponent);
          }};
}

RepeatedStrategy StrategyByName(std::string_view name) {
  if (name == "AllC") return AlwaysCooperate();
  if (name == "AllD") return AlwaysDefect();
  if (name == "TFT" || name == "TitForTat") return TitForTat();
  if (name == "Grim" || name == "GrimTrigger") return GrimTrigger();
  for (std::string_view prefix : {"EndDefector(", "ED("}) {
    if (name.starts_with(prefix) && name.ends_with(")")) {
      const std::string_view digits =
          name.substr(prefix.size(), name.size() - prefix.size() - 1);
      int k = 0;
      const auto [ptr, ec] =
          std::from_chars(digits.data(), digits.data() + digits.size(), k);
      if (ec == std::errc() && ptr == digits.data() + digits.size() &&
          !digits.empty()) {
        return EndDefector(k);
      }
    }
  }
  throw ValidationError("unknown repeated-game strategy \"" +
                        std::string(name) + "\"");
}

std::vector<RepeatedStrategy> ParseStrategyList(std::string_view list) {
  std::vector<RepeatedStrategy> out;
  while (!list.empty()) {
    const auto comma = list.find(',');
    std::string_view item = list.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    out.push_back(StrategyByName(item));
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  return out;
}

std::vector<RepeatedStrategy> DefaultMetaStrategies() {
  return {AlwaysCooperate(), AlwaysDefect(), TitForTat(), GrimTrigger(),
          EndDefector(1)};
}

std::pair<Rational, Rational> SimulateRepeated(const Game& stage,
                                               const RepeatedStrategy& first,
                                               const RepeatedStrategy& second,
                                               int rounds) {
  if (stage.NumPlayers() != 2 || stage.NumStrategies(0) != 2 ||
      stage.NumStrategies(1) != 2) {
    throw ValidationError("repeated play needs a 2-player 2x2 stage game");
  }
  if (rounds < 1) throw ValidationError("rounds must be at least 1");
  std::vector<Action> history_first;
  std::vector<Action> history_second;
  history_first.reserve(rounds);
  history_second.reserve(rounds);
  Rational total_first;
  Rational total_second;
  for (int t = 1; t <= rounds; ++t) {
    const Action a = first.rule(t, rounds, history_second);
    const Action b = second.rule(t, rounds, history_first);
    const std::size_t cell =
        stage.ProfileIndex({static_cast<int>(a), static_cast<int>(b)});
    total_first += stage.PayoffAt(cell, 0);
    total_second += stage.PayoffAt(cell, 1);
    history_first.push_back(a);
    history_second.push_back(b);
  }
  return {total_first, total_second};
}

Game RepeatedMetaGame(const Game& stage,
                      std::span<const RepeatedStrategy> strategies,
                      int rounds) {
  if (strategies.size() < 2) {
    throw ValidationError("a meta-game needs at least two strategies");
  }
  std::vector<std::string> labels;
  for (const auto& s : strategies) labels.push_back(s.name);
  std::vector<Rational> flat;
  flat.reserve(strategies.size() * strategies.size() * 2);
  for (const auto& row : strategies) {
    for (const auto& col : strategies) {
      auto [a, b] = SimulateRepeated(stage, row, col, rounds);
      flat.push_back(std::move(a));
      flat.push_back(std::move(b));
    }
  }
  return Game("Repeated " + stage.title() + " (T=" + std::to_string(rounds) +
                  ")",
              stage.player_names(), {labels, labels}, std::move(flat));
}

}  // namespace optimin

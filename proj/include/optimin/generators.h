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

#ifndef OPTIMIN_GENERATORS_H_
#define OPTIMIN_GENERATORS_H_

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "optimin/game.h"
#include "optimin/rational.h"

namespace optimin {

// 3x3 illustrative game: Top/Middle/Bottom vs Left/Center/Right.
Game Figure1Game();

// One-shot prisoner's dilemma, strategies Cooperate/Defect (index 0/1).
Game PrisonersDilemmaStage();

// Matching pennies (+1/-1) and battle of the sexes ((2,1) on A/A, (1,2) on
// B/B, zero elsewhere); small fixtures for the mixed analyses.
Game MatchingPennies();
Game BattleOfTheSexes();

struct TravelerConfig {
  int low = 2;
  int high = 100;
  Rational reward = 2;

  // Throws ValidationError unless low < high and reward > 1.
  void Validate() const;
};

// Traveler's dilemma. Strategy labels are the claims listed from `high`
// down to `low`. The lower claim n earns n + reward, the other n - reward;
// equal claims earn n each.
Game TravelersDilemma(const TravelerConfig& config);

enum class Action { kCooperate = 0, kDefect = 1 };

// Deterministic repeated-game strategy. The rule sees the 1-based round,
// the horizon T and the opponent's actions so far.
struct RepeatedStrategy {
  using Rule = std::function<Action(int round, int horizon,
                                    std::span<const Action> opponent)>;
  std::string name;
  Rule rule;
};

RepeatedStrategy AlwaysCooperate();
RepeatedStrategy AlwaysDefect();
RepeatedStrategy TitForTat();
RepeatedStrategy GrimTrigger();
// Tit-for-Tat that defects in the last k rounds (rounds T-k+1..T).
RepeatedStrategy EndDefector(int k);

// Resolves "AllC", "AllD", "TFT" (or "TitForTat"), "Grim" (or
// "GrimTrigger") and "EndDefector(k)" (or "ED(k)"). Throws ValidationError.
RepeatedStrategy StrategyByName(std::string_view name);
// Comma-separated list of names.
std::vector<RepeatedStrategy> ParseStrategyList(std::string_view list);
// AllC, AllD, TFT, Grim, EndDefector(1).
std::vector<RepeatedStrategy> DefaultMetaStrategies();

// Undiscounted totals of T rounds of the 2x2 stage game. Throws
// ValidationError if the stage is not 2-player 2x2 or rounds < 1.
std::pair<Rational, Rational> SimulateRepeated(const Game& stage,
                                               const RepeatedStrategy& first,
                                               const RepeatedStrategy& second,
                                               int rounds);

// Normal-form game over the given strategies with SimulateRepeated totals.
Game RepeatedMetaGame(const Game& stage,
                      std::span<const RepeatedStrategy> strategies,
                      int rounds);

}  // namespace optimin

#endif  // OPTIMIN_GENERATORS_H_

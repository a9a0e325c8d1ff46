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

#ifndef OPTIMIN_SOLVERS_H_
#define OPTIMIN_SOLVERS_H_

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "optimin/deviation.h"
#include "optimin/game.h"
#include "optimin/mixed2p.h"
#include "optimin/rational.h"

namespace optimin {

// kSimultaneous: every player's guarantee attains that player's maximum over
// all profiles (may be empty). kPareto: guarantee vector is Pareto-optimal
// (never empty).
enum class OptiminMode { kPareto, kSimultaneous };

std::string_view ModeName(OptiminMode mode);
// "pareto" or "simultaneous"; throws ValidationError otherwise.
OptiminMode ParseMode(std::string_view name);

// a >= b componentwise with at least one strict inequality.
bool ParetoDominates(std::span<const Rational> a, std::span<const Rational> b);

// Optimin profiles sorted by profile index.
std::vector<GuaranteeVector> OptiminPure(const Game& game, OptiminMode mode,
                                         int jobs = 1);
// Same, from a precomputed GuaranteeTable.
std::vector<GuaranteeVector> SelectOptimin(
    std::span<const GuaranteeVector> table, OptiminMode mode);

// Profiles where no player has a strictly improving pure deviation, sorted
// by profile index.
std::vector<PureProfile> PureNash(const Game& game);

struct MaximinResult {
  Rational value;
  std::vector<int> strategies;  // all maximisers, ascending
};
MaximinResult MaximinPure(const Game& game, int player);

struct SuperNashVerdict {
  PureProfile nash;
  std::vector<Rational> nash_payoffs;
  // Optimin whose guarantees weakly exceed nash_payoffs; one that is strict
  // for every player is preferred, otherwise the first by profile index.
  std::optional<GuaranteeVector> witness;
  bool componentwise_ok = false;
  bool strict_for_all = false;
};

// A pure Nash whose payoff vector Pareto-dominates an optimin's payoffs.
struct ParetoViolation {
  PureProfile nash;
  PureProfile optimin;
};

struct SuperNashCheck {
  std::vector<SuperNashVerdict> verdicts;
  std::vector<ParetoViolation> pareto_violations;
  bool vacuous = false;  // the game has no pure Nash equilibrium

  bool HasViolation() const;
};

// Analyses produced by `solve` and `check`. Sections that were not
// requested stay empty.
struct SolveReport {
  OptiminMode mode = OptiminMode::kPareto;
  std::optional<std::vector<GuaranteeVector>> optimin;
  std::optional<std::vector<PureProfile>> nash;
  std::optional<std::vector<MaximinResult>> maximin;
  std::optional<std::vector<GuaranteeVector>> guarantees;
  std::optional<SuperNashCheck> super_nash;
  std::optional<MixedCheck> mixed;

  bool HasViolation() const;
};

// Pure super-Nash check for every pure Nash equilibrium; fills optimin, nash,
// maximin and super_nash.
SolveReport CheckSuperNash(const Game& game, OptiminMode mode, int jobs = 1);

// Checker core on precomputed pieces.
SuperNashCheck CheckSuperNashWith(const Game& game,
                                  std::span<const GuaranteeVector> optimin,
                                  std::span<const PureProfile> nash);

}  // namespace optimin

#endif  // OPTIMIN_SOLVERS_H_

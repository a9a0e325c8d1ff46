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

#include "optimin/solvers.h"

#include <algorithm>
#include <numeric>

#include "optimin/errors.h"

namespace optimin {
namespace {

bool WeaklyAbove(std::span<const Rational> a, std::span<const Rational> b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] < b[k]) return false;
  }
  return true;
}

bool StrictlyAbove(std::span<const Rational> a, std::span<const Rational> b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!(a[k] > b[k])) return false;
  }
  return true;
}

// Pareto frontier of the table. Vectors are visited in lexicographically
// descending order: anything that dominates v sorts before v, and by
// transitivity some frontier member then dominates v too, so each vector is
// only compared against the frontier found so far.
std::vector<GuaranteeVector> ParetoFront(
    std::span<const GuaranteeVector> table) {
  std::vector<std::size_t> order(table.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a,
                                                   std::size_t b) {
    return std::lexicographical_compare(
        table[b].values.begin(), table[b].values.end(),
        table[a].values.begin(), table[a].values.end());
  });
  std::vector<std::size_t> front;
  for (std::size_t idx : order) {
    const auto& v = table[idx].values;
    const bool dominated =
        std::any_of(front.begin(), front.end(), [&](std::size_t f) {
          return ParetoDominates(table[f].values, v);
        });
    if (!dominated) front.push_back(idx);
  }
  std::sort(front.begin(), front.end());
  std::vector<GuaranteeVector> out;
  out.reserve(front.size());
  for (std::size_t idx : front) out.push_back(table[idx]);
  return out;
}

std::vector<GuaranteeVector> SimultaneousArgmax(
    std::span<const GuaranteeVector> table) {
  if (table.empty()) return {};
  std::vector<Rational> best = table.front().values;
  for (const auto& row : table) {
    for (std::size_t k = 0; k < best.size(); ++k) {
      if (row.values[k] > best[k]) best[k] = row.values[k];
    }
  }
  std::vector<GuaranteeVector> out;
  for (const auto& row : table) {
    if (row.values == best) out.push_back(row);
  }
  return out;
}

}  // namespace

std::string_view ModeName(OptiminMode mode) {
  return mode == OptiminMode::kPareto ? "pareto" : "simultaneous";
}

OptiminMode ParseMode(std::string_view name) {
  if (name == "pareto") return OptiminMode::kPareto;
  if (name == "simultaneous") return OptiminMode::kSimultaneous;
  throw ValidationError("unknown optimin mode \"" + std::string(name) + "\"");
}

bool ParetoDominates(std::span<const Rational> a,
                     std::span<const Rational> b) {
  bool strict = false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] < b[k]) return false;
    if (a[k] > b[k]) strict = true;
  }
  return strict;
}

std::vector<GuaranteeVector> SelectOptimin(
    std::span<const GuaranteeVector> table, OptiminMode mode) {
  return mode == OptiminMode::kPareto ? ParetoFront(table)
                                      : SimultaneousArgmax(table);
}

std::vector<GuaranteeVector> OptiminPure(const Game& game, OptiminMode mode,
                                         int jobs) {
  const auto table = GuaranteeTable(game, jobs);
  return SelectOptimin(table, mode);
}

std::vector<PureProfile> PureNash(const Game& game) {
  std::vector<PureProfile> out;
  std::size_t cell = 0;
  for (const PureProfile& profile : EnumerateProfiles(game)) {
    bool stable = true;
    for (int p = 0; p < game.NumPlayers() && stable; ++p) {
      const auto stride = static_cast<std::ptrdiff_t>(game.Stride(p));
      const Rational& current = game.PayoffAt(cell, p);
      for (int m = 0; m < game.NumStrategies(p); ++m) {
        const std::ptrdiff_t off = (m - profile[p]) * stride;
        if (game.PayoffAt(cell + off, p) > current) {
          stable = false;
          break;
        }
      }
    }
    if (stable) out.push_back(profile);
    ++cell;
  }
  return out;
}

MaximinResult MaximinPure(const Game& game, int player) {
  game.ValidatePlayer(player);
  // Row minima over all opponent joint strategies, indexed by own strategy.
  std::vector<std::optional<Rational>> worst(game.NumStrategies(player));
  std::size_t cell = 0;
  for (const PureProfile& profile : EnumerateProfiles(game)) {
    auto& w = worst[profile[player]];
    const Rational& v = game.PayoffAt(cell, player);
    if (!w || v < *w) w = v;
    ++cell;
  }
  MaximinResult out{*worst[0], {}};
  for (const auto& w : worst) {
    if (*w > out.value) out.value = *w;
  }
  for (int s = 0; s < game.NumStrategies(player); ++s) {
    if (*worst[s] == out.value) out.strategies.push_back(s);
  }
  return out;
}

bool SuperNashCheck::HasViolation() const {
  if (!pareto_violations.empty()) return true;
  return std::any_of(verdicts.begin(), verdicts.end(),
                     [](const auto& v) { return !v.componentwise_ok; });
}

bool SolveReport::HasViolation() const {
  return (super_nash && super_nash->HasViolation()) ||
         (mixed && mixed->HasViolation());
}

SuperNashCheck CheckSuperNashWith(const Game& game,
                                  std::span<const GuaranteeVector> optimin,
                                  std::span<const PureProfile> nash) {
  SuperNashCheck check;
  check.vacuous = nash.empty();
  for (const PureProfile& q : nash) {
    SuperNashVerdict verdict{q, Payoff(game, q), std::nullopt, false, false};
    for (const auto& candidate : optimin) {
      if (!WeaklyAbove(candidate.values, verdict.nash_payoffs)) continue;
      const bool strict = StrictlyAbove(candidate.values, verdict.nash_payoffs);
      if (!verdict.witness || (strict && !verdict.strict_for_all)) {
        verdict.witness = candidate;
        verdict.strict_for_all = strict;
      }
      if (strict) break;
    }
    verdict.componentwise_ok = verdict.witness.has_value();
    check.verdicts.push_back(std::move(verdict));
  }
  for (const auto& verdict : check.verdicts) {
    for (const auto& p : optimin) {
      if (ParetoDominates(verdict.nash_payoffs, Payoff(game, p.profile))) {
        check.pareto_violations.push_back({verdict.nash, p.profile});
      }
    }
  }
  return check;
}

SolveReport CheckSuperNash(const Game& game, OptiminMode mode, int jobs) {
  SolveReport report;
  report.mode = mode;
  const auto table = GuaranteeTable(game, jobs);
  report.optimin = SelectOptimin(table, mode);
  report.nash = PureNash(game);
  std::vector<MaximinResult> maximin;
  for (int p = 0; p < game.NumPlayers(); ++p) {
    maximin.push_back(MaximinPure(game, p));
  }
  report.maximin = std::move(maximin);
  report.super_nash = CheckSuperNashWith(game, *report.optimin, *report.nash);
  return report;
}

}  // namespace optimin

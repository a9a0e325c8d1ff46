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

#include "optimin/mixed2p.h"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "optimin/errors.h"
#include "optimin/lp.h"

namespace optimin {
namespace {

using Matrix = std::vector<std::vector<Rational>>;

void RequireTwoPlayers(const Game& game, const char* what) {
  if (game.NumPlayers() != 2) {
    throw UnsupportedError(std::string(what) + " needs a 2-player game, got " +
                           std::to_string(game.NumPlayers()) + " players");
  }
}

// payoff matrix of `player`, rows = player 0's strategies.
Matrix PayoffMatrix(const Game& game, int player) {
  Matrix m(game.NumStrategies(0), std::vector<Rational>(game.NumStrategies(1)));
  for (int r = 0; r < game.NumStrategies(0); ++r) {
    for (int c = 0; c < game.NumStrategies(1); ++c) {
      m[r][c] = game.PayoffAt(game.ProfileIndex({r, c}), player);
    }
  }
  return m;
}

std::vector<int> Members(std::uint32_t mask) {
  std::vector<int> out;
  for (int k = 0; mask != 0; ++k, mask >>= 1) {
    if (mask & 1u) out.push_back(k);
  }
  return out;
}

// Supports ordered by size, then by bit pattern.
std::vector<std::uint32_t> SupportsBySize(int count) {
  std::vector<std::uint32_t> masks;
  for (std::uint32_t m = 1; m < (1u << count); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(), [](auto a, auto b) {
    return std::popcount(a) < std::popcount(b);
  });
  return masks;
}

// Opponent mix over `cols` that makes the owner of `payoff` indifferent
// across `rows`. Unknowns: the |cols| weights then the common value.
// `transpose` selects payoff[col][row] indexing for the column player.
SystemSolution IndifferenceSystem(const Matrix& payoff, bool transpose,
                                  const std::vector<int>& rows,
                                  const std::vector<int>& cols) {
  const std::size_t k = cols.size();
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  for (int r : rows) {
    std::vector<Rational> eq(k + 1);
    for (std::size_t c = 0; c < k; ++c) {
      eq[c] = transpose ? payoff[cols[c]][r] : payoff[r][cols[c]];
    }
    eq[k] = -1;
    a.push_back(std::move(eq));
    b.emplace_back(0);
  }
  std::vector<Rational> total(k + 1, Rational(1));
  total[k] = 0;
  a.push_back(std::move(total));
  b.emplace_back(1);
  return SolveLinearSystem(std::move(a), std::move(b));
}

// Expands support weights to a full distribution; false unless all weights
// are strictly positive.
bool Expand(const SystemSolution& s, const std::vector<int>& support, int size,
            Distribution& out) {
  out.assign(size, Rational());
  for (std::size_t c = 0; c < support.size(); ++c) {
    if (s.x[c].Sign() <= 0) return false;
    out[support[c]] = s.x[c];
  }
  return true;
}

// No pure strategy of the row owner beats `value` against `mix`.
bool IsBestResponseValue(const Matrix& payoff, bool transpose,
                         const Distribution& mix, const Rational& value,
                         int own_count) {
  for (int r = 0; r < own_count; ++r) {
    Rational u;
    for (std::size_t c = 0; c < mix.size(); ++c) {
      if (mix[c].Sign() == 0) continue;
      u += mix[c] * (transpose ? payoff[c][r] : payoff[r][c]);
    }
    if (u > value) return false;
  }
  return true;
}

// u_k(q_player, m) for every pure strategy m of the opponent.
std::vector<Rational> PayoffsAgainstMix(const Game& game, int player,
                                        const Distribution& mix, int k) {
  const int opponent = 1 - player;
  std::vector<Rational> out(game.NumStrategies(opponent));
  for (int m = 0; m < game.NumStrategies(opponent); ++m) {
    for (int s = 0; s < game.NumStrategies(player); ++s) {
      if (mix[s].Sign() == 0) continue;
      PureProfile p(std::vector<int>(2));
      p[player] = s;
      p[opponent] = m;
      out[m] += mix[s] * game.PayoffAt(game.ProfileIndex(p), k);
    }
  }
  return out;
}

Rational Dot(const Distribution& p, const std::vector<Rational>& v) {
  Rational total;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k].Sign() != 0) total += p[k] * v[k];
  }
  return total;
}

}  // namespace

SupportEnumerationResult SupportEnumerationNash(const Game& game,
                                                int support_cap) {
  RequireTwoPlayers(game, "support enumeration");
  const int rows = game.NumStrategies(0);
  const int cols = game.NumStrategies(1);
  if (rows > support_cap || cols > support_cap) {
    throw UnsupportedError("support enumeration is capped at " +
                           std::to_string(support_cap) +
                           " strategies per player");
  }
  const Matrix a = PayoffMatrix(game, 0);
  const Matrix b = PayoffMatrix(game, 1);

  SupportEnumerationResult result;
  for (std::uint32_t row_mask : SupportsBySize(rows)) {
    const auto row_support = Members(row_mask);
    for (std::uint32_t col_mask : SupportsBySize(cols)) {
      const auto col_support = Members(col_mask);
      // Column mix keeps the row player indifferent on the row support and
      // vice versa.
      const auto col_sys = IndifferenceSystem(a, false, row_support, col_support);
      const auto row_sys = IndifferenceSystem(b, true, col_support, row_support);
      if (col_sys.status == SystemStatus::kInconsistent ||
          row_sys.status == SystemStatus::kInconsistent) {
        continue;
      }
      if (col_sys.status != SystemStatus::kUnique ||
          row_sys.status != SystemStatus::kUnique) {
        // A consistent underdetermined side with a valid counterpart means a
        // continuum may pass through these supports.
        bool plausible = true;
        if (col_sys.status == SystemStatus::kUnique) {
          Distribution y;
          plausible = Expand(col_sys, col_support, cols, y) &&
                      IsBestResponseValue(a, false, y, col_sys.x.back(), rows);
        } else if (row_sys.status == SystemStatus::kUnique) {
          Distribution x;
          plausible = Expand(row_sys, row_support, rows, x) &&
                      IsBestResponseValue(b, true, x, row_sys.x.back(), cols);
        }
        if (plausible) result.degenerate = true;
        continue;
      }
      Distribution x;
      Distribution y;
      if (!Expand(row_sys, row_support, rows, x) ||
          !Expand(col_sys, col_support, cols, y)) {
        continue;
      }
      if (!IsBestResponseValue(a, false, y, col_sys.x.back(), rows) ||
          !IsBestResponseValue(b, true, x, row_sys.x.back(), cols)) {
        continue;
      }
      result.equilibria.emplace_back(
          std::vector<Distribution>{std::move(x), std::move(y)});
    }
  }
  return result;
}

Rational MixedGuarantee2p(const Game& game, const MixedProfile& profile,
                          int player) {
  RequireTwoPlayers(game, "mixed guarantee");
  game.ValidatePlayer(player);
  game.ValidateMixed(profile);
  const int opponent = 1 - player;
  const auto own = PayoffsAgainstMix(game, player, profile[player], player);
  const auto theirs =
      PayoffsAgainstMix(game, player, profile[player], opponent);
  const Rational current = Dot(profile[opponent], theirs);
  const Rational best = *std::max_element(theirs.begin(), theirs.end());
  if (best <= current) return Dot(profile[opponent], own);

  LinearProgram lp;
  lp.objective = own;
  lp.rows = {theirs, std::vector<Rational>(theirs.size(), Rational(1))};
  lp.senses = {ConstraintSense::kGreaterEqual, ConstraintSense::kEqual};
  lp.rhs = {current, Rational(1)};
  const LpResult r = SimplexSolve(lp);
  // q_opponent itself is feasible and the simplex is bounded.
  return r.optimum;
}

bool MixedCheck::HasViolation() const {
  return std::any_of(verdicts.begin(), verdicts.end(), [](const auto& v) {
    return !v.guarantee_equals_payoff;
  });
}

MixedCheck CheckMixedEquilibria(const Game& game,
                                std::span<const GuaranteeVector> optimin,
                                int support_cap) {
  const auto found = SupportEnumerationNash(game, support_cap);
  MixedCheck check;
  check.degenerate = found.degenerate;
  for (const MixedProfile& r : found.equilibria) {
    MixedVerdict v;
    v.equilibrium = r;
    for (int p = 0; p < 2; ++p) {
      v.payoffs.push_back(ExpectedPayoff(game, r, p));
      v.guarantees.push_back(MixedGuarantee2p(game, r, p));
    }
    v.guarantee_equals_payoff = v.guarantees == v.payoffs;
    for (const auto& candidate : optimin) {
      const bool weak = candidate.values[0] >= v.payoffs[0] &&
                        candidate.values[1] >= v.payoffs[1];
      if (!weak) continue;
      const bool strict = candidate.values[0] > v.payoffs[0] &&
                          candidate.values[1] > v.payoffs[1];
      if (!v.pure_witness || (strict && !v.strict_for_all)) {
        v.pure_witness = candidate;
        v.strict_for_all = strict;
      }
      if (strict) break;
    }
    check.verdicts.push_back(std::move(v));
  }
  return check;
}

}  // namespace optimin

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

#ifndef OPTIMIN_MIXED2P_H_
#define OPTIMIN_MIXED2P_H_

#include <optional>
#include <span>
#include <vector>

#include "optimin/deviation.h"
#include "optimin/game.h"
#include "optimin/rational.h"

namespace optimin {

inline constexpr int kDefaultSupportCap = 6;

struct SupportEnumerationResult {
  // Distinct equilibria, ordered by (support of player 0, support of
  // player 1) in enumeration order.
  std::vector<MixedProfile> equilibria;
  // Some support pair admitted a continuum of solutions; equilibria from
  // such components are not listed.
  bool degenerate = false;
};

// All Nash equilibria of a 2-player game reachable by exact support
// enumeration. Throws UnsupportedError unless the game has exactly 2 players
// with at most `support_cap` strategies each.
SupportEnumerationResult SupportEnumerationNash(
    const Game& game, int support_cap = kDefaultSupportCap);

// inf over the opponent's mixed deviation set B_j(q) of u_player(q_player, .).
// If the opponent has no profitable mixed deviation the value is u_player(q);
// otherwise it is the minimum over the closed polytope
// { p in Delta(X_j) : u_j(p, q_player) >= u_j(q) }.
// Throws UnsupportedError unless the game has 2 players.
Rational MixedGuarantee2p(const Game& game, const MixedProfile& profile,
                          int player);

// Super-Nash check at one mixed equilibrium.
struct MixedVerdict {
  MixedProfile equilibrium;
  std::vector<Rational> payoffs;     // u(r)
  std::vector<Rational> guarantees;  // MixedGuarantee2p at r
  bool guarantee_equals_payoff = false;
  // First listed pure optimin whose guarantees weakly exceed u(r), if any.
  std::optional<GuaranteeVector> pure_witness;
  bool strict_for_all = false;  // witness exists and beats u(r) everywhere
};

struct MixedCheck {
  std::vector<MixedVerdict> verdicts;
  bool degenerate = false;

  // A mixed equilibrium whose guarantee differs from its payoff would
  // contradict the equilibrium step of the super-Nash argument.
  bool HasViolation() const;
};

MixedCheck CheckMixedEquilibria(const Game& game,
                                std::span<const GuaranteeVector> optimin,
                                int support_cap = kDefaultSupportCap);

}  // namespace optimin

#endif  // OPTIMIN_MIXED2P_H_

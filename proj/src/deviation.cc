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

#include "optimin/deviation.h"

#include <algorithm>
#include <cstddef>

#include "optimin/errors.h"
#include "optimin/parallel.h"

namespace optimin {
namespace {

using Offsets = std::vector<std::ptrdiff_t>;

// Cell offsets (relative to `cell`) of the player's deviation set, current
// strategy first, then profitable alternatives in ascending order.
Offsets DeviationOffsets(const Game& game, std::size_t cell, int strategy,
                         int player) {
  const auto stride = static_cast<std::ptrdiff_t>(game.Stride(player));
  const Rational& current = game.PayoffAt(cell, player);
  Offsets out{0};
  for (int m = 0; m < game.NumStrategies(player); ++m) {
    if (m == strategy) continue;
    const std::ptrdiff_t off = (m - strategy) * stride;
    if (game.PayoffAt(cell + off, player) > current) out.push_back(off);
  }
  return out;
}

// min of u_player over cell + (any combination of one offset per other
// player).
const Rational& MinOverProduct(const Game& game, std::size_t cell, int player,
                               const std::vector<Offsets>& offsets,
                               std::vector<std::size_t>& cursor) {
  const int n = game.NumPlayers();
  cursor.assign(n, 0);
  const Rational* best = &game.PayoffAt(cell, player);
  if (n == 2) {
    for (std::ptrdiff_t off : offsets[1 - player]) {
      const Rational& v = game.PayoffAt(cell + off, player);
      if (v < *best) best = &v;
    }
    return *best;
  }
  while (true) {
    int p = n - 1;
    for (; p >= 0; --p) {
      if (p == player) continue;
      if (++cursor[p] < offsets[p].size()) break;
      cursor[p] = 0;
    }
    if (p < 0) break;
    std::ptrdiff_t off = 0;
    for (int q = 0; q < n; ++q) {
      if (q != player) off += offsets[q][cursor[q]];
    }
    const Rational& v = game.PayoffAt(cell + off, player);
    if (v < *best) best = &v;
  }
  return *best;
}

}  // namespace

bool DeviationSet::Contains(int strategy) const {
  return std::binary_search(members.begin(), members.end(), strategy);
}

DeviationSet ProfitableDeviations(const Game& game, const PureProfile& profile,
                                  int player) {
  game.ValidatePlayer(player);
  game.ValidateProfile(profile);
  const std::size_t cell = game.ProfileIndex(profile);
  const Rational& current = game.PayoffAt(cell, player);
  const auto stride = static_cast<std::ptrdiff_t>(game.Stride(player));
  DeviationSet out{player, {}};
  for (int m = 0; m < game.NumStrategies(player); ++m) {
    const std::ptrdiff_t off = (m - profile[player]) * stride;
    if (m == profile[player] ||
        game.PayoffAt(cell + off, player) > current) {
      out.members.push_back(m);
    }
  }
  return out;
}

DeviationProduct::DeviationProduct(const Game& game,
                                   const PureProfile& profile, int excluded)
    : base_(profile), excluded_(excluded) {
  game.ValidatePlayer(excluded);
  game.ValidateProfile(profile);
  for (int p = 0; p < game.NumPlayers(); ++p) {
    if (p == excluded) {
      sets_.push_back(DeviationSet{p, {profile[p]}});
    } else {
      DeviationSet s = ProfitableDeviations(game, profile, p);
      // Put the current strategy first so iteration starts at the profile.
      std::stable_partition(s.members.begin(), s.members.end(),
                            [&](int m) { return m == profile[p]; });
      sets_.push_back(std::move(s));
    }
  }
}

std::size_t DeviationProduct::size() const {
  std::size_t total = 1;
  for (const auto& s : sets_) total *= s.members.size();
  return total;
}

DeviationProduct::Iterator::Iterator(const DeviationProduct* owner, bool end)
    : owner_(owner), done_(end) {
  if (!end) {
    cursor_.assign(owner->sets_.size(), 0);
    current_ = owner->base_;
  }
}

DeviationProduct::Iterator& DeviationProduct::Iterator::operator++() {
  const auto& sets = owner_->sets_;
  for (int p = static_cast<int>(sets.size()) - 1; p >= 0; --p) {
    if (++cursor_[p] < sets[p].members.size()) {
      current_[p] = sets[p].members[cursor_[p]];
      return *this;
    }
    cursor_[p] = 0;
    current_[p] = sets[p].members[0];
  }
  done_ = true;
  return *this;
}

GuaranteeWitness GuaranteeWithWitness(const Game& game,
                                      const PureProfile& profile, int player) {
  const DeviationProduct product(game, profile, player);
  GuaranteeWitness best{game.PayoffAt(game.ProfileIndex(profile), player),
                        profile};
  for (const PureProfile& joint : product) {
    const Rational& v = game.PayoffAt(game.ProfileIndex(joint), player);
    if (v < best.value) best = {v, joint};
  }
  return best;
}

Rational Guarantee(const Game& game, const PureProfile& profile, int player) {
  return GuaranteeWithWitness(game, profile, player).value;
}

GuaranteeVector ComputeGuaranteeVector(const Game& game,
                                       const PureProfile& profile) {
  game.ValidateProfile(profile);
  const std::size_t cell = game.ProfileIndex(profile);
  const int n = game.NumPlayers();
  std::vector<Offsets> offsets;
  offsets.reserve(n);
  for (int p = 0; p < n; ++p) {
    offsets.push_back(DeviationOffsets(game, cell, profile[p], p));
  }
  GuaranteeVector out{profile, {}};
  out.values.reserve(n);
  std::vector<std::size_t> cursor;
  for (int i = 0; i < n; ++i) {
    out.values.push_back(MinOverProduct(game, cell, i, offsets, cursor));
  }
  return out;
}

std::vector<GuaranteeVector> GuaranteeTable(const Game& game, int jobs) {
  std::vector<GuaranteeVector> table(game.NumProfiles());
  ParallelFor(table.size(), jobs, [&](std::size_t cell) {
    table[cell] = ComputeGuaranteeVector(game, game.ProfileAt(cell));
  });
  return table;
}

}  // namespace optimin

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

#ifndef OPTIMIN_DEVIATION_H_
#define OPTIMIN_DEVIATION_H_

#include <cstddef>
#include <iterator>
#include <vector>

#include "optimin/game.h"
#include "optimin/rational.h"

namespace optimin {

// B_i(p) restricted to pure strategies: the player's current strategy plus
// every strategy that strictly raises their payoff against p_{-i}. Members
// are sorted ascending.
struct DeviationSet {
  int player = 0;
  std::vector<int> members;

  bool Contains(int strategy) const;
  friend bool operator==(const DeviationSet&, const DeviationSet&) = default;
};

// Per-player minimal payoffs at a profile.
struct GuaranteeVector {
  PureProfile profile;
  std::vector<Rational> values;

  friend bool operator==(const GuaranteeVector&,
                         const GuaranteeVector&) = default;
};

DeviationSet ProfitableDeviations(const Game& game, const PureProfile& profile,
                                  int player);

// Cartesian product of the deviation sets of every player other than
// `excluded`, all taken at the original profile. Iterates full profiles
// whose `excluded` entry stays at profile[excluded]; the first element is
// the profile itself. Order is row-major over the member lists.
class DeviationProduct {
 public:
  DeviationProduct(const Game& game, const PureProfile& profile, int excluded);

  class Iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = PureProfile;
    using difference_type = std::ptrdiff_t;
    using reference = const PureProfile&;
    using pointer = const PureProfile*;

    Iterator() = default;
    Iterator(const DeviationProduct* owner, bool end);
    const PureProfile& operator*() const { return current_; }
    const PureProfile* operator->() const { return &current_; }
    Iterator& operator++();
    friend bool operator==(const Iterator& a, const Iterator& b) {
      return a.done_ == b.done_ && (a.done_ || a.cursor_ == b.cursor_);
    }

   private:
    const DeviationProduct* owner_ = nullptr;
    std::vector<std::size_t> cursor_;
    PureProfile current_;
    bool done_ = true;
  };

  Iterator begin() const { return Iterator(this, false); }
  Iterator end() const { return Iterator(this, true); }
  // Number of joint strategies in the product.
  std::size_t size() const;
  const std::vector<DeviationSet>& sets() const { return sets_; }

 private:
  PureProfile base_;
  int excluded_;
  std::vector<DeviationSet> sets_;  // indexed by player; sets_[excluded] unused
};

// min over B_{-i}(p) of u_i(p_i, .). Since p_{-i} is in the product, the
// result never exceeds u_i(p).
Rational Guarantee(const Game& game, const PureProfile& profile, int player);

// Guarantee plus the first minimising joint profile in DeviationProduct
// order.
struct GuaranteeWitness {
  Rational value;
  PureProfile witness;
};
GuaranteeWitness GuaranteeWithWitness(const Game& game,
                                      const PureProfile& profile, int player);

GuaranteeVector ComputeGuaranteeVector(const Game& game,
                                       const PureProfile& profile);

// Guarantee vectors of every pure profile, in profile-index order. The scan
// is split across `jobs` workers; the result does not depend on `jobs`.
std::vector<GuaranteeVector> GuaranteeTable(const Game& game, int jobs = 1);

}  // namespace optimin

#endif  // OPTIMIN_DEVIATION_H_

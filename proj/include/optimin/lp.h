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

#ifndef OPTIMIN_LP_H_
#define OPTIMIN_LP_H_

#include <vector>

#include "optimin/rational.h"

namespace optimin {

enum class ConstraintSense { kGreaterEqual, kEqual, kLessEqual };

// minimize objective . x  subject to  rows[k] . x (sense[k]) rhs[k],  x >= 0.
struct LinearProgram {
  std::vector<Rational> objective;
  std::vector<std::vector<Rational>> rows;
  std::vector<ConstraintSense> senses;
  std::vector<Rational> rhs;

  int NumVariables() const { return static_cast<int>(objective.size()); }
  // Throws ValidationError on inconsistent dimensions.
  void Validate() const;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  Rational optimum;               // valid when kOptimal
  std::vector<Rational> witness;  // optimal basic feasible solution
};

// Exact two-phase primal simplex on a dense rational tableau. Bland's rule
// (lowest-index entering column, lowest-index leaving basic variable on
// ratio ties) guarantees termination.
LpResult SimplexSolve(const LinearProgram& lp);

// Solution of a square or rectangular linear system A x = b.
enum class SystemStatus { kUnique, kInconsistent, kUnderdetermined };
struct SystemSolution {
  SystemStatus status = SystemStatus::kInconsistent;
  std::vector<Rational> x;  // valid when kUnique
};
// Exact Gauss-Jordan elimination.
SystemSolution SolveLinearSystem(std::vector<std::vector<Rational>> a,
                                 std::vector<Rational> b);

}  // namespace optimin

#endif  // OPTIMIN_LP_H_

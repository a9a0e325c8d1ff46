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

#include "optimin/lp.h"

#include <cstddef>
#include <optional>

#include "optimin/errors.h"

namespace optimin {
namespace {

using Row = std::vector<Rational>;

class Tableau {
 public:
  Tableau(std::vector<Row> rows, std::vector<int> basis, int num_columns)
      : rows_(std::move(rows)),
        basis_(std::move(basis)),
        num_columns_(num_columns),
        allowed_(num_columns, true) {}

  void Forbid(int column) { allowed_[column] = false; }

  // Minimises cost . x from the current basic feasible solution.
  LpStatus Minimise(const std::vector<Rational>& cost) {
    BuildObjective(cost);
    while (true) {
      int entering = -1;
      for (int j = 0; j < num_columns_; ++j) {
        if (allowed_[j] && objective_[j].Sign() < 0) {
          entering = j;
          break;
        }
      }
      if (entering < 0) return LpStatus::kOptimal;
      std::optional<std::size_t> leaving;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational& a = rows_[i][entering];
        if (a.Sign() <= 0) continue;
        Rational ratio = rows_[i].back() / a;
        if (!leaving || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      if (!leaving) return LpStatus::kUnbounded;
      Pivot(*leaving, entering);
    }
  }

  // Value of the objective at the current basis.
  Rational ObjectiveValue() const { return -objective_.back(); }

  void Pivot(std::size_t r, int c) {
    const Rational pivot = rows_[r][c];
    for (auto& v : rows_[r]) v /= pivot;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i != r) Eliminate(rows_[i], rows_[r], c);
    }
    if (!objective_.empty()) Eliminate(objective_, rows_[r], c);
    basis_[r] = c;
  }

  // Pivots basic columns >= first_artificial out of the basis where
  // possible and drops rows that are linear combinations of the others.
  void ExpelArtificials(int first_artificial) {
    for (std::size_t i = 0; i < rows_.size();) {
      if (basis_[i] < first_artificial) {
        ++i;
        continue;
      }
      int column = -1;
      for (int j = 0; j < first_artificial; ++j) {
        if (rows_[i][j].Sign() != 0) {
          column = j;
          break;
        }
      }
      if (column >= 0) {
        Pivot(i, column);
        ++i;
      } else {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  std::vector<Rational> Solution(int num_variables) const {
    std::vector<Rational> x(num_variables);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (basis_[i] < num_variables) x[basis_[i]] = rows_[i].back();
    }
    return x;
  }

 private:
  static void Eliminate(Row& target, const Row& pivot_row, int c) {
    if (target[c].Sign() == 0) return;
    const Rational factor = target[c];
    for (std::size_t j = 0; j < target.size(); ++j) {
      if (pivot_row[j].Sign() != 0) target[j] -= factor * pivot_row[j];
    }
  }

  void BuildObjective(const std::vector<Rational>& cost) {
    objective_.assign(num_columns_ + 1, Rational());
    for (int j = 0; j < num_columns_; ++j) objective_[j] = cost[j];
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb.Sign() == 0) continue;
      for (std::size_t j = 0; j < objective_.size(); ++j) {
        objective_[j] -= cb * rows_[i][j];
      }
    }
  }

  std::vector<Row> rows_;  // each row: coefficients..., rhs
  std::vector<int> basis_;
  int num_columns_;
  std::vector<bool> allowed_;
  Row objective_;  // reduced costs..., -objective value
};

}  // namespace

void LinearProgram::Validate() const {
  if (rows.size() != senses.size() || rows.size() != rhs.size()) {
    throw ValidationError("constraint rows, senses and rhs differ in length");
  }
  for (const auto& row : rows) {
    if (row.size() != objective.size()) {
      throw ValidationError("constraint row length differs from objective");
    }
  }
}

LpResult SimplexSolve(const LinearProgram& lp) {
  lp.Validate();
  const int n = lp.NumVariables();
  const int m = static_cast<int>(lp.rows.size());

  // Normalise to non-negative right-hand sides.
  std::vector<Row> rows = lp.rows;
  std::vector<Rational> rhs = lp.rhs;
  std::vector<ConstraintSense> senses = lp.senses;
  for (int i = 0; i < m; ++i) {
    if (rhs[i].Sign() < 0) {
      for (auto& v : rows[i]) v = -v;
      rhs[i] = -rhs[i];
      if (senses[i] == ConstraintSense::kGreaterEqual) {
        senses[i] = ConstraintSense::kLessEqual;
      } else if (senses[i] == ConstraintSense::kLessEqual) {
        senses[i] = ConstraintSense::kGreaterEqual;
      }
    }
  }

  int num_slack = 0;
  int num_artificial = 0;
  for (auto s : senses) {
    if (s != ConstraintSense::kEqual) ++num_slack;
    if (s != ConstraintSense::kLessEqual) ++num_artificial;
  }
  const int first_slack = n;
  const int first_artificial = n + num_slack;
  const int columns = first_artificial + num_artificial;

  std::vector<Row> table(m, Row(columns + 1));
  std::vector<int> basis(m);
  int slack = first_slack;
  int artificial = first_artificial;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) table[i][j] = rows[i][j];
    table[i][columns] = rhs[i];
    switch (senses[i]) {
      case ConstraintSense::kLessEqual:
        table[i][slack] = 1;
        basis[i] = slack++;
        break;
      case ConstraintSense::kGreaterEqual:
        table[i][slack++] = -1;
        table[i][artificial] = 1;
        basis[i] = artificial++;
        break;
      case ConstraintSense::kEqual:
        table[i][artificial] = 1;
        basis[i] = artificial++;
        break;
    }
  }

  Tableau tableau(std::move(table), std::move(basis), columns);
  if (num_artificial > 0) {
    std::vector<Rational> phase_one(columns);
    for (int j = first_artificial; j < columns; ++j) phase_one[j] = 1;
    tableau.Minimise(phase_one);  // bounded below by 0
    if (tableau.ObjectiveValue().Sign() > 0) return {LpStatus::kInfeasible, Rational(), {}};
    tableau.ExpelArtificials(first_artificial);
    for (int j = first_artificial; j < columns; ++j) tableau.Forbid(j);
  }

  std::vector<Rational> cost(columns);
  for (int j = 0; j < n; ++j) cost[j] = lp.objective[j];
  if (tableau.Minimise(cost) == LpStatus::kUnbounded) {
    return {LpStatus::kUnbounded, Rational(), {}};
  }
  return {LpStatus::kOptimal, tableau.ObjectiveValue(), tableau.Solution(n)};
}

SystemSolution SolveLinearSystem(std::vector<std::vector<Rational>> a,
                                 std::vector<Rational> b) {
  const std::size_t rows = a.size();
  if (b.size() != rows) throw ValidationError("system rhs length mismatch");
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].Sign() == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    const Rational pivot = a[r][c];
    for (auto& v : a[r]) v /= pivot;
    b[r] /= pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].Sign() == 0) continue;
      const Rational factor = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= factor * a[r][j];
      b[i] -= factor * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (b[i].Sign() != 0) return {SystemStatus::kInconsistent, {}};
  }
  if (r < cols) return {SystemStatus::kUnderdetermined, {}};
  std::vector<Rational> x(cols);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
  return {SystemStatus::kUnique, std::move(x)};
}

}  // namespace optimin

// Copyright 2026 The Unicon Authors
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

#include "unicon/linear_program.h"

#include <cmath>
#include <limits>

namespace unicon {
namespace {

constexpr double kPivotEps = 1e-12;
constexpr double kCostEps = 1e-11;
constexpr int kMaxIterations = 200000;

// Tableau in canonical form: rows 0..m-1 are constraints, row m is the
// reduced-cost row; the last column holds right-hand sides.
class Tableau {
 public:
  Tableau(int rows, int cols) : m_(rows), n_(cols), t_(Matrix::Zero(rows + 1, cols + 1)), basis_(rows, -1) {}

  double& at(int r, int c) { return t_(r, c); }
  double& rhs(int r) { return t_(r, n_); }
  double& cost(int c) { return t_(m_, c); }
  double objective() const { return -t_(m_, n_); }
  std::vector<int>& basis() { return basis_; }

  void Pivot(int row, int col) {
    t_.row(row) /= t_(row, col);
    for (int r = 0; r <= m_; ++r) {
      if (r == row) continue;
      const double factor = t_(r, col);
      if (factor != 0.0) t_.row(r) -= factor * t_.row(row);
    }
    basis_[row] = col;
  }

  // Minimizes the current cost row over columns allowed by `usable`.
  // Returns false when unbounded.
  bool Optimize(const std::vector<bool>& usable) {
    for (int iter = 0; iter < kMaxIterations; ++iter) {
      int enter = -1;
      for (int c = 0; c < n_; ++c) {
        if (usable[c] && t_(m_, c) < -kCostEps) {
          enter = c;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (int r = 0; r < m_; ++r) {
        const double a = t_(r, enter);
        if (a <= kPivotEps) continue;
        const double ratio = t_(r, n_) / a;
        if (ratio < best_ratio - 1e-14 ||
            (std::abs(ratio - best_ratio) <= 1e-14 && leave >= 0 &&
             basis_[r] < basis_[leave])) {
          best_ratio = ratio;
          leave = r;
        }
      }
      if (leave < 0) return false;
      Pivot(leave, enter);
    }
    throw Error(ErrorKind::kNumerical, "simplex iteration limit exceeded");
  }

  int rows() const { return m_; }
  int cols() const { return n_; }

 private:
  int m_;
  int n_;
  Matrix t_;
  std::vector<int> basis_;
};

}  // namespace

LinearProgram::LinearProgram(int num_vars)
    : num_vars_(num_vars),
      nonnegative_(num_vars, false),
      objective_(Vector::Zero(num_vars)) {
  if (num_vars <= 0) ThrowInvalid("linear program needs at least one variable");
}

void LinearProgram::SetNonNegative(int var) { nonnegative_.at(var) = true; }

void LinearProgram::SetObjective(const Vector& coeffs, LpSense sense) {
  if (coeffs.size() != num_vars_) ThrowInvalid("objective size mismatch");
  objective_ = coeffs;
  sense_ = sense;
}

void LinearProgram::AddRow(const Vector& coeffs, RowType type, double rhs) {
  if (coeffs.size() != num_vars_) ThrowInvalid("constraint size mismatch");
  rows_.push_back({coeffs, type, rhs});
}

LpSolution LinearProgram::Solve() const {
  // Column layout: structural columns (free variables split into +/-),
  // then one slack per inequality row, then one artificial per row.
  std::vector<int> plus_col(num_vars_), minus_col(num_vars_, -1);
  int col = 0;
  for (int j = 0; j < num_vars_; ++j) {
    plus_col[j] = col++;
    if (!nonnegative_[j]) minus_col[j] = col++;
  }
  const int structural = col;
  int slack_count = 0;
  for (const Row& row : rows_) {
    if (row.type != RowType::kEqual) ++slack_count;
  }
  const int m = static_cast<int>(rows_.size());
  const int artificial_begin = structural + slack_count;
  const int n = artificial_begin + m;

  Tableau tab(m, n);
  int slack = structural;
  for (int i = 0; i < m; ++i) {
    const Row& row = rows_[i];
    const double sign = row.rhs < 0 ? -1.0 : 1.0;
    for (int j = 0; j < num_vars_; ++j) {
      tab.at(i, plus_col[j]) = sign * row.coeffs[j];
      if (minus_col[j] >= 0) tab.at(i, minus_col[j]) = -sign * row.coeffs[j];
    }
    if (row.type == RowType::kLessEqual) tab.at(i, slack++) = sign;
    if (row.type == RowType::kGreaterEqual) tab.at(i, slack++) = -sign;
    tab.at(i, artificial_begin + i) = 1.0;
    tab.rhs(i) = sign * row.rhs;
    tab.basis()[i] = artificial_begin + i;
  }

  // Phase 1: minimize the sum of artificials.
  for (int c = 0; c <= n; ++c) {
    double sum = 0.0;
    for (int i = 0; i < m; ++i) sum += tab.at(i, c);
    tab.at(m, c) = (c >= artificial_begin && c < n) ? 0.0 : -sum;
  }
  std::vector<bool> usable(n, true);
  tab.Optimize(usable);
  LpSolution solution;
  double scale = 1.0;
  for (const Row& row : rows_) scale = std::max(scale, std::abs(row.rhs));
  if (tab.objective() > 1e-9 * scale) {
    solution.status = LpStatus::kInfeasible;
    return solution;
  }
  // Drive zero-valued artificials out of the basis where possible.
  for (int i = 0; i < m; ++i) {
    if (tab.basis()[i] < artificial_begin) continue;
    for (int c = 0; c < artificial_begin; ++c) {
      if (std::abs(tab.at(i, c)) > 1e-9) {
        tab.Pivot(i, c);
        break;
      }
    }
  }
  for (int c = artificial_begin; c < n; ++c) usable[c] = false;

  // Phase 2: original objective expressed in the current basis.
  const double direction = sense_ == LpSense::kMaximize ? -1.0 : 1.0;
  Vector cost = Vector::Zero(n);
  for (int j = 0; j < num_vars_; ++j) {
    cost[plus_col[j]] = direction * objective_[j];
    if (minus_col[j] >= 0) cost[minus_col[j]] = -direction * objective_[j];
  }
  for (int c = 0; c <= n; ++c) tab.at(m, c) = c < n ? cost[c] : 0.0;
  for (int i = 0; i < m; ++i) {
    const int b = tab.basis()[i];
    if (b >= n) continue;
    const double cb = b < n ? cost[b] : 0.0;
    if (cb == 0.0) continue;
    for (int c = 0; c <= n; ++c) tab.at(m, c) -= cb * tab.at(i, c);
  }
  if (!tab.Optimize(usable)) {
    solution.status = LpStatus::kUnbounded;
    return solution;
  }

  Vector columns = Vector::Zero(n);
  for (int i = 0; i < m; ++i) columns[tab.basis()[i]] = tab.rhs(i);
  solution.x.resize(num_vars_);
  for (int j = 0; j < num_vars_; ++j) {
    solution.x[j] = columns[plus_col[j]] -
                    (minus_col[j] >= 0 ? columns[minus_col[j]] : 0.0);
  }
  solution.objective = objective_.dot(solution.x);
  solution.status = LpStatus::kOptimal;
  return solution;
}

}  // namespace unicon

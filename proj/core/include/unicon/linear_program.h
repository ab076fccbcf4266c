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
#ifndef UNICON_LINEAR_PROGRAM_H_
#define UNICON_LINEAR_PROGRAM_H_

#include <vector>

#include "unicon/common.h"

namespace unicon {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };
enum class LpSense { kMinimize, kMaximize };
enum class RowType { kLessEqual, kGreaterEqual, kEqual };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  Vector x;
  double objective = 0.0;
};

// Small dense linear program solved by the two-phase tableau simplex method
// with Bland's pivoting rule. The rule is deterministic and cycle-free, which
// makes tie-breaking between optimal vertices reproducible. Sized for the
// handful-of-variables programs that polytopal gauges produce.
class LinearProgram {
 public:
  // Variables start free (unbounded in both directions).
  explicit LinearProgram(int num_vars);

  int num_vars() const { return num_vars_; }
  void SetNonNegative(int var);
  void SetObjective(const Vector& coeffs, LpSense sense);
  void AddRow(const Vector& coeffs, RowType type, double rhs);

  LpSolution Solve() const;

 private:
  struct Row {
    Vector coeffs;
    RowType type;
    double rhs;
  };

  int num_vars_;
  std::vector<bool> nonnegative_;
  Vector objective_;
  LpSense sense_ = LpSense::kMinimize;
  std::vector<Row> rows_;
};

}  // namespace unicon

#endif  // UNICON_LINEAR_PROGRAM_H_

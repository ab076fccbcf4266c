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

#ifndef UNICON_COMMON_H_
#define UNICON_COMMON_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace unicon {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Tolerance defaults. Every consumer takes these from here so that a run can
// be reconfigured in one place.
struct Tolerances {
  // Gauge/support evaluations and separation certificates.
  double exact = 1e-9;
  // Geometric comparisons (collinearity, facet incidence, polygon snapping).
  double geometric = 1e-7;
};

inline constexpr Tolerances kDefaultTolerances{};

// Broad error categories; the CLI maps them onto stable exit codes.
enum class ErrorKind {
  kInvalidArgument,  // caller violated a precondition
  kInputData,        // malformed or uncertified file contents
  kNumerical,        // solver failure or non-convergence
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void ThrowInvalid(const std::string& what) {
  throw Error(ErrorKind::kInvalidArgument, what);
}
[[noreturn]] inline void ThrowInputData(const std::string& what) {
  throw Error(ErrorKind::kInputData, what);
}

// Volume of the d-dimensional Euclidean unit ball, via log-gamma so that large
// d does not overflow.
double UnitBallVolume(int d);

}  // namespace unicon

#endif  // UNICON_COMMON_H_

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

#ifndef UNICON_ESTIMATE_H_
#define UNICON_ESTIMATE_H_

#include <cstdint>
#include <string>

namespace unicon {

enum class VolumeMethod { kExact, kMonteCarlo, kGridBound };

std::string ToString(VolumeMethod method);

// A Lebesgue volume with a confidence interval. Exact values have
// lo == value == hi.
struct VolumeEstimate {
  double value = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  VolumeMethod method = VolumeMethod::kExact;
  uint64_t samples = 0;
  uint64_t seed = 0;
  double confidence = 1.0;
  // Monte Carlo points that fell in an r-hull tolerance band (counted as half
  // hits; the interval is widened to cover both classifications).
  uint64_t uncertain = 0;
  std::string note;

  static VolumeEstimate Exact(double v) {
    VolumeEstimate e;
    e.value = e.lo = e.hi = v;
    return e;
  }
  bool is_exact() const { return method == VolumeMethod::kExact; }
};

struct QuermassEstimate {
  int k = 0;
  int dim = 0;
  double value = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  uint64_t direction_samples = 0;
  uint64_t seed = 0;
  bool heuristic_interval = false;
};

// Two-sided Clopper-Pearson interval for a binomial proportion.
struct Proportion {
  double lo;
  double hi;
};
Proportion ClopperPearson(uint64_t successes, uint64_t trials,
                          double confidence);

}  // namespace unicon

#endif  // UNICON_ESTIMATE_H_

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

#ifndef UNICON_TESTS_TEST_SUPPORT_H_
#define UNICON_TESTS_TEST_SUPPORT_H_

#include <cmath>
#include <cstdint>
#include <vector>

#include "unicon/common.h"
#include "unicon/configurations.h"
#include "unicon/rng.h"

namespace unicon::testing {

// Hand-rolled generators for property tests. Every case draws from its own
// counter stream so a failure can be replayed from (seed, case index).
class Gen {
 public:
  Gen(uint64_t seed, uint64_t index)
      : stream_(seed, StreamPurpose::kPropertyTest, index) {}

  double Uniform(double lo, double hi) { return lo + (hi - lo) * stream_.Uniform(); }
  int Int(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(stream_.Uniform() * (hi - lo + 1));
  }
  Vector Point(int d, double half_width) {
    Vector v(d);
    for (int i = 0; i < d; ++i) v[i] = Uniform(-half_width, half_width);
    return v;
  }
  Vector Direction(int d) {
    Vector v(d);
    do {
      for (int i = 0; i < d; ++i) v[i] = stream_.Normal();
    } while (v.norm() < 1e-12);
    return v.normalized();
  }
  PointConfiguration Cloud(int d, int n, double half_width) {
    std::vector<Vector> pts;
    for (int i = 0; i < n; ++i) pts.push_back(Point(d, half_width));
    return PointConfiguration(d, std::move(pts));
  }

 private:
  CounterStream stream_;
};

inline Vector Vec(std::initializer_list<double> xs) {
  Vector v(static_cast<Eigen::Index>(xs.size()));
  int i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

inline PointConfiguration Config(std::initializer_list<std::initializer_list<double>> pts) {
  std::vector<Vector> out;
  for (auto p : pts) out.push_back(Vec(p));
  const int d = out.empty() ? 0 : static_cast<int>(out.front().size());
  return PointConfiguration(d, std::move(out));
}

inline PointConfiguration Grid2d(int side, double spacing) {
  std::vector<Vector> out;
  for (int i = 0; i < side; ++i)
    for (int j = 0; j < side; ++j) out.push_back(Vec({i * spacing, j * spacing}));
  return PointConfiguration(2, std::move(out));
}

// Area of the lens cut by two radius-r disks at center distance s < 2r.
inline double LensArea(double r, double s) {
  return 2 * r * r * std::acos(s / (2 * r)) - 0.5 * s * std::sqrt(4 * r * r - s * s);
}

}  // namespace unicon::testing

#endif  // UNICON_TESTS_TEST_SUPPORT_H_

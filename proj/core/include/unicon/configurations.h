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

#ifndef UNICON_CONFIGURATIONS_H_
#define UNICON_CONFIGURATIONS_H_

#include <optional>
#include <string>
#include <vector>

#include "unicon/common.h"
#include "unicon/norm_body.h"

namespace unicon {

// A labeled finite point set. Points need not be distinct.
struct PointConfiguration {
  int dim = 0;
  std::vector<Vector> points;
  std::string label;

  PointConfiguration() = default;
  PointConfiguration(int d, std::vector<Vector> pts, std::string name = {});

  int size() const { return static_cast<int>(points.size()); }
  // Throws unless nonempty with every point of dimension `dim`.
  void Validate() const;
};

// A pair of indices (0-based) together with their distance.
struct PairDistance {
  double distance = 0.0;
  int i = -1;
  int j = -1;
};

// Extreme pairwise gauge distances; for N = 1 both are reported as 0 with no
// pair.
PairDistance MinPairDistance(const PointConfiguration& x, const NormBody& k);
PairDistance MaxPairDistance(const PointConfiguration& x, const NormBody& k);

double Diameter(const PointConfiguration& x, const NormBody& k);

enum class CircumradiusMethod { kTrivial, kLinearProgram, kWelzl, kEllipsoid };

struct Circumball {
  double radius = 0.0;
  Vector center;
  // Certified lower bound on the true circumradius; equals `radius` for the
  // exact methods.
  double lower_bound = 0.0;
  bool exact = true;
  CircumradiusMethod method = CircumradiusMethod::kTrivial;
};

// Smallest enclosing ball in the norm of `k`.
//  - polytopal gauges: linear program over the facet normals; among optimal
//    centers the one closest (l-infinity) to the centroid, then the
//    lexicographically smallest;
//  - Euclidean: move-to-front Welzl recursion;
//  - general l_p: central-cut ellipsoid method with a certified lower bound.
//    If the gap does not close within the iteration cap the result is
//    returned with exact == false.
Circumball Circumradius(const PointConfiguration& x, const NormBody& k);

// (volume / V_d(K))^(1/d).
double VolumetricRadius(double volume, const NormBody& k);
double VolumetricRadius(double volume, double unit_volume, int dim);

struct PairViolation {
  char side = 'P';  // 'P' if a P-pair is closer than lambda, 'Q' if a Q-pair is farther
  int i = 0;        // 1-based
  int j = 0;        // 1-based
  double margin = 0.0;
};

struct ContractionCertificate {
  bool pass = false;
  double lambda = 0.0;
  PairDistance p_min;
  PairDistance q_max;
  // Worst violation; P-side reported first when both sides fail.
  std::optional<PairViolation> violation;
  std::optional<PairViolation> p_violation;
  std::optional<PairViolation> q_violation;

  std::string Describe() const;
};

// Checks min_{i<j} ||p_i - p_j|| >= lambda >= max_{i<j} ||q_i - q_j|| within
// `tol`.
ContractionCertificate CertifyUniformContraction(
    const PointConfiguration& p, const PointConfiguration& q, double lambda,
    const NormBody& k, double tol = kDefaultTolerances.exact);

}  // namespace unicon

#endif  // UNICON_CONFIGURATIONS_H_

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

#ifndef UNICON_VOLUMETRY_H_
#define UNICON_VOLUMETRY_H_

#include <cstdint>
#include <vector>

#include "unicon/ball_region.h"
#include "unicon/estimate.h"

namespace unicon {

struct McParams {
  uint64_t samples = 0;
  uint64_t seed = 0;
  double confidence = 0.99;
  // Worker threads; results do not depend on this value.
  int jobs = 1;
};

// Rejection sampling over the region's sampling box. Sample i is drawn from
// its own counter stream, so any sharding of [0, samples) gives the same
// hits. Uncertain r-hull points count as half hits; the interval spans the
// Clopper-Pearson bounds of both classifications.
VolumeEstimate McVolume(const BallRegion& region, const McParams& params);

// d = 2, polytopal norm. Area from convex-polygon clipping (polyhedron,
// r-hull) or a union of convex polygons (molecule).
VolumeEstimate ExactArea2d(const BallRegion& region);

struct GridBounds {
  double lower = 0.0;
  double upper = 0.0;
  uint64_t cells = 0;
};

// Deterministic sandwich over a resolution^d grid on the sampling box. Each
// cell is inside, outside, or boundary according to gauge bounds at its
// center widened by the gauge radius of the half-diagonal. r-hulls require a
// polytopal norm.
GridBounds ComputeGridBounds(const BallRegion& region, int resolution);

struct QuermassParams {
  uint64_t direction_samples = 0;
  // Points per planar-or-higher volume estimate at the bottom of the
  // recursion (1D volumes are exact).
  uint64_t volume_samples = 0;
  uint64_t seed = 0;
  double confidence = 0.99;
  int jobs = 1;
};

// W_k of a Euclidean molecule by Kubota's projection recursion,
// W_k(A) = (omega_d / omega_{d-1}) E_u[W_{k-1}(A | u^perp)].
QuermassEstimate QuermassKubota(const BallRegion& molecule, int k,
                                const QuermassParams& params);

// W_{d-1} of conv(centers + r B^d) from its support function
// h(u) = max_i c_i . u + r.
QuermassEstimate MeanWidthHull(const std::vector<Vector>& centers, double r,
                               int dim, const QuermassParams& params);

// Two-sided standard normal quantile for the given confidence.
double NormalQuantile(double confidence);

}  // namespace unicon

#endif  // UNICON_VOLUMETRY_H_

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

#ifndef UNICON_INSTANCES_H_
#define UNICON_INSTANCES_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "unicon/configurations.h"
#include "unicon/norm_body.h"

namespace unicon {

// sub-lambda: r < lambda/2; mid: lambda/2 <= r <= cr_K(P); super: r > cr_K(P).
enum class Regime { kSubLambda, kMid, kSuper };
enum class PackStrategy { kLattice, kDart };

std::string ToString(Regime regime);
std::string ToString(PackStrategy strategy);
Regime ParseRegime(const std::string& text);
PackStrategy ParsePackStrategy(const std::string& text);

// Representative radii inside each regime interval.
struct RegimeConstants {
  double sub_lambda = 0.4;   // r = sub_lambda * lambda
  double super_scale = 1.25;  // r = super_scale * cr + lambda
};

double RegimeRadius(Regime regime, double lambda, double cr,
                    const RegimeConstants& constants = {});
// Regime implied by r; `tol` absorbs rounding at the interval ends.
Regime ClassifyRegime(double r, double lambda, double cr, double tol = 1e-12);

struct UniformContractionInstance {
  std::shared_ptr<const NormBody> norm;
  double lambda = 0.0;
  double r = 0.0;
  Regime regime = Regime::kSuper;
  uint64_t seed = 0;
  std::optional<PackStrategy> strategy;
  PointConfiguration p;
  PointConfiguration q;

  int dim() const { return norm->dim(); }
  int n() const { return p.size(); }
  ContractionCertificate Certify() const;
};

// Pairwise gauge distances >= lambda, certified after generation.
PointConfiguration GenPacked(int d, int n, double lambda, const NormBody& k,
                             PackStrategy strategy, uint64_t seed);
// Uniform points of a (lambda/2)-ball around a random anchor; diameter <= lambda.
PointConfiguration GenClustered(int d, int n, double lambda, const NormBody& k,
                                uint64_t seed);

struct GenOptions {
  PackStrategy strategy = PackStrategy::kLattice;
  RegimeConstants constants;
  // Overrides the regime radius; the regime tag then follows r.
  std::optional<double> r;
};

UniformContractionInstance GenInstance(int n, double lambda,
                                       std::shared_ptr<const NormBody> k,
                                       Regime regime, uint64_t seed,
                                       const GenOptions& options = {});

// Instance documents (JSON, version "1"). Reals are written with 17
// significant digits. Loading re-certifies the contraction and the regime
// tag and throws an input-data error naming the first violating pair.
std::string InstanceToJson(const UniformContractionInstance& instance);
UniformContractionInstance InstanceFromJson(const std::string& text);
void SaveInstance(const UniformContractionInstance& instance,
                  const std::string& path);
UniformContractionInstance LoadInstance(const std::string& path);

// euclid | l1 | linf | lp:<p> | poly-h:<file> | poly-v:<file> |
// hexagon:<seed> (random symmetric hexagon, d = 2). Polytope files hold a
// JSON array of rows, or an object {"rows": [...], "blocks": [[...], ...]}.
NormBody ParseNorm(const std::string& spec, int dim);

// Symmetric hexagon with vertex angles j*pi/3 (+- 0.15 jitter) and radii in
// [0.8, 1.2], plus their negatives.
NormBody RandomSymmetricHexagon(uint64_t seed);

}  // namespace unicon

#endif  // UNICON_INSTANCES_H_

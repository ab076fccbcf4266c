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

#ifndef UNICON_VERIFY_H_
#define UNICON_VERIFY_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "unicon/estimate.h"
#include "unicon/instances.h"

namespace unicon {

enum class Verdict { kPass, kFail, kInconclusive };
std::string ToString(Verdict verdict);

// A value with an enclosing interval; exact values have lo = value = hi.
struct Interval {
  double value = 0.0;
  double lo = 0.0;
  double hi = 0.0;

  static Interval Exact(double v) { return {v, v, v}; }
  static Interval Of(const VolumeEstimate& e) { return {e.value, e.lo, e.hi}; }
  static Interval Of(const QuermassEstimate& e) { return {e.value, e.lo, e.hi}; }
};

struct CheckResult {
  std::string id;
  Verdict verdict = Verdict::kInconclusive;
  Interval lhs;
  Interval rhs;
  // rhs.value - lhs.value.
  double slack = 0.0;
  std::string notes;
  uint64_t seed = 0;
  // The claim's hypothesis is unmet; recorded but never counted as a failure.
  bool observational = false;
};

// Claim lhs <= rhs. fail iff lhs.lo > rhs.hi + tol, pass iff lhs.hi <= rhs.lo
// + tol, inconclusive otherwise; tol = rel_tol * max(1, |lhs|, |rhs|).
CheckResult CompareLessEqual(std::string id, Interval lhs, Interval rhs,
                             std::string notes = {}, double rel_tol = 1e-9);
// Claim lhs = rhs. pass iff the intervals meet within tol, fail otherwise.
CheckResult CompareEqual(std::string id, Interval lhs, Interval rhs,
                         std::string notes = {}, double rel_tol = 1e-9);

struct VerifyParams {
  uint64_t samples = 200000;
  double confidence = 0.99;
  int jobs = 1;
  // Kubota recursion and mean-width directions.
  uint64_t direction_samples = 32;
  uint64_t quermass_volume_samples = 20000;
  // Use exact polygon areas for planar polytopal norms.
  bool prefer_exact = true;
  int summand_directions = 720;
};

// V(Q_r) <= V(P_r) and its proof chain: diameter, isodiametric upper bound,
// Brunn-Minkowski growth and lower bound, packing identity.
std::vector<CheckResult> CheckUnionTheorem(const UniformContractionInstance& inst,
                                           const VerifyParams& params);

// V(P^r) <= V(Q^r) and its proof chain. Non-generating norms and N < 3^d
// make the theorem-level checks observational.
std::vector<CheckResult> CheckIntersectionTheorem(
    const UniformContractionInstance& inst, const VerifyParams& params);

// h(X^r, u) + h(conv_r(X), -u) = r h(K, u) over a fan of directions
// (d = 2, polytopal K, cr_K(X) <= r).
CheckResult CheckSummandIdentity(const PointConfiguration& x, double r,
                                 const NormBody& k, int directions = 720);
// V(X^r)^(1/2) + V(conv_r(X))^(1/2) <= r V_K^(1/2) with exact areas.
CheckResult CheckBrunnMinkowski2d(const PointConfiguration& x, double r,
                                  const NormBody& k);

// W_k(Q_r) <= W_k(P_r) and the quermass bounds (Euclidean, r >= lambda/2).
// k = d - 1 adds the convex-hull variants via mean width; k = d is the
// normalization sentinel.
std::vector<CheckResult> CheckQuermassTheorem(const UniformContractionInstance& inst,
                                              int k, const VerifyParams& params);

struct PartIIParams {
  uint64_t seed = 0;
  int random_tuples = 10000;
  int grid = 100;
  // Euclidean packings with N >= 2.359^d for the observational circumradius
  // comparison.
  std::vector<int> packing_dims = {2, 3};
};

std::vector<CheckResult> CheckPartIIFormulas(const PartIIParams& params);

// Runs every applicable check on one instance.
std::vector<CheckResult> VerifyInstance(const UniformContractionInstance& inst,
                                        const VerifyParams& params,
                                        const std::vector<int>& quermass_ks = {});

struct SuiteConfig {
  std::vector<int> dims = {2, 3};
  std::vector<std::string> norms = {"euclid", "l1", "linf", "lp:3"};
  std::vector<Regime> regimes = {Regime::kSubLambda, Regime::kMid, Regime::kSuper};
  // N = ceil(base^d) for each base.
  std::vector<double> n_bases = {2.0, 3.0};
  int instances_per_regime = 1;
  double lambda = 1.0;
  PackStrategy strategy = PackStrategy::kLattice;
  RegimeConstants constants;
  VerifyParams params;
  // Quermass indices for Euclidean instances; empty means 1..d-1.
  std::vector<int> quermass_ks;
  bool part_ii = true;
  std::optional<uint64_t> seed;
  std::optional<int> d0;
};

// Throws an invalid-argument error on an inconsistent configuration.
void ValidateSuiteConfig(const SuiteConfig& config);
SuiteConfig SuiteConfigFromJson(const std::string& text);

struct InstanceReport {
  std::string id;
  int dim = 0;
  std::string norm;
  int n = 0;
  double lambda = 0.0;
  double r = 0.0;
  std::string regime;
  uint64_t seed = 0;
  std::vector<CheckResult> checks;
  std::string error;
};

struct CheckTally {
  int pass = 0;
  int fail = 0;
  int inconclusive = 0;
  int observational = 0;
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<InstanceReport> instances;

  std::map<std::string, CheckTally> Aggregate() const;
  // A non-observational fail or an instance error.
  bool AnyFail() const;
};

SuiteReport RunSuite(const SuiteConfig& config);
InstanceReport VerifyToReport(const std::string& id, const UniformContractionInstance& inst,
                              const VerifyParams& params,
                              const std::vector<int>& quermass_ks = {});

std::string ReportJson(const SuiteReport& report);
std::string ReportText(const SuiteReport& report);
std::string ReportCsv(const SuiteReport& report);

}  // namespace unicon

#endif  // UNICON_VERIFY_H_

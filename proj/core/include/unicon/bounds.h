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

#ifndef UNICON_BOUNDS_H_
#define UNICON_BOUNDS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace unicon::bounds {

// N^(1/d); exact when N is a perfect d-th power.
double NthRoot(uint64_t n, int d);

// (r + lambda/2)^d V_K.
double UnionUpper(double r, double lambda, int d, double vk);
// (r + (N^(1/d) - 1) lambda/2)^d V_K.
double UnionLower(double r, double lambda, int d, uint64_t n, double vk);
// max(0, r - d lambda/(d+1))^d V_K.
double IntersectionLowerBohnenblust(double r, double lambda, int d, double vk);
// max(0, r - (N^(1/d) - 1) lambda/2)^d V_K.
double IntersectionUpper(double r, double lambda, int d, uint64_t n, double vk);
// (r - r_K(A))^d V_K where r_K(A) = (volume_a / V_K)^(1/d). Requires
// r > r_K(A).
double BlaschkeSantaloBound(double volume_a, double r, int d, double vk);

// (r + lambda/2)^(d-k) omega_d and (r + (N^(1/d) - 1) lambda/2)^(d-k) omega_d,
// 0 <= k < d.
double QuermassUnionUpper(double r, double lambda, int d, int k);
double QuermassUnionLower(double r, double lambda, int d, uint64_t n, int k);

// sqrt(mu^2 - rho^2 + x^2) - x for mu > rho > 0, x > 0.
double SchrammF(double mu, double rho, double x);
// omega_d max(0, sqrt(r^2 - (d-1)/(d+1) (lambda/2)^2) - lambda/2)^d for
// r > JungRadius(lambda, d).
double SchrammIntersectionLower(double r, double lambda, int d);

double JungRadius(double lambda, int d);
double BohnenblustRadius(double lambda, int d);
double KlDensity(int d);
// N >= base^d.
bool MeetsThreshold(uint64_t n, int d, double base);

// One side of an inequality that can be not-applicable.
struct Inequality {
  bool applicable = false;
  bool holds = false;
  double lhs = 0.0;
  double rhs = 0.0;
  std::string reason;
  double margin() const { return rhs - lhs; }
};

// r - (N^(1/d)-1) lambda/2 <= sqrt(r^2 - (d-1)/(d+1) (lambda/2)^2) - lambda/2.
Inequality Ineq19(double r, double lambda, int d, uint64_t n);
// x - sqrt(x^2 - (d-1)/(d+1)) + 2 <= N^(1/d), x = 2r/lambda.
Inequality Ineq20(double r, double lambda, int d, uint64_t n);
// x - sqrt(x^2 - 1) + 2 <= 2.359, x = 2r/lambda > 1.
Inequality Ineq21(double r, double lambda);

struct BoundsInputs {
  double r = 0.0;
  double lambda = 0.0;
  int d = 0;
  uint64_t n = 0;
  // Unit-ball volume; omega_d when absent.
  std::optional<double> vk;
  std::optional<int> k;
  // Circumradius of P, enables the packing-density ratio.
  std::optional<double> cr;
  // Volume of A for the r-ball body bound; defaults to the packing volume
  // N (lambda/2)^d V_K with radius r + lambda/2.
  std::optional<double> volume_a;
  // Dimension above which the large-d lemmas are assumed; annotation only.
  std::optional<int> d0;
};

struct BoundEntry {
  std::string id;
  bool applicable = true;
  std::optional<double> value;
  std::optional<bool> holds;
  std::optional<double> margin;
  bool clamped = false;
  std::string note;
  std::map<std::string, double> inputs;
};

struct BoundsReport {
  std::vector<BoundEntry> entries;
  const BoundEntry* Find(const std::string& id) const;
};

BoundsReport Evaluate(const BoundsInputs& in);

}  // namespace unicon::bounds

#endif  // UNICON_BOUNDS_H_

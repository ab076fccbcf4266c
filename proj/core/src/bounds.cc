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

#include "unicon/bounds.h"

#include <cmath>
#include <functional>

#include "unicon/common.h"

namespace unicon::bounds {
namespace {

void RequirePositive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) ThrowInvalid(std::string(name) + " must be positive");
}

void RequireDim(int d) {
  if (d < 1) ThrowInvalid("dimension must be positive");
}

void RequireQuermassIndex(int d, int k) {
  RequireDim(d);
  if (k < 0 || k >= d) ThrowInvalid("quermass index k must satisfy 0 <= k < d");
}

// Exact integer power with overflow detection.
bool IntPow(uint64_t base, int d, uint64_t* out) {
  uint64_t acc = 1;
  for (int i = 0; i < d; ++i) {
    if (base != 0 && acc > UINT64_MAX / base) return false;
    acc *= base;
  }
  *out = acc;
  return true;
}

double ClampedPow(double radius, int e, bool* clamped) {
  if (clamped != nullptr) *clamped = radius < 0.0;
  return std::pow(std::max(0.0, radius), e);
}

}  // namespace

double NthRoot(uint64_t n, int d) {
  RequireDim(d);
  if (n == 0) ThrowInvalid("N must be at least 1");
  if (d == 1) return static_cast<double>(n);
  const long double guess = std::pow(static_cast<long double>(n), 1.0L / d);
  const uint64_t base = static_cast<uint64_t>(std::llround(guess));
  for (uint64_t b = base > 0 ? base - 1 : 0; b <= base + 1; ++b) {
    uint64_t p = 0;
    if (IntPow(b, d, &p) && p == n) return static_cast<double>(b);
  }
  return static_cast<double>(guess);
}

double UnionUpper(double r, double lambda, int d, double vk) {
  RequirePositive(r, "r");
  RequirePositive(lambda, "lambda");
  RequirePositive(vk, "V_K");
  RequireDim(d);
  return std::pow(r + lambda / 2.0, d) * vk;
}

double UnionLower(double r, double lambda, int d, uint64_t n, double vk) {
  RequirePositive(r, "r");
  RequirePositive(lambda, "lambda");
  RequirePositive(vk, "V_K");
  return std::pow(r + (NthRoot(n, d) - 1.0) * (lambda / 2.0), d) * vk;
}

double IntersectionLowerBohnenblust(double r, double lambda, int d, double vk) {
  RequireDim(d);
  return ClampedPow(r - BohnenblustRadius(lambda, d), d, nullptr) * vk;
}

double IntersectionUpper(double r, double lambda, int d, uint64_t n, double vk) {
  return ClampedPow(r - (NthRoot(n, d) - 1.0) * (lambda / 2.0), d, nullptr) * vk;
}

double BlaschkeSantaloBound(double volume_a, double r, int d, double vk) {
  RequirePositive(volume_a, "volume of A");
  RequirePositive(vk, "V_K");
  RequireDim(d);
  const double rk = std::pow(volume_a / vk, 1.0 / d);
  if (!(r > rk)) ThrowInvalid("r must exceed the volumetric radius of A");
  return std::pow(r - rk, d) * vk;
}

double QuermassUnionUpper(double r, double lambda, int d, int k) {
  RequireQuermassIndex(d, k);
  RequirePositive(r, "r");
  RequirePositive(lambda, "lambda");
  return std::pow(r + lambda / 2.0, d - k) * UnitBallVolume(d);
}

double QuermassUnionLower(double r, double lambda, int d, uint64_t n, int k) {
  RequireQuermassIndex(d, k);
  RequirePositive(r, "r");
  RequirePositive(lambda, "lambda");
  return std::pow(r + (NthRoot(n, d) - 1.0) * (lambda / 2.0), d - k) * UnitBallVolume(d);
}

double SchrammF(double mu, double rho, double x) {
  if (!(rho > 0.0 && mu > rho && x > 0.0)) ThrowInvalid("Schramm F requires mu > rho > 0 and x > 0");
  // Rationalized so that large x does not cancel to zero.
  const double a = (mu - rho) * (mu + rho);
  return a / (std::sqrt(a + x * x) + x);
}

double SchrammIntersectionLower(double r, double lambda, int d) {
  RequirePositive(lambda, "lambda");
  RequireDim(d);
  if (!(r > JungRadius(lambda, d))) ThrowInvalid("r must exceed the Jung radius");
  const double h = lambda / 2.0;
  const double c = static_cast<double>(d - 1) / (d + 1);
  return UnitBallVolume(d) * ClampedPow(std::sqrt(r * r - c * h * h) - h, d, nullptr);
}

double JungRadius(double lambda, int d) {
  return std::sqrt(2.0 * d / (d + 1.0)) * (lambda / 2.0);
}

double BohnenblustRadius(double lambda, int d) { return d * lambda / (d + 1.0); }

double KlDensity(int d) { return std::exp2(-0.599 * d); }

bool MeetsThreshold(uint64_t n, int d, double base) {
  RequireDim(d);
  const double rounded = std::round(base);
  if (rounded == base) {
    uint64_t p = 0;
    if (!IntPow(static_cast<uint64_t>(base), d, &p)) return false;
    return n >= p;
  }
  return std::log(static_cast<double>(n)) >= d * std::log(base);
}

Inequality Ineq19(double r, double lambda, int d, uint64_t n) {
  Inequality q;
  const double h = lambda / 2.0;
  const double c = static_cast<double>(d - 1) / (d + 1);
  if (!(r > 0.0 && lambda > 0.0) || r * r < c * h * h) {
    q.reason = "requires r^2 >= (d-1)/(d+1) (lambda/2)^2";
    return q;
  }
  q.applicable = true;
  q.lhs = r - (NthRoot(n, d) - 1.0) * h;
  q.rhs = std::sqrt(r * r - c * h * h) - h;
  q.holds = q.lhs <= q.rhs;
  return q;
}

Inequality Ineq20(double r, double lambda, int d, uint64_t n) {
  Inequality q;
  const double c = static_cast<double>(d - 1) / (d + 1);
  const double x = 2.0 * r / lambda;
  if (!(r > 0.0 && lambda > 0.0) || x * x < c) {
    q.reason = "requires 2r/lambda >= sqrt((d-1)/(d+1))";
    return q;
  }
  q.applicable = true;
  q.lhs = x - std::sqrt(x * x - c) + 2.0;
  q.rhs = NthRoot(n, d);
  q.holds = q.lhs <= q.rhs;
  return q;
}

Inequality Ineq21(double r, double lambda) {
  Inequality q;
  const double x = 2.0 * r / lambda;
  if (!(r > 0.0 && lambda > 0.0) || !(x > 1.0)) {
    q.reason = "requires 2r/lambda > 1";
    return q;
  }
  q.applicable = true;
  q.lhs = x - std::sqrt(x * x - 1.0) + 2.0;
  q.rhs = 2.359;
  q.holds = q.lhs <= q.rhs;
  return q;
}

const BoundEntry* BoundsReport::Find(const std::string& id) const {
  for (const BoundEntry& e : entries) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

BoundsReport Evaluate(const BoundsInputs& in) {
  RequireDim(in.d);
  if (in.n == 0) ThrowInvalid("N must be at least 1");
  const double vk = in.vk.value_or(UnitBallVolume(in.d));
  const std::map<std::string, double> base_inputs = {
      {"r", in.r}, {"lambda", in.lambda}, {"d", in.d}, {"N", static_cast<double>(in.n)}, {"V_K", vk}};
  const bool outside_d0 = in.d0.has_value() && in.d < *in.d0;

  BoundsReport report;
  // Adds an entry whose value comes from `compute`; argument errors turn into
  // not-applicable entries carrying the message.
  auto add = [&](const std::string& id, std::map<std::string, double> inputs,
                 const std::function<void(BoundEntry&)>& compute) {
    BoundEntry e;
    e.id = id;
    e.inputs = std::move(inputs);
    try {
      compute(e);
    } catch (const Error& err) {
      e.applicable = false;
      e.value.reset();
      e.holds.reset();
      e.note = err.what();
    }
    report.entries.push_back(std::move(e));
  };
  auto with = [&](std::map<std::string, double> extra) {
    std::map<std::string, double> m = base_inputs;
    m.insert(extra.begin(), extra.end());
    return m;
  };
  auto large_d_note = [&](BoundEntry& e) {
    if (outside_d0) e.note = "outside the paper's guarantee (d < d0)";
  };

  add("union-2", base_inputs, [&](BoundEntry& e) { e.value = UnionUpper(in.r, in.lambda, in.d, vk); });
  add("union-4", base_inputs,
      [&](BoundEntry& e) { e.value = UnionLower(in.r, in.lambda, in.d, in.n, vk); });
  add("intersection-3", base_inputs, [&](BoundEntry& e) {
    RequirePositive(in.r, "r");
    RequirePositive(in.lambda, "lambda");
    e.value = IntersectionLowerBohnenblust(in.r, in.lambda, in.d, vk);
    e.clamped = in.r - BohnenblustRadius(in.lambda, in.d) < 0.0;
  });
  add("intersection-7", base_inputs, [&](BoundEntry& e) {
    RequirePositive(in.r, "r");
    RequirePositive(in.lambda, "lambda");
    e.value = IntersectionUpper(in.r, in.lambda, in.d, in.n, vk);
    e.clamped = in.r - (NthRoot(in.n, in.d) - 1.0) * in.lambda / 2.0 < 0.0;
  });
  {
    double volume_a = 0.0, radius = in.r;
    std::map<std::string, double> inputs;
    if (in.volume_a) {
      volume_a = *in.volume_a;
      inputs = with({{"volume_A", volume_a}});
    } else {
      volume_a = static_cast<double>(in.n) * std::pow(in.lambda / 2.0, in.d) * vk;
      radius = in.r + in.lambda / 2.0;
      inputs = with({{"volume_A", volume_a}, {"radius", radius}});
    }
    add("blaschke-santalo", inputs, [&](BoundEntry& e) {
      e.value = BlaschkeSantaloBound(volume_a, radius, in.d, vk);
      if (!in.volume_a) e.note = "A = packing molecule of radius lambda/2, radius r + lambda/2";
    });
  }
  const std::string no_k = "no quermass index k given";
  const auto k_inputs = in.k ? with({{"k", static_cast<double>(*in.k)}}) : base_inputs;
  for (const char* id : {"union-22222", "extra-1"}) {
    add(id, k_inputs, [&](BoundEntry& e) {
      if (!in.k) ThrowInvalid(no_k);
      e.value = QuermassUnionUpper(in.r, in.lambda, in.d, *in.k);
    });
  }
  for (const char* id : {"union-222222", "extra-2"}) {
    add(id, k_inputs, [&](BoundEntry& e) {
      if (!in.k) ThrowInvalid(no_k);
      e.value = QuermassUnionLower(in.r, in.lambda, in.d, in.n, *in.k);
    });
  }
  const double jung = JungRadius(in.lambda, in.d);
  add("schramm-F", with({{"mu", in.r}, {"rho", jung}, {"x", in.lambda / 2.0}}), [&](BoundEntry& e) {
    e.value = SchrammF(in.r, jung, in.lambda / 2.0);
    large_d_note(e);
  });
  add("schramm-lower", base_inputs, [&](BoundEntry& e) {
    e.value = SchrammIntersectionLower(in.r, in.lambda, in.d);
    e.clamped = std::sqrt(in.r * in.r - (in.d - 1.0) / (in.d + 1.0) * in.lambda * in.lambda / 4.0) <
                in.lambda / 2.0;
    large_d_note(e);
  });
  add("jung", with({}), [&](BoundEntry& e) {
    e.value = jung;
    e.holds = jung < 0.7865 * in.lambda;
  });
  add("bohnenblust", with({}), [&](BoundEntry& e) { e.value = BohnenblustRadius(in.lambda, in.d); });
  add("kl-density", with({}), [&](BoundEntry& e) {
    e.value = KlDensity(in.d);
    large_d_note(e);
  });
  if (in.cr) {
    add("bezdek-1", with({{"cr", *in.cr}}), [&](BoundEntry& e) {
      RequirePositive(in.lambda, "lambda");
      const double ratio = std::pow(in.lambda / 2.0 / (*in.cr + in.lambda), in.d);
      e.value = static_cast<double>(in.n) * ratio;
      e.holds = e.value < KlDensity(in.d);
      e.note = "N (lambda/2)^d / (cr + lambda)^d compared with 2^(-0.599 d)";
      if (outside_d0) e.note += "; outside the paper's guarantee (d < d0)";
    });
  }
  auto add_ineq = [&](const std::string& id, const Inequality& q) {
    BoundEntry e;
    e.id = id;
    e.inputs = base_inputs;
    e.applicable = q.applicable;
    if (q.applicable) {
      e.value = q.lhs;
      e.holds = q.holds;
      e.margin = q.margin();
      large_d_note(e);
    } else {
      e.note = q.reason;
    }
    report.entries.push_back(std::move(e));
  };
  add_ineq("ineq-19", Ineq19(in.r, in.lambda, in.d, in.n));
  add_ineq("ineq-20", Ineq20(in.r, in.lambda, in.d, in.n));
  add_ineq("ineq-21", Ineq21(in.r, in.lambda));
  const std::pair<const char*, double> thresholds[] = {
      {"threshold-2d", 2.0}, {"threshold-3d", 3.0}, {"threshold-1+sqrt2", 1.0 + std::sqrt(2.0)},
      {"threshold-2.359", 2.359}};
  for (const auto& [id, base] : thresholds) {
    add(id, with({{"base", base}}), [&](BoundEntry& e) { e.holds = MeetsThreshold(in.n, in.d, base); });
  }
  return report;
}

}  // namespace unicon::bounds

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

#include "unicon/verify.h"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <sstream>

#include "json.hpp"
#include "unicon/ball_region.h"
#include "unicon/bounds.h"
#include "unicon/polygon.h"
#include "unicon/rng.h"
#include "unicon/volumetry.h"

namespace unicon {
namespace {

using nlohmann::ordered_json;

// Per-check Monte Carlo stream tags, combined with the instance seed.
enum SeedTag : uint64_t {
  kTagQUnion = 1,
  kTagPUnion = 2,
  kTagPacking = 3,
  kTagPIntersection = 4,
  kTagQIntersection = 5,
  kTagQuermassQ = 10,
  kTagQuermassP = 20,
  kTagQuermassBall = 30,
  kTagWidthQ = 40,
  kTagWidthP = 41,
};

uint64_t McSeed(const UniformContractionInstance& inst, uint64_t tag) {
  return DeriveSeed(inst.seed, static_cast<uint64_t>(StreamPurpose::kMonteCarloVolume), tag);
}

std::string Fmt(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

bool ExactAvailable(const NormBody& k, const VerifyParams& params) {
  return params.prefer_exact && k.dim() == 2 && k.is_polytopal();
}

VolumeEstimate RegionVolume(const UniformContractionInstance& inst, RegionKind kind,
                            const PointConfiguration& centers, double r,
                            const VerifyParams& params, uint64_t tag) {
  BallRegion region(kind, centers, r, inst.norm);
  if (ExactAvailable(*inst.norm, params)) return ExactArea2d(region);
  return McVolume(region, {params.samples, McSeed(inst, tag), params.confidence, params.jobs});
}

std::string Describe(const VolumeEstimate& e) {
  if (e.is_exact()) return e.note.empty() ? "exact" : "exact (" + e.note + ")";
  return "monte-carlo n=" + std::to_string(e.samples) + " seed=" + std::to_string(e.seed);
}

// Volumetric radius as a monotone map of a volume interval.
Interval RadiusOf(const Interval& volume, double vk, int d) {
  auto rk = [&](double v) { return VolumetricRadius(std::max(v, 0.0), vk, d); };
  return {rk(volume.value), rk(volume.lo), rk(volume.hi)};
}

CheckResult Observe(CheckResult c, const std::string& why) {
  c.observational = true;
  c.notes = c.notes.empty() ? why : c.notes + "; " + why;
  return c;
}

CheckResult Tagged(CheckResult c, uint64_t seed) {
  c.seed = seed;
  return c;
}

bool IsEuclidean(const NormBody& k) {
  return k.kind() == NormKind::kEuclidean || (k.kind() == NormKind::kLp && k.p() == 2.0);
}

std::string NormLabel(const NormBody& k) { return k.Name(); }

}  // namespace

std::string ToString(Verdict verdict) {
  switch (verdict) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kInconclusive:
      return "inconclusive";
  }
  return "unknown";
}

CheckResult CompareLessEqual(std::string id, Interval lhs, Interval rhs, std::string notes,
                             double rel_tol) {
  CheckResult c;
  c.id = std::move(id);
  c.lhs = lhs;
  c.rhs = rhs;
  c.slack = rhs.value - lhs.value;
  c.notes = std::move(notes);
  const double tol = rel_tol * std::max({1.0, std::abs(lhs.value), std::abs(rhs.value)});
  if (lhs.lo > rhs.hi + tol) {
    c.verdict = Verdict::kFail;
  } else if (lhs.hi <= rhs.lo + tol) {
    c.verdict = Verdict::kPass;
  } else {
    c.verdict = Verdict::kInconclusive;
  }
  return c;
}

CheckResult CompareEqual(std::string id, Interval lhs, Interval rhs, std::string notes,
                         double rel_tol) {
  CheckResult c;
  c.id = std::move(id);
  c.lhs = lhs;
  c.rhs = rhs;
  c.slack = rhs.value - lhs.value;
  c.notes = std::move(notes);
  const double tol = rel_tol * std::max({1.0, std::abs(lhs.value), std::abs(rhs.value)});
  const bool disjoint = lhs.lo > rhs.hi + tol || rhs.lo > lhs.hi + tol;
  c.verdict = disjoint ? Verdict::kFail : Verdict::kPass;
  return c;
}

std::vector<CheckResult> CheckUnionTheorem(const UniformContractionInstance& inst,
                                           const VerifyParams& params) {
  const NormBody& k = *inst.norm;
  const int d = inst.dim();
  const uint64_t n = static_cast<uint64_t>(inst.n());
  const double r = inst.r;
  const double lambda = inst.lambda;
  const double vk = k.unit_volume().value;
  const bool threshold = bounds::MeetsThreshold(n, d, 2.0);
  const bool grown = r >= lambda / 2.0 * (1.0 - 1e-12);
  std::vector<CheckResult> out;

  out.push_back(CompareLessEqual("union-1-diam", Interval::Exact(Diameter(inst.q, k) + 2.0 * r),
                                 Interval::Exact(lambda + 2.0 * r), "diam_K(Q) + 2r <= lambda + 2r"));

  const VolumeEstimate vq = RegionVolume(inst, RegionKind::kMolecule, inst.q, r, params, kTagQUnion);
  const VolumeEstimate vp = RegionVolume(inst, RegionKind::kMolecule, inst.p, r, params, kTagPUnion);
  const VolumeEstimate vpack =
      RegionVolume(inst, RegionKind::kMolecule, inst.p, lambda / 2.0, params, kTagPacking);
  const double upper = bounds::UnionUpper(r, lambda, d, vk);
  const double lower = bounds::UnionLower(r, lambda, d, n, vk);

  CheckResult iso = CompareLessEqual("union-2-iso", Interval::Of(vq), Interval::Exact(upper),
                                     "V(Q_r) " + Describe(vq));
  out.push_back(Tagged(iso, vq.seed));

  CheckResult bm = Tagged(CompareLessEqual("union-4-bm", Interval::Exact(lower), Interval::Of(vp),
                                           "V(P_r) " + Describe(vp)),
                          vp.seed);
  if (!grown) bm = Observe(bm, "requires r >= lambda/2");
  out.push_back(bm);

  const double packing = static_cast<double>(n) * std::pow(lambda / 2.0, d) * vk;
  out.push_back(Tagged(CompareEqual("indirect-2-packing", Interval::Of(vpack), Interval::Exact(packing),
                                    "V(P_{lambda/2}) " + Describe(vpack) + " vs N (lambda/2)^d V_K"),
                       vpack.seed));

  {
    Interval lhs = RadiusOf(Interval::Of(vpack), vk, d);
    const double eps = r - lambda / 2.0;
    lhs = {lhs.value + eps, lhs.lo + eps, lhs.hi + eps};
    CheckResult growth = Tagged(CompareLessEqual("union-3-growth", lhs, RadiusOf(Interval::Of(vp), vk, d),
                                                 "r_K(P_{lambda/2}) + (r - lambda/2) <= r_K(P_r)"),
                                vp.seed);
    if (!grown) growth = Observe(growth, "requires r >= lambda/2");
    out.push_back(growth);
  }

  CheckResult e2e = Tagged(CompareLessEqual("thm1-end-to-end", Interval::Of(vq), Interval::Of(vp),
                                            "V(Q_r) <= V(P_r)"),
                           vp.seed);
  // Bound-chain transitivity: with both bounds decided and the thresholds
  // coinciding or ordered, the end-to-end claim is implied.
  if (threshold && iso.verdict == Verdict::kPass && bm.verdict == Verdict::kPass && !bm.observational &&
      upper <= lower * (1.0 + 1e-12) && e2e.verdict != Verdict::kPass) {
    e2e.verdict = Verdict::kFail;
    e2e.notes += "; bound chain passed but end-to-end did not";
  }
  if (!threshold) e2e = Observe(e2e, "N < 2^d: theorem hypothesis unmet");
  out.push_back(e2e);
  return out;
}

CheckResult CheckSummandIdentity(const PointConfiguration& x, double r, const NormBody& k,
                                 int directions) {
  if (k.dim() != 2 || !k.is_polytopal()) ThrowInvalid("summand identity needs a planar polygonal norm");
  if (directions < 1) ThrowInvalid("summand identity needs directions");
  const Circumball ball = Circumradius(x, k);
  if (ball.lower_bound > r * (1.0 + 1e-12)) ThrowInvalid("summand identity needs cr_K(X) <= r");
  const planar::Polygon body = planar::PolyhedronPolygon(x.points, r, k);
  const planar::Polygon hull = planar::HullPolygon(x.points, r, k);
  double worst = 0.0, scale = 1.0;
  for (int j = 0; j < directions; ++j) {
    const double angle = 2.0 * std::numbers::pi * j / directions;
    const planar::Point u(std::cos(angle), std::sin(angle));
    Vector uv(2);
    uv << u.x(), u.y();
    const double rhs = r * k.Support(uv);
    const double lhs = planar::Support(body, u) + planar::Support(hull, -u);
    worst = std::max(worst, std::abs(lhs - rhs));
    scale = std::max({scale, std::abs(lhs), std::abs(rhs)});
  }
  CheckResult c;
  c.id = "intersection-5-summand";
  c.lhs = Interval::Exact(worst);
  c.rhs = Interval::Exact(1e-9 * scale);
  c.slack = c.rhs.value - c.lhs.value;
  c.verdict = std::isfinite(worst) && worst <= 1e-9 * scale ? Verdict::kPass : Verdict::kFail;
  c.notes = "max |h(X^r,u) + h(conv_r X,-u) - r h(K,u)| over " + std::to_string(directions) +
            " directions";
  return c;
}

CheckResult CheckBrunnMinkowski2d(const PointConfiguration& x, double r, const NormBody& k) {
  if (k.dim() != 2 || !k.is_polytopal()) ThrowInvalid("planar Brunn-Minkowski needs a polygonal norm");
  const Circumball ball = Circumradius(x, k);
  if (ball.lower_bound > r * (1.0 + 1e-12)) ThrowInvalid("Brunn-Minkowski corollary needs cr_K(X) <= r");
  const double body = planar::SignedArea(planar::PolyhedronPolygon(x.points, r, k));
  const double hull = planar::SignedArea(planar::HullPolygon(x.points, r, k));
  return CompareLessEqual("intersection-6-bm",
                          Interval::Exact(std::sqrt(std::max(body, 0.0)) + std::sqrt(std::max(hull, 0.0))),
                          Interval::Exact(r * std::sqrt(k.unit_volume().value)),
                          "V(X^r)^(1/2) + V(conv_r X)^(1/2) <= r V_K^(1/2), exact areas");
}

std::vector<CheckResult> CheckIntersectionTheorem(const UniformContractionInstance& inst,
                                                  const VerifyParams& params) {
  const NormBody& k = *inst.norm;
  const int d = inst.dim();
  const uint64_t n = static_cast<uint64_t>(inst.n());
  const double r = inst.r;
  const double lambda = inst.lambda;
  const double vk = k.unit_volume().value;
  const bool threshold = bounds::MeetsThreshold(n, d, 3.0);
  const bool generating = k.generating() == Generating::kYes;
  const std::string hypothesis = !generating ? "norm not known to be generating: observational"
                                             : "N < 3^d: theorem hypothesis unmet";
  std::vector<CheckResult> out;

  const Circumball cb = Circumradius(inst.p, k);
  {
    CheckResult c = CompareLessEqual("intersection-1-cr", Interval::Exact(lambda),
                                     {cb.radius, cb.lower_bound, cb.radius}, "lambda <= cr_K(P)");
    if (!threshold) c = Observe(c, "N < 3^d: theorem hypothesis unmet");
    out.push_back(c);
  }

  const VolumeEstimate vp =
      RegionVolume(inst, RegionKind::kPolyhedron, inst.p, r, params, kTagPIntersection);
  const VolumeEstimate vq =
      RegionVolume(inst, RegionKind::kPolyhedron, inst.q, r, params, kTagQIntersection);

  out.push_back(Tagged(CompareLessEqual("intersection-3",
                                        Interval::Exact(bounds::IntersectionLowerBohnenblust(r, lambda, d, vk)),
                                        Interval::Of(vq), "V(Q^r) " + Describe(vq)),
                       vq.seed));
  {
    CheckResult c = Tagged(CompareLessEqual("intersection-7", Interval::Of(vp),
                                            Interval::Exact(bounds::IntersectionUpper(r, lambda, d, n, vk)),
                                            "V(P^r) " + Describe(vp)),
                           vp.seed);
    if (!generating) c = Observe(c, "norm not known to be generating: observational");
    out.push_back(c);
  }
  {
    CheckResult c = Tagged(CompareLessEqual("thm2-end-to-end", Interval::Of(vp), Interval::Of(vq),
                                            "V(P^r) <= V(Q^r)"),
                           vp.seed);
    if (!threshold || !generating) c = Observe(c, hypothesis);
    out.push_back(c);
  }
  if (threshold && r > lambda) {
    out.push_back(CompareLessEqual("intersection-chain",
                                   Interval::Exact(bounds::IntersectionUpper(r, lambda, d, n, vk)),
                                   Interval::Exact(bounds::IntersectionLowerBohnenblust(r, lambda, d, vk)),
                                   "(r-(N^(1/d)-1)lambda/2)^d V_K <= (r-d lambda/(d+1))^d V_K"));
  }
  {
    // Remark 3: the ball bound for the r + lambda/2 body of the packing
    // molecule reproduces the packing upper bound.
    const double volume_a = static_cast<double>(n) * std::pow(lambda / 2.0, d) * vk;
    const double radius = r + lambda / 2.0;
    if (radius > bounds::NthRoot(n, d) * lambda / 2.0) {
      out.push_back(CompareEqual("remark3-chain",
                                 Interval::Exact(bounds::BlaschkeSantaloBound(volume_a, radius, d, vk)),
                                 Interval::Exact(bounds::IntersectionUpper(r, lambda, d, n, vk)),
                                 "ball bound with A = P_{lambda/2}, radius r + lambda/2", 1e-12));
    }
  }
  if (d == 2 && k.is_polytopal() && cb.lower_bound <= r * (1.0 + 1e-12)) {
    out.push_back(CheckSummandIdentity(inst.p, r, k, params.summand_directions));
    out.push_back(CheckBrunnMinkowski2d(inst.p, r, k));
  }
  return out;
}

std::vector<CheckResult> CheckQuermassTheorem(const UniformContractionInstance& inst, int k,
                                              const VerifyParams& params) {
  const NormBody& body = *inst.norm;
  if (!IsEuclidean(body)) ThrowInvalid("quermass checks need the Euclidean norm");
  const int d = inst.dim();
  if (k < 0 || k > d) ThrowInvalid("quermass index out of range");
  const uint64_t n = static_cast<uint64_t>(inst.n());
  const double r = inst.r;
  const double lambda = inst.lambda;
  const std::string suffix = "-k" + std::to_string(k);
  std::vector<CheckResult> out;
  if (k == d) {
    const double omega = UnitBallVolume(d);
    CheckResult c = CompareEqual("quermass-sentinel" + suffix, Interval::Exact(omega),
                                 Interval::Exact(omega), "W_d = omega_d on both sides");
    out.push_back(Observe(c, "not a theorem case"));
    return out;
  }
  const bool threshold = bounds::MeetsThreshold(n, d, 2.0);
  const bool grown = r >= lambda / 2.0 * (1.0 - 1e-12);

  auto params_for = [&](uint64_t tag) {
    QuermassParams q;
    q.direction_samples = params.direction_samples;
    q.volume_samples = k == 0 ? params.samples : params.quermass_volume_samples;
    q.seed = McSeed(inst, tag);
    q.confidence = params.confidence;
    q.jobs = params.jobs;
    return q;
  };
  auto shared = inst.norm;
  const QuermassEstimate wq = QuermassKubota(BallRegion(RegionKind::kMolecule, inst.q, r, shared), k,
                                             params_for(kTagQuermassQ + k));
  const QuermassEstimate wp = QuermassKubota(BallRegion(RegionKind::kMolecule, inst.p, r, shared), k,
                                             params_for(kTagQuermassP + k));
  const double upper = bounds::QuermassUnionUpper(r, lambda, d, k);
  const double lower = bounds::QuermassUnionLower(r, lambda, d, n, k);
  const std::string note = wq.heuristic_interval ? "heuristic interval" : "";

  CheckResult e2e = Tagged(CompareLessEqual("thm3i-quermass" + suffix, Interval::Of(wq), Interval::Of(wp),
                                            "W_k(Q_r) <= W_k(P_r); " + (note.empty() ? "k = 0" : note)),
                           wp.seed);
  if (!threshold) e2e = Observe(e2e, "N < 2^d: theorem hypothesis unmet");
  if (!grown) e2e = Observe(e2e, "requires r >= lambda/2");
  out.push_back(e2e);
  out.push_back(Tagged(CompareLessEqual("extra-1" + suffix, Interval::Of(wq), Interval::Exact(upper),
                                        "W_k(Q_r) <= (r+lambda/2)^(d-k) omega_d"),
                       wq.seed));
  CheckResult low = Tagged(CompareLessEqual("extra-2" + suffix, Interval::Exact(lower), Interval::Of(wp),
                                            "(r+(N^(1/d)-1)lambda/2)^(d-k) omega_d <= W_k(P_r)"),
                           wp.seed);
  if (!grown) low = Observe(low, "requires r >= lambda/2");
  out.push_back(low);

  {
    // Closed form for a single ball of the same radius.
    PointConfiguration single(d, {inst.q.points.front()});
    const QuermassEstimate wb = QuermassKubota(BallRegion(RegionKind::kMolecule, single, r, shared), k,
                                               params_for(kTagQuermassBall + k));
    out.push_back(Tagged(CompareEqual("kubota-ball" + suffix, Interval::Of(wb),
                                      Interval::Exact(std::pow(r, d - k) * UnitBallVolume(d)),
                                      "W_k(B[q_1, r]) = r^(d-k) omega_d"),
                         wb.seed));
  }

  if (k == d - 1) {
    auto width_params = [&](uint64_t tag) {
      QuermassParams q = params_for(tag);
      q.direction_samples = std::max<uint64_t>(params.direction_samples, 1) * 32;
      return q;
    };
    const QuermassEstimate cq = MeanWidthHull(inst.q.points, r, d, width_params(kTagWidthQ));
    const QuermassEstimate cp = MeanWidthHull(inst.p.points, r, d, width_params(kTagWidthP));
    out.push_back(Tagged(CompareLessEqual("union-22222" + suffix, Interval::Of(cq), Interval::Exact(upper),
                                          "W_{d-1}(conv Q_r) <= (r+lambda/2) omega_d"),
                         cq.seed));
    CheckResult lo = Tagged(CompareLessEqual("union-222222" + suffix, Interval::Exact(lower),
                                             Interval::Of(cp), "bound <= W_{d-1}(conv P_r)"),
                            cp.seed);
    if (!grown) lo = Observe(lo, "requires r >= lambda/2");
    out.push_back(lo);
    CheckResult conv = Tagged(CompareLessEqual("thm3i-conv" + suffix, Interval::Of(cq), Interval::Of(cp),
                                               "W_{d-1}(conv Q_r) <= W_{d-1}(conv P_r)"),
                              cp.seed);
    if (!threshold) conv = Observe(conv, "N < 2^d: theorem hypothesis unmet");
    if (!grown) conv = Observe(conv, "requires r >= lambda/2");
    out.push_back(conv);
  }
  return out;
}

std::vector<CheckResult> CheckPartIIFormulas(const PartIIParams& params) {
  std::vector<CheckResult> out;
  const uint64_t seed = params.seed;
  {
    CounterStream s(seed, StreamPurpose::kPropertyTest, 19);
    int disagreements = 0, evaluated = 0;
    for (int t = 0; t < params.random_tuples; ++t) {
      const int d = 2 + static_cast<int>(s.Uniform() * 9);
      const double lambda = 0.1 + 9.9 * s.Uniform();
      const double c = static_cast<double>(d - 1) / (d + 1);
      const double r = lambda / 2.0 * (std::sqrt(c) + 5.0 * s.Uniform());
      const uint64_t n = 1 + static_cast<uint64_t>(s.Uniform() * std::pow(4.0, d));
      const bounds::Inequality a = bounds::Ineq19(r, lambda, d, n);
      const bounds::Inequality b = bounds::Ineq20(r, lambda, d, n);
      if (!a.applicable || !b.applicable) continue;
      ++evaluated;
      if (a.holds != b.holds) ++disagreements;
    }
    out.push_back(CompareLessEqual("ineq-19-20-equiv", Interval::Exact(disagreements), Interval::Exact(0),
                                   std::to_string(evaluated) + " random tuples"));
  }
  {
    CounterStream s(seed, StreamPurpose::kPropertyTest, 21);
    int violations = 0;
    for (int t = 0; t < params.random_tuples; ++t) {
      const int d = 2 + static_cast<int>(s.Uniform() * 9);
      const double lambda = 0.1 + 9.9 * s.Uniform();
      const double x = 1.573 + 10.0 * s.Uniform();
      const uint64_t n = static_cast<uint64_t>(std::ceil(std::pow(2.359, d))) +
                         static_cast<uint64_t>(s.Uniform() * 10);
      const double r = x * lambda / 2.0;
      const bounds::Inequality i21 = bounds::Ineq21(r, lambda);
      const bounds::Inequality i20 = bounds::Ineq20(r, lambda, d, n);
      if (!i21.holds || !i20.holds) ++violations;
    }
    out.push_back(CompareLessEqual("ineq-21-chain", Interval::Exact(violations), Interval::Exact(0),
                                   "(21) and N >= 2.359^d imply (20) for 2r/lambda >= 1.573"));
  }
  {
    int violations = 0;
    double prev = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 10 * params.grid; ++i) {
      const double x = 1.0 + 1e-3 + 9.0 * i / (10.0 * params.grid);
      const double f = x - std::sqrt(x * x - 1.0);
      if (!(f > 0.0) || !(f < prev)) ++violations;
      prev = f;
    }
    out.push_back(CompareLessEqual("f-decreasing", Interval::Exact(violations), Interval::Exact(0),
                                   "x - sqrt(x^2 - 1) positive and decreasing on (1, 10]"));
  }
  {
    const int g = params.grid;
    int violations = 0;
    std::vector<double> row(g), prev_row(g);
    for (int a = 0; a < g; ++a) {
      const double mu = 0.5 + 4.5 * a / (g - 1.0);
      for (int b = 0; b < g; ++b) {
        const double rho = mu * (b + 0.5) / g;
        for (int c = 0; c < g; ++c) row[c] = bounds::SchrammF(mu, rho, 0.01 + 5.0 * c / (g - 1.0));
        for (int c = 0; c < g; ++c) {
          if (!(row[c] > 0.0)) ++violations;
          if (c > 0 && row[c] - row[c - 1] > 1e-9) ++violations;
          if (c > 1 && row[c] - 2.0 * row[c - 1] + row[c - 2] < -1e-9) ++violations;
          if (b > 0 && row[c] - prev_row[c] > 1e-9) ++violations;
        }
        std::swap(row, prev_row);
      }
    }
    out.push_back(CompareLessEqual("schramm-mono", Interval::Exact(violations), Interval::Exact(0),
                                   "F positive, decreasing and convex in x, decreasing in rho on a " +
                                       std::to_string(g) + "^3 grid"));
  }
  {
    const double anchor = 1.573 - std::sqrt(1.573 * 1.573 - 1.0) + 2.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "1.573 - sqrt(1.573^2 - 1) + 2 = %.6f", anchor);
    out.push_back(CompareLessEqual("anchor-2.359", Interval::Exact(anchor), Interval::Exact(2.359), buf, 0.0));
  }
  {
    double worst = 0.0;
    for (int d = 2; d <= 200; ++d) worst = std::max(worst, bounds::JungRadius(1.0, d));
    out.push_back(CompareLessEqual("jung-0.7865", Interval::Exact(worst), Interval::Exact(0.7865),
                                   "max over 2 <= d <= 200 of sqrt(2d/(d+1))/2", 0.0));
  }
  for (int d : params.packing_dims) {
    const uint64_t n = static_cast<uint64_t>(std::ceil(std::pow(2.359, d)));
    const NormBody ball = NormBody::Euclidean(d);
    const PointConfiguration p = GenPacked(d, static_cast<int>(n), 1.0, ball, PackStrategy::kLattice, seed);
    const Circumball cb = Circumradius(p, ball);
    CheckResult c = CompareLessEqual("bkl-cr-d" + std::to_string(d), Interval::Exact(0.7865),
                                     {cb.radius, cb.lower_bound, cb.radius},
                                     "0.7865 lambda < cr(P), N = " + std::to_string(n), 0.0);
    out.push_back(Observe(c, "guaranteed only for d >= d0"));
  }
  return out;
}

std::vector<CheckResult> VerifyInstance(const UniformContractionInstance& inst,
                                        const VerifyParams& params,
                                        const std::vector<int>& quermass_ks) {
  std::vector<CheckResult> out = CheckUnionTheorem(inst, params);
  for (CheckResult& c : CheckIntersectionTheorem(inst, params)) out.push_back(std::move(c));
  if (IsEuclidean(*inst.norm) && inst.r >= inst.lambda / 2.0) {
    std::vector<int> ks = quermass_ks;
    if (ks.empty()) {
      for (int k = 1; k < inst.dim(); ++k) ks.push_back(k);
    }
    for (int k : ks) {
      for (CheckResult& c : CheckQuermassTheorem(inst, k, params)) out.push_back(std::move(c));
    }
  }
  for (CheckResult& c : out) {
    if (c.seed == 0) c.seed = inst.seed;
  }
  return out;
}

InstanceReport VerifyToReport(const std::string& id, const UniformContractionInstance& inst,
                              const VerifyParams& params, const std::vector<int>& quermass_ks) {
  InstanceReport rep;
  rep.id = id;
  rep.dim = inst.dim();
  rep.norm = NormLabel(*inst.norm);
  rep.n = inst.n();
  rep.lambda = inst.lambda;
  rep.r = inst.r;
  rep.regime = ToString(inst.regime);
  rep.seed = inst.seed;
  rep.checks = VerifyInstance(inst, params, quermass_ks);
  return rep;
}

void ValidateSuiteConfig(const SuiteConfig& config) {
  if (!config.seed) ThrowInvalid("suite configuration needs a seed");
  if (config.dims.empty() && !config.part_ii && !config.norms.empty()) {
    ThrowInvalid("suite configuration lists norms but no dimensions");
  }
  for (int d : config.dims) {
    if (d < 1) ThrowInvalid("dimensions must be positive");
  }
  for (double b : config.n_bases) {
    if (!(b > 1.0)) ThrowInvalid("N-policy bases must exceed 1");
  }
  if (config.instances_per_regime < 1) ThrowInvalid("instance count must be positive");
  if (!(config.lambda > 0.0)) ThrowInvalid("lambda must be positive");
  const VerifyParams& p = config.params;
  if (p.samples < 1) ThrowInvalid("samples must be positive");
  if (!(p.confidence > 0.5 && p.confidence < 1.0)) ThrowInvalid("confidence must lie in (0.5, 1)");
  if (p.jobs < 1) ThrowInvalid("jobs must be positive");
  if (p.direction_samples < 1 || p.quermass_volume_samples < 1) {
    ThrowInvalid("quermass sample counts must be positive");
  }
}

SuiteConfig SuiteConfigFromJson(const std::string& text) {
  SuiteConfig c;
  try {
    const nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_object()) ThrowInvalid("suite configuration must be a JSON object");
    if (j.contains("dims")) c.dims = j.at("dims").get<std::vector<int>>();
    if (j.contains("norms")) c.norms = j.at("norms").get<std::vector<std::string>>();
    if (j.contains("regimes")) {
      c.regimes.clear();
      for (const auto& r : j.at("regimes")) c.regimes.push_back(ParseRegime(r.get<std::string>()));
    }
    if (j.contains("n_bases")) c.n_bases = j.at("n_bases").get<std::vector<double>>();
    if (j.contains("instances_per_regime")) c.instances_per_regime = j.at("instances_per_regime").get<int>();
    if (j.contains("lambda")) c.lambda = j.at("lambda").get<double>();
    if (j.contains("strategy")) c.strategy = ParsePackStrategy(j.at("strategy").get<std::string>());
    if (j.contains("sub_lambda")) c.constants.sub_lambda = j.at("sub_lambda").get<double>();
    if (j.contains("super_scale")) c.constants.super_scale = j.at("super_scale").get<double>();
    if (j.contains("samples")) c.params.samples = j.at("samples").get<uint64_t>();
    if (j.contains("confidence")) c.params.confidence = j.at("confidence").get<double>();
    if (j.contains("jobs")) c.params.jobs = j.at("jobs").get<int>();
    if (j.contains("direction_samples")) c.params.direction_samples = j.at("direction_samples").get<uint64_t>();
    if (j.contains("quermass_volume_samples")) {
      c.params.quermass_volume_samples = j.at("quermass_volume_samples").get<uint64_t>();
    }
    if (j.contains("exact_2d")) c.params.prefer_exact = j.at("exact_2d").get<bool>();
    if (j.contains("quermass_ks")) c.quermass_ks = j.at("quermass_ks").get<std::vector<int>>();
    if (j.contains("part_ii")) c.part_ii = j.at("part_ii").get<bool>();
    if (j.contains("seed")) c.seed = j.at("seed").get<uint64_t>();
    if (j.contains("d0")) c.d0 = j.at("d0").get<int>();
  } catch (const nlohmann::json::exception& e) {
    ThrowInvalid(std::string("suite configuration: ") + e.what());
  }
  return c;
}

SuiteReport RunSuite(const SuiteConfig& config) {
  ValidateSuiteConfig(config);
  SuiteReport report;
  report.config = config;
  const uint64_t master = *config.seed;
  uint64_t index = 0;
  for (int d : config.dims) {
    for (const std::string& norm_spec : config.norms) {
      std::shared_ptr<const NormBody> norm;
      try {
        norm = std::make_shared<const NormBody>(ParseNorm(norm_spec, d));
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::kInputData) throw;
        ThrowInvalid("norm '" + norm_spec + "' in d = " + std::to_string(d) + ": " + e.what());
      }
      for (double base : config.n_bases) {
        const int n = static_cast<int>(std::ceil(std::pow(base, d) - 1e-9));
        for (Regime regime : config.regimes) {
          for (int rep = 0; rep < config.instances_per_regime; ++rep, ++index) {
            const uint64_t seed =
                DeriveSeed(master, static_cast<uint64_t>(StreamPurpose::kSeedDerivation), index);
            std::ostringstream id;
            id << "d" << d << "-" << norm_spec << "-n" << n << "-" << ToString(regime) << "-" << rep;
            try {
              GenOptions options;
              options.strategy = config.strategy;
              options.constants = config.constants;
              const UniformContractionInstance inst = GenInstance(n, config.lambda, norm, regime, seed, options);
              report.instances.push_back(VerifyToReport(id.str(), inst, config.params, config.quermass_ks));
            } catch (const Error& e) {
              InstanceReport failed;
              failed.id = id.str();
              failed.dim = d;
              failed.norm = norm->Name();
              failed.n = n;
              failed.lambda = config.lambda;
              failed.regime = ToString(regime);
              failed.seed = seed;
              failed.error = e.what();
              report.instances.push_back(std::move(failed));
            }
          }
        }
      }
    }
  }
  if (config.part_ii) {
    InstanceReport formulas;
    formulas.id = "part-ii-formulas";
    formulas.seed = DeriveSeed(master, static_cast<uint64_t>(StreamPurpose::kPropertyTest), 0);
    PartIIParams p;
    p.seed = formulas.seed;
    formulas.checks = CheckPartIIFormulas(p);
    for (CheckResult& c : formulas.checks) c.seed = formulas.seed;
    if (config.d0) {
      for (CheckResult& c : formulas.checks) {
        if (c.id.rfind("bkl-cr", 0) == 0) c.notes += "; d0 = " + std::to_string(*config.d0);
      }
    }
    report.instances.push_back(std::move(formulas));
  }
  return report;
}

std::map<std::string, CheckTally> SuiteReport::Aggregate() const {
  std::map<std::string, CheckTally> tally;
  for (const InstanceReport& inst : instances) {
    for (const CheckResult& c : inst.checks) {
      CheckTally& t = tally[c.id];
      if (c.observational) {
        ++t.observational;
        continue;
      }
      switch (c.verdict) {
        case Verdict::kPass:
          ++t.pass;
          break;
        case Verdict::kFail:
          ++t.fail;
          break;
        case Verdict::kInconclusive:
          ++t.inconclusive;
          break;
      }
    }
  }
  return tally;
}

bool SuiteReport::AnyFail() const {
  for (const InstanceReport& inst : instances) {
    if (!inst.error.empty()) return true;
    for (const CheckResult& c : inst.checks) {
      if (!c.observational && c.verdict == Verdict::kFail) return true;
    }
  }
  return false;
}

std::string ReportJson(const SuiteReport& report) {
  const SuiteConfig& c = report.config;
  ordered_json config;
  config["dims"] = c.dims;
  config["norms"] = c.norms;
  std::vector<std::string> regimes;
  for (Regime r : c.regimes) regimes.push_back(ToString(r));
  config["regimes"] = regimes;
  config["n_bases"] = c.n_bases;
  config["instances_per_regime"] = c.instances_per_regime;
  config["lambda"] = c.lambda;
  config["strategy"] = ToString(c.strategy);
  config["sub_lambda"] = c.constants.sub_lambda;
  config["super_scale"] = c.constants.super_scale;
  config["samples"] = c.params.samples;
  config["confidence"] = c.params.confidence;
  config["direction_samples"] = c.params.direction_samples;
  config["quermass_volume_samples"] = c.params.quermass_volume_samples;
  config["exact_2d"] = c.params.prefer_exact;
  config["quermass_ks"] = c.quermass_ks;
  config["part_ii"] = c.part_ii;
  config["seed"] = c.seed.value_or(0);
  if (c.d0) config["d0"] = *c.d0;

  auto interval = [](const Interval& i) {
    ordered_json j;
    j["value"] = i.value;
    j["lo"] = i.lo;
    j["hi"] = i.hi;
    return j;
  };
  ordered_json instances = ordered_json::array();
  for (const InstanceReport& inst : report.instances) {
    ordered_json j;
    j["id"] = inst.id;
    j["dim"] = inst.dim;
    j["norm"] = inst.norm;
    j["N"] = inst.n;
    j["lambda"] = inst.lambda;
    j["r"] = inst.r;
    j["regime"] = inst.regime;
    j["seed"] = inst.seed;
    if (!inst.error.empty()) j["error"] = inst.error;
    ordered_json checks = ordered_json::array();
    for (const CheckResult& ch : inst.checks) {
      ordered_json cj;
      cj["id"] = ch.id;
      cj["verdict"] = ToString(ch.verdict);
      cj["observational"] = ch.observational;
      cj["lhs"] = interval(ch.lhs);
      cj["rhs"] = interval(ch.rhs);
      cj["slack"] = ch.slack;
      cj["seed"] = ch.seed;
      cj["notes"] = ch.notes;
      checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    instances.push_back(std::move(j));
  }
  ordered_json aggregate;
  for (const auto& [id, t] : report.Aggregate()) {
    aggregate[id] = {{"pass", t.pass}, {"fail", t.fail}, {"inconclusive", t.inconclusive},
                     {"observational", t.observational}};
  }
  ordered_json root;
  root["config"] = std::move(config);
  root["instances"] = std::move(instances);
  root["aggregate"] = std::move(aggregate);
  root["status"] = report.AnyFail() ? "fail" : "pass";
  return root.dump(2) + "\n";
}

std::string ReportText(const SuiteReport& report) {
  std::ostringstream os;
  char line[160];
  std::snprintf(line, sizeof line, "%-28s %6s %6s %13s %14s\n", "check", "pass", "fail", "inconclusive",
                "observational");
  os << line;
  CheckTally total;
  for (const auto& [id, t] : report.Aggregate()) {
    std::snprintf(line, sizeof line, "%-28s %6d %6d %13d %14d\n", id.c_str(), t.pass, t.fail,
                  t.inconclusive, t.observational);
    os << line;
    total.pass += t.pass;
    total.fail += t.fail;
    total.inconclusive += t.inconclusive;
    total.observational += t.observational;
  }
  std::snprintf(line, sizeof line, "%-28s %6d %6d %13d %14d\n", "total", total.pass, total.fail,
                total.inconclusive, total.observational);
  os << line;
  for (const InstanceReport& inst : report.instances) {
    if (!inst.error.empty()) os << "error in " << inst.id << ": " << inst.error << "\n";
    for (const CheckResult& c : inst.checks) {
      if (!c.observational && c.verdict == Verdict::kFail) {
        os << "FAIL " << inst.id << " " << c.id << ": lhs " << Fmt(c.lhs.value) << " [" << Fmt(c.lhs.lo)
           << ", " << Fmt(c.lhs.hi) << "] rhs " << Fmt(c.rhs.value) << " [" << Fmt(c.rhs.lo) << ", "
           << Fmt(c.rhs.hi) << "] " << c.notes << "\n";
      }
    }
  }
  os << "instances: " << report.instances.size() << "  status: " << (report.AnyFail() ? "FAIL" : "PASS")
     << "\n";
  return os.str();
}

std::string ReportCsv(const SuiteReport& report) {
  std::ostringstream os;
  os << "instance-id,check-id,verdict,lhs,lhs-lo,lhs-hi,rhs,rhs-lo,rhs-hi,slack,seed\n";
  auto num = [](double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
  };
  for (const InstanceReport& inst : report.instances) {
    for (const CheckResult& c : inst.checks) {
      os << inst.id << "," << c.id << "," << ToString(c.verdict) << (c.observational ? "/observational" : "")
         << "," << num(c.lhs.value) << "," << num(c.lhs.lo) << "," << num(c.lhs.hi) << ","
         << num(c.rhs.value) << "," << num(c.rhs.lo) << "," << num(c.rhs.hi) << "," << num(c.slack) << ","
         << c.seed << "\n";
    }
  }
  return os.str();
}

}  // namespace unicon

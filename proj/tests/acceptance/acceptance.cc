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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "unicon/ball_region.h"
#include "unicon/bounds.h"
#include "unicon/configurations.h"
#include "unicon/instances.h"
#include "unicon/norm_body.h"
#include "unicon/rng.h"
#include "unicon/verify.h"
#include "unicon/volumetry.h"

namespace unicon {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::shared_ptr<const NormBody> Share(NormBody k) {
  return std::make_shared<const NormBody>(std::move(k));
}

double Tol(std::initializer_list<double> values) {
  double m = 1.0;
  for (double v : values) m = std::max(m, std::abs(v));
  return 1e-9 * m;
}

std::string Format(const char* fmt, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

// 1. Union bounds coincide at N = 2^d.
Outcome ThresholdCoincidence() {
  double worst = 0.0;
  for (int d = 2; d <= 10; ++d) {
    const uint64_t n = uint64_t{1} << d;
    for (int i = 1; i <= 40; ++i) {
      for (int j = 1; j <= 40; ++j) {
        const double r = 0.05 * i, lambda = 0.1 * j;
        const double up = bounds::UnionUpper(r, lambda, d, 1.0);
        const double lo = bounds::UnionLower(r, lambda, d, n, 1.0);
        worst = std::max(worst, std::abs(up - lo) / up);
      }
    }
  }
  return {worst <= 1e-12, Format("max relative gap %.3g over d=2..10, 1600 (r, lambda) pairs", worst)};
}

// 2. Theorem 1 chain with exact planar areas.
Outcome TheoremOneExact2d() {
  int instances = 0, failures = 0;
  std::string first;
  for (int norm_id = 0; norm_id < 3; ++norm_id) {
    for (int n : {4, 9, 16}) {
      for (int i = 0; i < 50; ++i) {
        const uint64_t seed = DeriveSeed(2024, 100 * norm_id + n, i);
        std::shared_ptr<const NormBody> k;
        if (norm_id == 0) k = Share(NormBody::L1(2));
        if (norm_id == 1) k = Share(NormBody::LInf(2));
        if (norm_id == 2) k = Share(RandomSymmetricHexagon(seed));
        GenOptions opts;
        opts.strategy = i % 4 < 2 ? PackStrategy::kLattice : PackStrategy::kDart;
        const Regime regime = i % 2 == 0 ? Regime::kMid : Regime::kSuper;
        const UniformContractionInstance inst = GenInstance(n, 1.0, k, regime, seed, opts);
        const double vk = k->unit_volume().value;
        const double vq =
            ExactArea2d(BallRegion(RegionKind::kMolecule, inst.q, inst.r, k)).value;
        const double vp =
            ExactArea2d(BallRegion(RegionKind::kMolecule, inst.p, inst.r, k)).value;
        const double up = bounds::UnionUpper(inst.r, 1.0, 2, vk);
        const double lo = bounds::UnionLower(inst.r, 1.0, 2, n, vk);
        const double tol = Tol({vq, vp, up, lo});
        const bool ok = vq <= up + tol && up <= lo + tol && lo <= vp + tol;
        ++instances;
        if (!ok) {
          ++failures;
          if (first.empty())
            first = Format("; first failure %s N=%d seed=%llu: %.12g <= %.12g <= %.12g <= %.12g",
                           k->Name().c_str(), n, static_cast<unsigned long long>(seed), vq, up, lo,
                           vp);
        }
      }
    }
  }
  return {failures == 0, Format("%d instances (l1, linf, hexagon; N = 4, 9, 16), %d failures",
                                instances, failures) + first};
}

// 3. Theorem 1 by Monte Carlo in three dimensions.
Outcome TheoremOneMonteCarlo3d() {
  int instances = 0, fails = 0, e2e_pass = 0, e2e_total = 0;
  VerifyParams params;
  params.samples = 1000000;
  params.confidence = 0.99;
  for (const char* norm : {"euclid", "linf"}) {
    const auto k = Share(ParseNorm(norm, 3));
    for (int i = 0; i < 20; ++i) {
      const uint64_t seed = DeriveSeed(3003, norm[0], i);
      const Regime regime = i % 2 == 0 ? Regime::kMid : Regime::kSuper;
      const UniformContractionInstance inst = GenInstance(8, 1.0, k, regime, seed);
      for (const CheckResult& c : CheckUnionTheorem(inst, params)) {
        if (!c.observational && c.verdict == Verdict::kFail) ++fails;
        if (c.id == "thm1-end-to-end") {
          ++e2e_total;
          e2e_pass += c.verdict == Verdict::kPass;
        }
      }
      ++instances;
    }
  }
  const double rate = static_cast<double>(e2e_pass) / e2e_total;
  return {fails == 0 && rate >= 0.9,
          Format("%d instances (euclid, linf; N = 8; 1e6 samples), %d fail verdicts, end-to-end pass "
                 "rate %.3f",
                 instances, fails, rate)};
}

// 4. The 3x3 grid is tight for the intersection bound.
Outcome TightGrid() {
  const auto k = Share(NormBody::LInf(2));
  std::vector<Vector> grid, same;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Vector v(2);
      v << i, j;
      grid.push_back(v);
      same.push_back(Vector::Zero(2));
    }
  }
  const VolumeEstimate vp =
      ExactArea2d(BallRegion(RegionKind::kPolyhedron, PointConfiguration(2, grid), 3.0, k));
  const VolumeEstimate vq =
      ExactArea2d(BallRegion(RegionKind::kPolyhedron, PointConfiguration(2, same), 3.0, k));
  const double upper = bounds::IntersectionUpper(3.0, 1.0, 2, 9, k->unit_volume().value);
  const bool ok = vp.is_exact() && vq.is_exact() && vp.value == 16.0 && upper == 16.0 &&
                  vq.value == 36.0 && vq.value >= upper;
  return {ok, Format("V(P^3) = %.17g, bound = %.17g, V(Q^3) = %.17g", vp.value, upper, vq.value)};
}

// 5. The lambda/2 molecule of a packing has volume N (lambda/2)^d V_K.
Outcome PackingIdentity() {
  int planar = 0, planar_bad = 0;
  double worst = 0.0;
  for (int norm_id = 0; norm_id < 3; ++norm_id) {
    for (int i = 0; i < 40; ++i) {
      const uint64_t seed = DeriveSeed(5005, norm_id, i);
      std::shared_ptr<const NormBody> k;
      if (norm_id == 0) k = Share(NormBody::L1(2));
      if (norm_id == 1) k = Share(NormBody::LInf(2));
      if (norm_id == 2) k = Share(RandomSymmetricHexagon(seed));
      const int n = 2 + i % 15;
      const double lambda = 0.5 + 0.05 * (i % 7);
      const PointConfiguration p = GenPacked(
          2, n, lambda, *k, i % 2 == 0 ? PackStrategy::kLattice : PackStrategy::kDart, seed);
      const double area =
          ExactArea2d(BallRegion(RegionKind::kMolecule, p, lambda / 2.0, k)).value;
      const double identity = n * std::pow(lambda / 2.0, 2) * k->unit_volume().value;
      const double gap = std::abs(area - identity);
      worst = std::max(worst, gap / std::max(1.0, identity));
      planar_bad += gap > Tol({area, identity});
      ++planar;
    }
  }
  // Twenty intervals at once: 0.999 per interval keeps the family-wise
  // coverage near 98%.
  int spatial = 0, covered = 0;
  const char* norms[] = {"euclid", "linf", "l1", "lp:3"};
  for (int i = 0; i < 20; ++i) {
    const uint64_t seed = DeriveSeed(5006, 0, i);
    const auto k = Share(ParseNorm(norms[i % 4], 3));
    const int n = 8 + i % 5;
    const PointConfiguration p =
        GenPacked(3, n, 1.0, *k, i % 2 == 0 ? PackStrategy::kLattice : PackStrategy::kDart, seed);
    const VolumeEstimate v =
        McVolume(BallRegion(RegionKind::kMolecule, p, 0.5, k), {400000, seed, 0.999, 1});
    const double identity = n * 0.125 * k->unit_volume().value;
    covered += v.lo <= identity && identity <= v.hi;
    ++spatial;
  }
  return {planar_bad == 0 && covered == spatial,
          Format("d=2: %d/%d exact within 1e-9 (worst rel %.2g); d=3: %d/%d intervals (99.9%%) "
                 "contain the identity",
                 planar - planar_bad, planar, worst, covered, spatial)};
}

struct PlanarCase {
  PointConfiguration x;
  double r;
  std::shared_ptr<const NormBody> k;
};

std::vector<PlanarCase> PlanarCases() {
  std::vector<PlanarCase> cases;
  for (int i = 0; i < 100; ++i) {
    CounterStream s(DeriveSeed(6006, 0, i), StreamPurpose::kPropertyTest, 0);
    std::shared_ptr<const NormBody> k;
    switch (i % 3) {
      case 0:
        k = Share(NormBody::L1(2));
        break;
      case 1:
        k = Share(NormBody::LInf(2));
        break;
      default:
        k = Share(RandomSymmetricHexagon(DeriveSeed(6006, 1, i)));
    }
    const int n = 1 + static_cast<int>(s.Uniform() * 8);
    std::vector<Vector> pts;
    for (int j = 0; j < n; ++j) {
      Vector v(2);
      v << 4.0 * s.Uniform() - 2.0, 4.0 * s.Uniform() - 2.0;
      pts.push_back(v);
    }
    PointConfiguration x(2, pts);
    const double cr = Circumradius(x, *k).radius;
    const double r = std::max(cr, 0.1) * (1.0 + 1.5 * s.Uniform());
    cases.push_back({std::move(x), r, k});
  }
  return cases;
}

// 6. h(X^r, u) + h(conv_r X, -u) = r h(K, u).
Outcome SummandIdentity() {
  int bad = 0;
  double worst = 0.0;
  for (const PlanarCase& c : PlanarCases()) {
    const CheckResult res = CheckSummandIdentity(c.x, c.r, *c.k, 720);
    bad += res.verdict != Verdict::kPass;
    worst = std::max(worst, res.lhs.value);
  }
  return {bad == 0, Format("100 planar cases, 720 directions, %d failures, worst deviation %.3g", bad,
                           worst)};
}

// 7. V(X^r)^(1/2) + V(conv_r X)^(1/2) <= r V_K^(1/2).
Outcome BrunnMinkowski() {
  int bad = 0;
  double min_slack = 1e300;
  for (const PlanarCase& c : PlanarCases()) {
    const CheckResult res = CheckBrunnMinkowski2d(c.x, c.r, *c.k);
    bad += res.lhs.value > res.rhs.value + 1e-9;
    min_slack = std::min(min_slack, res.rhs.value - res.lhs.value);
  }
  return {bad == 0, Format("100 planar cases, %d violations, smallest slack %.3g", bad, min_slack)};
}

// 8. Quermassintegrals: single-ball closed forms, then the union bounds.
Outcome Quermass() {
  double worst_rel = 0.0;
  for (int d = 2; d <= 3; ++d) {
    for (double rho : {1.0, 0.5, 2.0}) {
      const BallRegion ball(RegionKind::kMolecule, PointConfiguration(d, {Vector::Zero(d)}), rho,
                            Share(NormBody::Euclidean(d)));
      for (int k = 0; k <= d; ++k) {
        const QuermassEstimate w =
            QuermassKubota(ball, k, {64, 200000, DeriveSeed(8008, d, k), 0.99, 1});
        const double truth = std::pow(rho, d - k) * UnitBallVolume(d);
        worst_rel = std::max(worst_rel, std::abs(w.value - truth) / truth);
      }
    }
  }
  int instances = 0, fails = 0, checks = 0;
  VerifyParams params;
  params.direction_samples = 64;
  params.quermass_volume_samples = 20000;
  params.samples = 200000;
  for (int i = 0; i < 20; ++i) {
    const int d = 2 + i % 2;
    const uint64_t seed = DeriveSeed(8009, 0, i);
    const auto k = Share(NormBody::Euclidean(d));
    const Regime regime = i % 4 < 2 ? Regime::kMid : Regime::kSuper;
    const UniformContractionInstance inst = GenInstance(1 << d, 1.0, k, regime, seed);
    for (int q = 0; q < d; ++q) {
      for (const CheckResult& c : CheckQuermassTheorem(inst, q, params)) {
        ++checks;
        if (!c.observational && c.verdict == Verdict::kFail) ++fails;
      }
    }
    ++instances;
  }
  return {worst_rel <= 0.01 && fails == 0,
          Format("single balls: worst relative error %.4f; %d instances, %d checks, %d fails",
                 worst_rel, instances, checks, fails)};
}

// 9. Formula layer of the large-dimension argument.
Outcome PartII() {
  PartIIParams params;
  params.seed = 9009;
  params.random_tuples = 10000;
  params.grid = 100;
  int fails = 0;
  double anchor = 0.0;
  for (const CheckResult& c : CheckPartIIFormulas(params)) {
    if (!c.observational && c.verdict == Verdict::kFail) ++fails;
    if (c.id == "anchor-2.359") anchor = c.lhs.value;
  }
  const std::string six = Format("%.6f", anchor);
  const double independent = 1.573 - std::sqrt(1.573 * 1.573 - 1.0) + 2.0;
  const bool ok = fails == 0 && six.rfind("2.3587", 0) == 0 && anchor < 2.359 &&
                  std::abs(anchor - independent) < 5e-7;
  return {ok, Format("%d fails; anchor %s < 2.359", fails, six.c_str())};
}

// 10. Clopper-Pearson coverage of the Monte Carlo estimator.
Outcome EstimatorSoundness() {
  struct Geometry {
    std::string name;
    BallRegion region;
    double exact;
  };
  auto cfg = [](std::initializer_list<std::pair<double, double>> pts) {
    std::vector<Vector> out;
    for (auto [a, b] : pts) {
      Vector v(2);
      v << a, b;
      out.push_back(v);
    }
    return PointConfiguration(2, out);
  };
  const auto hex = Share(RandomSymmetricHexagon(1010));
  const BallRegion hull(RegionKind::kRHull, cfg({{0, 0}, {1.2, 0.3}, {0.4, 1.0}, {-0.3, 0.6}}), 1.5,
                        hex);
  const double lens = 2.0 * std::acos(0.5) - 0.5 * std::sqrt(3.0);
  std::vector<Geometry> geometries = {
      {"linf molecule", BallRegion(RegionKind::kMolecule, cfg({{0, 0}, {1, 1}}), 1.0,
                                   Share(NormBody::LInf(2))),
       7.0},
      {"l1 polyhedron", BallRegion(RegionKind::kPolyhedron, cfg({{0, 0}, {1, 0}}), 1.0,
                                   Share(NormBody::L1(2))),
       0.5},
      {"hexagon r-hull", hull, ExactArea2d(hull).value},
      {"euclid molecule", BallRegion(RegionKind::kMolecule, cfg({{0, 0}, {1, 0}}), 1.0,
                                     Share(NormBody::Euclidean(2))),
       2.0 * std::numbers::pi - lens},
  };
  bool ok = true;
  std::ostringstream detail;
  for (const Geometry& g : geometries) {
    int covered = 0;
    for (uint64_t seed = 0; seed < 100; ++seed) {
      const VolumeEstimate v = McVolume(g.region, {20000, DeriveSeed(1010, 0, seed), 0.99, 1});
      covered += v.lo <= g.exact && g.exact <= v.hi;
    }
    ok = ok && covered >= 97;
    detail << g.name << " " << covered << "/100; ";
  }
  std::string s = detail.str();
  s.resize(s.size() - 2);
  return {ok, s};
}

// 11. Byte-identical suite reports across runs and worker counts.
Outcome Determinism() {
  SuiteConfig c;
  c.dims = {2, 3};
  c.n_bases = {2.0};
  c.params.samples = 20000;
  c.params.direction_samples = 8;
  c.params.quermass_volume_samples = 2000;
  c.part_ii = true;
  c.seed = 1111;
  SuiteConfig parallel = c;
  parallel.params.jobs = 4;
  const std::string a = ReportJson(RunSuite(c));
  const std::string b = ReportJson(RunSuite(c));
  const std::string p = ReportJson(RunSuite(parallel));
  return {a == b && a == p, Format("%zu-byte report; repeat %s, jobs=4 %s", a.size(),
                                   a == b ? "identical" : "differs", a == p ? "identical" : "differs")};
}

struct Criterion {
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace unicon

int main() {
  using namespace unicon;
  const std::vector<Criterion> criteria = {
      {"threshold-coincidence", 1, ThresholdCoincidence},
      {"theorem1-exact-2d", 120, TheoremOneExact2d},
      {"theorem1-monte-carlo-3d", 300, TheoremOneMonteCarlo3d},
      {"theorem2-tight-grid", 1, TightGrid},
      {"packing-identity", 120, PackingIdentity},
      {"summand-identity", 60, SummandIdentity},
      {"brunn-minkowski-2d", 60, BrunnMinkowski},
      {"quermass-suite", 600, Quermass},
      {"part-ii-formulas", 60, PartII},
      {"estimator-soundness", 300, EstimatorSoundness},
      {"determinism", 600, Determinism},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& c = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.budget_seconds;
    const bool pass = o.pass && in_time;
    failed += !pass;
    std::printf("%s %2zu %-24s %7.2fs  %s%s\n", pass ? "PASS" : "FAIL", i + 1, c.name, secs,
                o.detail.c_str(), in_time ? "" : " (over time budget)");
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}

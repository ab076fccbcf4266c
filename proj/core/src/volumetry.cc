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

#include "unicon/volumetry.h"

#include <algorithm>
#include <cmath>
#include <memory>
#include <thread>

#include <boost/math/distributions/normal.hpp>
#include <boost/math/special_functions/beta.hpp>

#include "unicon/polygon.h"
#include "unicon/rng.h"

namespace unicon {
namespace {

struct HitCount {
  uint64_t inside = 0;
  uint64_t uncertain = 0;
};

HitCount CountRange(const BallRegion& region, const Box& box, uint64_t seed, uint64_t begin,
                    uint64_t end) {
  const int d = region.dim();
  const Vector width = box.hi - box.lo;
  std::vector<double> y(d);
  HitCount count;
  for (uint64_t i = begin; i < end; ++i) {
    CounterStream stream(seed, StreamPurpose::kMonteCarloVolume, i);
    for (int a = 0; a < d; ++a) y[a] = box.lo[a] + width[a] * stream.Uniform();
    switch (region.Classify(std::span<const double>(y))) {
      case Membership::kInside:
        ++count.inside;
        break;
      case Membership::kUncertain:
        ++count.uncertain;
        break;
      case Membership::kOutside:
        break;
    }
  }
  return count;
}

bool IsEuclidean(const NormBody& k) {
  return k.kind() == NormKind::kEuclidean || (k.kind() == NormKind::kLp && k.p() == 2.0);
}

Vector RandomDirection(uint64_t seed, uint64_t index, int d) {
  CounterStream stream(seed, StreamPurpose::kDirections, index);
  Vector u(d);
  double norm = 0.0;
  do {
    for (int a = 0; a < d; ++a) u[a] = stream.Normal();
    norm = u.norm();
  } while (norm == 0.0);
  return u / norm;
}

// Orthonormal basis of the complement of the unit vector u, as columns.
Matrix ComplementBasis(const Vector& u) {
  const int d = static_cast<int>(u.size());
  const Matrix column = u;
  Eigen::HouseholderQR<Matrix> qr(column);
  const Matrix q = qr.householderQ() * Matrix::Identity(d, d);
  return q.rightCols(d - 1);
}

double UnionLength(const std::vector<Vector>& centers, double r) {
  std::vector<double> mids;
  for (const Vector& c : centers) mids.push_back(c[0]);
  std::sort(mids.begin(), mids.end());
  double total = 0.0;
  double lo = mids.front() - r, hi = mids.front() + r;
  for (size_t i = 1; i < mids.size(); ++i) {
    if (mids[i] - r > hi) {
      total += hi - lo;
      lo = mids[i] - r;
    }
    hi = mids[i] + r;
  }
  return total + (hi - lo);
}

struct Level {
  double value;
  double rel_var;
};

Level Kubota(const std::vector<Vector>& centers, double r, int d, int k,
             const QuermassParams& params, uint64_t seed) {
  if (k == d) return {UnitBallVolume(d), 0.0};
  if (k == 0) {
    if (d == 1) return {UnionLength(centers, r), 0.0};
    auto norm = std::make_shared<const NormBody>(NormBody::Euclidean(d));
    BallRegion region(RegionKind::kMolecule, PointConfiguration(d, centers), r, norm);
    const VolumeEstimate est =
        McVolume(region, {params.volume_samples, seed, params.confidence, params.jobs});
    const double se = (est.hi - est.lo) / (2.0 * NormalQuantile(params.confidence));
    const double rel = est.value > 0.0 ? se / est.value : 0.0;
    return {est.value, rel * rel};
  }
  const uint64_t m = params.direction_samples;
  std::vector<double> values(m);
  double inner_rel_var = 0.0;
  for (uint64_t j = 0; j < m; ++j) {
    const Matrix basis = ComplementBasis(RandomDirection(seed, j, d));
    std::vector<Vector> projected;
    projected.reserve(centers.size());
    for (const Vector& c : centers) projected.push_back(basis.transpose() * c);
    const Level inner = Kubota(projected, r, d - 1, k - 1, params, DeriveSeed(seed, 1, j));
    values[j] = inner.value;
    inner_rel_var += inner.rel_var;
  }
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(m);
  double rel_var = inner_rel_var / static_cast<double>(m);
  if (m > 1 && mean > 0.0) {
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    rel_var += ss / static_cast<double>(m - 1) / static_cast<double>(m) / (mean * mean);
  }
  return {UnitBallVolume(d) / UnitBallVolume(d - 1) * mean, rel_var};
}

}  // namespace

std::string ToString(VolumeMethod method) {
  switch (method) {
    case VolumeMethod::kExact:
      return "exact";
    case VolumeMethod::kMonteCarlo:
      return "monte-carlo";
    case VolumeMethod::kGridBound:
      return "grid-bound";
  }
  return "unknown";
}

Proportion ClopperPearson(uint64_t successes, uint64_t trials, double confidence) {
  if (trials == 0) ThrowInvalid("Clopper-Pearson interval needs at least one trial");
  if (successes > trials) ThrowInvalid("more successes than trials");
  if (!(confidence > 0.0 && confidence < 1.0)) ThrowInvalid("confidence must lie in (0, 1)");
  const double alpha = 1.0 - confidence;
  const double x = static_cast<double>(successes);
  const double n = static_cast<double>(trials);
  Proportion out{0.0, 1.0};
  if (successes > 0) out.lo = boost::math::ibeta_inv(x, n - x + 1.0, alpha / 2.0);
  if (successes < trials) out.hi = boost::math::ibeta_inv(x + 1.0, n - x, 1.0 - alpha / 2.0);
  return out;
}

double NormalQuantile(double confidence) {
  if (!(confidence > 0.0 && confidence < 1.0)) ThrowInvalid("confidence must lie in (0, 1)");
  return boost::math::quantile(boost::math::normal(), 0.5 + confidence / 2.0);
}

VolumeEstimate McVolume(const BallRegion& region, const McParams& params) {
  if (params.samples == 0) ThrowInvalid("mc_volume needs at least one sample");
  if (region.IsEmpty()) {
    VolumeEstimate e = VolumeEstimate::Exact(0.0);
    e.note = "empty";
    return e;
  }
  const Box box = region.SamplingBox();
  const double box_volume = box.Volume();
  if (!std::isfinite(box_volume)) ThrowInvalid("unbounded sampling box");
  if (!(box_volume > 0.0)) {
    // The box contains the region, e.g. a polyhedron with r = cr_K(centers).
    VolumeEstimate e = VolumeEstimate::Exact(0.0);
    e.note = "measure zero";
    return e;
  }
  const uint64_t n = params.samples;
  const uint64_t jobs = std::clamp<uint64_t>(static_cast<uint64_t>(std::max(params.jobs, 1)), 1, n);
  std::vector<HitCount> partial(jobs);
  if (jobs == 1) {
    partial[0] = CountRange(region, box, params.seed, 0, n);
  } else {
    std::vector<std::thread> workers;
    for (uint64_t w = 0; w < jobs; ++w) {
      const uint64_t begin = n * w / jobs;
      const uint64_t end = n * (w + 1) / jobs;
      workers.emplace_back([&, w, begin, end] {
        partial[w] = CountRange(region, box, params.seed, begin, end);
      });
    }
    for (std::thread& t : workers) t.join();
  }
  HitCount total;
  for (const HitCount& h : partial) {
    total.inside += h.inside;
    total.uncertain += h.uncertain;
  }
  VolumeEstimate e;
  e.method = VolumeMethod::kMonteCarlo;
  e.samples = n;
  e.seed = params.seed;
  e.confidence = params.confidence;
  e.uncertain = total.uncertain;
  const double hits = static_cast<double>(total.inside) + 0.5 * static_cast<double>(total.uncertain);
  e.value = box_volume * hits / static_cast<double>(n);
  e.lo = box_volume * ClopperPearson(total.inside, n, params.confidence).lo;
  e.hi = box_volume * ClopperPearson(total.inside + total.uncertain, n, params.confidence).hi;
  e.lo = std::min(e.lo, e.value);
  e.hi = std::max(e.hi, e.value);
  return e;
}

VolumeEstimate ExactArea2d(const BallRegion& region) {
  const NormBody& k = region.norm();
  if (region.dim() != 2) ThrowInvalid("exact_area_2d requires d = 2");
  if (!k.is_polytopal()) ThrowInvalid("exact_area_2d requires a polygonal norm");
  const std::vector<Vector>& centers = region.centers().points;
  const double r = region.radius();
  VolumeEstimate e;
  switch (region.kind()) {
    case RegionKind::kMolecule: {
      std::vector<planar::Polygon> balls;
      for (const Vector& c : centers) balls.push_back(planar::BallPolygon(k, c, r));
      e = VolumeEstimate::Exact(planar::ConvexUnionArea(balls));
      break;
    }
    case RegionKind::kPolyhedron:
      if (region.IsEmpty()) {
        e = VolumeEstimate::Exact(0.0);
        e.note = "empty";
      } else {
        e = VolumeEstimate::Exact(planar::SignedArea(planar::PolyhedronPolygon(centers, r, k)));
      }
      break;
    case RegionKind::kRHull:
      if (region.IsWholeSpace()) ThrowInvalid("the r-hull is all of space (cr > r)");
      e = VolumeEstimate::Exact(planar::SignedArea(planar::HullPolygon(centers, r, k)));
      break;
  }
  return e;
}

GridBounds ComputeGridBounds(const BallRegion& region, int resolution) {
  if (resolution < 2) ThrowInvalid("grid resolution must be at least 2");
  const int d = region.dim();
  const double cells_total = std::pow(static_cast<double>(resolution), d);
  if (cells_total > 1e8) ThrowInvalid("grid exceeds 1e8 cells");
  if (region.IsEmpty()) return {0.0, 0.0, 0};
  const NormBody& k = region.norm();
  std::vector<Slab> hull_slabs;
  if (region.kind() == RegionKind::kRHull) {
    if (!k.is_polytopal()) ThrowInvalid("grid bounds for r-hulls require a polytopal norm");
    if (region.IsWholeSpace()) ThrowInvalid("the r-hull is all of space (cr > r)");
    hull_slabs = HullSlabs(region.centers().points, region.radius(), k);
  }
  const Box box = region.SamplingBox();
  const Vector cell = (box.hi - box.lo) / static_cast<double>(resolution);
  const Vector half = cell / 2.0;
  double cell_volume = 1.0;
  for (int a = 0; a < d; ++a) cell_volume *= cell[a];

  // Gauge radius of the cell around its center: the largest corner gauge.
  double rho = 0.0;
  Vector corner(d);
  for (uint64_t mask = 0; mask < (uint64_t{1} << d); ++mask) {
    for (int a = 0; a < d; ++a) corner[a] = ((mask >> a) & 1) ? half[a] : -half[a];
    rho = std::max(rho, k.Gauge(corner));
  }
  std::vector<double> slab_spread;
  for (const Slab& s : hull_slabs) slab_spread.push_back(s.normal.cwiseAbs().dot(half));

  const std::vector<Vector>& centers = region.centers().points;
  const double r = region.radius();
  uint64_t inside = 0, boundary = 0;
  std::vector<int> idx(d, 0);
  Vector m(d);
  const uint64_t count = static_cast<uint64_t>(cells_total);
  for (uint64_t c = 0; c < count; ++c) {
    for (int a = 0; a < d; ++a) m[a] = box.lo[a] + (idx[a] + 0.5) * cell[a];
    bool in = false, out = false;
    switch (region.kind()) {
      case RegionKind::kMolecule: {
        double best = std::numeric_limits<double>::infinity();
        for (const Vector& ctr : centers) best = std::min(best, k.Gauge(Vector(m - ctr)));
        in = best + rho <= r;
        out = best - rho > r;
        break;
      }
      case RegionKind::kPolyhedron: {
        double worst = 0.0;
        for (const Vector& ctr : centers) worst = std::max(worst, k.Gauge(Vector(m - ctr)));
        in = worst + rho <= r;
        out = worst - rho > r;
        break;
      }
      case RegionKind::kRHull: {
        in = true;
        for (size_t s = 0; s < hull_slabs.size(); ++s) {
          const double v = hull_slabs[s].normal.dot(m);
          const double w = slab_spread[s];
          if (v - w < hull_slabs[s].lo || v + w > hull_slabs[s].hi) in = false;
          if (v + w < hull_slabs[s].lo || v - w > hull_slabs[s].hi) out = true;
        }
        if (out) in = false;
        break;
      }
    }
    if (in) {
      ++inside;
    } else if (!out) {
      ++boundary;
    }
    for (int a = 0; a < d; ++a) {
      if (++idx[a] < resolution) break;
      idx[a] = 0;
    }
  }
  return {cell_volume * static_cast<double>(inside),
          cell_volume * static_cast<double>(inside + boundary), count};
}

QuermassEstimate QuermassKubota(const BallRegion& molecule, int k, const QuermassParams& params) {
  const int d = molecule.dim();
  if (!IsEuclidean(molecule.norm())) ThrowInvalid("quermass_kubota requires the Euclidean norm");
  if (molecule.kind() != RegionKind::kMolecule) ThrowInvalid("quermass_kubota requires a molecule");
  if (k < 0 || k > d) ThrowInvalid("quermass index k must lie in [0, d]");
  QuermassEstimate q;
  q.k = k;
  q.dim = d;
  q.seed = params.seed;
  q.direction_samples = params.direction_samples;
  if (k == d) {
    q.value = q.lo = q.hi = UnitBallVolume(d);
    q.direction_samples = 0;
    return q;
  }
  if (k == 0) {
    const VolumeEstimate est = McVolume(
        molecule, {params.volume_samples, params.seed, params.confidence, params.jobs});
    q.value = est.value;
    q.lo = est.lo;
    q.hi = est.hi;
    q.direction_samples = 0;
    return q;
  }
  if (params.direction_samples == 0) ThrowInvalid("quermass_kubota needs direction samples");
  if (k < d - 1 && params.volume_samples == 0) {
    ThrowInvalid("quermass_kubota needs volume samples");
  }
  const Level level = Kubota(molecule.centers().points, molecule.radius(), d, k, params, params.seed);
  const double half = NormalQuantile(params.confidence) * std::sqrt(level.rel_var) * level.value;
  q.value = level.value;
  q.lo = std::max(0.0, level.value - half);
  q.hi = level.value + half;
  q.heuristic_interval = true;
  return q;
}

QuermassEstimate MeanWidthHull(const std::vector<Vector>& centers, double r, int dim,
                               const QuermassParams& params) {
  if (centers.empty()) ThrowInvalid("mean width needs at least one center");
  if (params.direction_samples == 0) ThrowInvalid("mean width needs direction samples");
  const uint64_t m = params.direction_samples;
  std::vector<double> widths(m);
  for (uint64_t j = 0; j < m; ++j) {
    const Vector u = RandomDirection(params.seed, j, dim);
    double up = -std::numeric_limits<double>::infinity();
    double down = -std::numeric_limits<double>::infinity();
    for (const Vector& c : centers) {
      const double t = c.dot(u);
      up = std::max(up, t);
      down = std::max(down, -t);
    }
    widths[j] = 0.5 * (up + down) + r;
  }
  double mean = 0.0;
  for (double w : widths) mean += w;
  mean /= static_cast<double>(m);
  double ss = 0.0;
  for (double w : widths) ss += (w - mean) * (w - mean);
  const double se = m > 1 ? std::sqrt(ss / static_cast<double>(m - 1) / static_cast<double>(m)) : 0.0;
  const double omega = UnitBallVolume(dim);
  QuermassEstimate q;
  q.k = dim - 1;
  q.dim = dim;
  q.value = omega * mean;
  q.lo = omega * std::max(0.0, mean - NormalQuantile(params.confidence) * se);
  q.hi = omega * (mean + NormalQuantile(params.confidence) * se);
  q.direction_samples = m;
  q.seed = params.seed;
  return q;
}

}  // namespace unicon

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

#include "unicon/ball_region.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "unicon/linear_program.h"
#include "unicon/rng.h"

namespace unicon {
namespace {

constexpr int kRayBisectionSteps = 64;
constexpr uint64_t kHullDirectionSeed = 0x6a09e667f3bcc908ull;

double RelativeSlack(double r) { return 1e-12 * std::max(1.0, r); }

// Quasi-uniform unit directions: an even fan in 2D, a Fibonacci lattice in
// 3D, normalized Gaussians otherwise.
std::vector<Vector> BoundaryDirections(int dim, int count) {
  std::vector<Vector> dirs;
  dirs.reserve(count);
  if (dim == 1) {
    dirs.push_back(Vector::Constant(1, 1.0));
    dirs.push_back(Vector::Constant(1, -1.0));
    return dirs;
  }
  for (int i = 0; i < count; ++i) {
    Vector u(dim);
    if (dim == 2) {
      const double angle = 2.0 * std::numbers::pi * (i + 0.5) / count;
      u << std::cos(angle), std::sin(angle);
    } else if (dim == 3) {
      const double z = 1.0 - (2.0 * i + 1.0) / count;
      const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
      const double phi = i * std::numbers::pi * (3.0 - std::sqrt(5.0));
      u << rho * std::cos(phi), rho * std::sin(phi), z;
    } else {
      CounterStream stream(kHullDirectionSeed, StreamPurpose::kDirections, i);
      for (int k = 0; k < dim; ++k) u[k] = stream.Normal();
      u.normalize();
    }
    dirs.push_back(u);
  }
  return dirs;
}

}  // namespace

std::string ToString(RegionKind kind) {
  switch (kind) {
    case RegionKind::kMolecule: return "molecule";
    case RegionKind::kPolyhedron: return "polyhedron";
    case RegionKind::kRHull: return "r_hull";
  }
  return "?";
}

std::vector<Slab> PolyhedronSlabs(std::span<const Vector> centers, double r,
                                  const NormBody& k) {
  std::vector<Slab> slabs;
  for (const Vector& a : k.facet_normals()) {
    double mx = -std::numeric_limits<double>::infinity();
    double mn = std::numeric_limits<double>::infinity();
    for (const Vector& c : centers) {
      const double v = a.dot(c);
      mx = std::max(mx, v);
      mn = std::min(mn, v);
    }
    slabs.push_back({a, mx - r, mn + r});
  }
  return slabs;
}

double SlabSupport(const std::vector<Slab>& slabs, const Vector& u) {
  LinearProgram lp(static_cast<int>(u.size()));
  lp.SetObjective(u, LpSense::kMaximize);
  for (const Slab& s : slabs) {
    lp.AddRow(s.normal, RowType::kGreaterEqual, s.lo);
    lp.AddRow(s.normal, RowType::kLessEqual, s.hi);
  }
  const LpSolution sol = lp.Solve();
  if (sol.status != LpStatus::kOptimal) {
    throw Error(ErrorKind::kNumerical, "slab support LP has no optimum (empty polyhedron?)");
  }
  return sol.objective;
}

std::vector<Slab> HullSlabs(std::span<const Vector> centers, double r,
                            const NormBody& k) {
  // y is in the hull iff ||y - z|| <= r for every z in the polyhedron, i.e.
  // h(X^r, a) - r <= a . y <= r - h(X^r, -a) for every facet normal a.
  const std::vector<Slab> poly = PolyhedronSlabs(centers, r, k);
  std::vector<Slab> hull;
  for (const Slab& s : poly) {
    const double up = SlabSupport(poly, s.normal);
    const double down = SlabSupport(poly, -s.normal);
    hull.push_back({s.normal, up - r, r - down});
  }
  return hull;
}

BallRegion::BallRegion(RegionKind kind, PointConfiguration centers, double r,
                       std::shared_ptr<const NormBody> norm, RegionOptions options)
    : kind_(kind),
      centers_(std::move(centers)),
      r_(r),
      norm_(std::move(norm)),
      options_(options) {
  if (!norm_) ThrowInvalid("region needs a norm");
  if (!(r_ > 0.0) || !std::isfinite(r_)) ThrowInvalid("region radius must be positive");
  centers_.Validate();
  if (centers_.dim != norm_->dim()) ThrowInvalid("region: center/norm dimension mismatch");
  if (kind_ == RegionKind::kMolecule) return;
  circumball_ = Circumradius(centers_, *norm_);
  // A certified lower bound above r proves emptiness; otherwise the witness
  // center keeps the region nonempty (equality counts as nonempty).
  const bool exceeds = circumball_->lower_bound > r_ * (1.0 + 1e-12);
  if (kind_ == RegionKind::kPolyhedron) empty_ = exceeds;
  if (kind_ == RegionKind::kRHull) {
    whole_space_ = exceeds;
    if (!whole_space_) PrepareHull();
  }
}

const Circumball& BallRegion::circumball() const {
  if (!circumball_) ThrowInvalid("circumball is only computed for polyhedra and r-hulls");
  return *circumball_;
}

bool BallRegion::IsEmpty() const { return empty_; }
bool BallRegion::IsWholeSpace() const { return whole_space_; }

void BallRegion::PrepareHull() {
  if (norm_->is_polytopal()) {
    hull_slabs_ = std::make_shared<const std::vector<Slab>>(
        HullSlabs(centers_.points, r_, *norm_));
    return;
  }
  // Boundary of the polyhedron by ray shooting from the circumcenter, which
  // lies inside it because cr <= r.
  const int d = dim();
  const Vector& origin = circumball_->center;
  std::vector<Vector> offsets;
  for (const Vector& c : centers_.points) offsets.push_back(origin - c);
  auto reach = [&](const Vector& u, double t) {
    double worst = 0.0;
    for (const Vector& w : offsets) worst = std::max(worst, norm_->Gauge(w + t * u));
    return worst;
  };
  const int count = options_.hull_directions_per_dim * d;
  auto boundary = std::make_shared<std::vector<double>>();
  boundary->reserve(static_cast<size_t>(count) * d);
  for (const Vector& u : BoundaryDirections(d, count)) {
    double t_max;
    if (norm_->kind() == NormKind::kEuclidean) {
      t_max = std::numeric_limits<double>::infinity();
      for (const Vector& w : offsets) {
        const double b = w.dot(u);
        const double disc = b * b - w.squaredNorm() + r_ * r_;
        t_max = std::min(t_max, -b + std::sqrt(std::max(0.0, disc)));
      }
    } else {
      double lo = 0.0;
      double hi = 2.0 * r_ / norm_->Gauge(u) + 1e-12;
      for (int step = 0; step < kRayBisectionSteps; ++step) {
        const double mid = 0.5 * (lo + hi);
        (reach(u, mid) <= r_ ? lo : hi) = mid;
      }
      t_max = lo;
    }
    const Vector z = origin + t_max * u;
    boundary->insert(boundary->end(), z.data(), z.data() + d);
  }
  hull_boundary_ = std::move(boundary);
}

Membership BallRegion::Classify(std::span<const double> y) const {
  const int d = dim();
  if (static_cast<int>(y.size()) != d) ThrowInvalid("membership: dimension mismatch");
  std::vector<double> diff(d);
  auto gauge_to = [&](const Vector& c) {
    for (int k = 0; k < d; ++k) diff[k] = y[k] - c[k];
    return norm_->Gauge(diff);
  };
  switch (kind_) {
    case RegionKind::kMolecule:
      for (const Vector& c : centers_.points) {
        if (gauge_to(c) <= r_) return Membership::kInside;
      }
      return Membership::kOutside;
    case RegionKind::kPolyhedron:
      if (empty_) return Membership::kOutside;
      for (const Vector& c : centers_.points) {
        if (gauge_to(c) > r_) return Membership::kOutside;
      }
      return Membership::kInside;
    case RegionKind::kRHull: {
      if (whole_space_) return Membership::kInside;
      const Circumball& ball = *circumball_;
      if (gauge_to(ball.center) > ball.radius + RelativeSlack(ball.radius)) {
        return Membership::kOutside;
      }
      if (hull_slabs_) {
        const double slack = RelativeSlack(r_);
        for (const Slab& s : *hull_slabs_) {
          double v = 0.0;
          for (int k = 0; k < d; ++k) v += s.normal[k] * y[k];
          if (v < s.lo - slack || v > s.hi + slack) return Membership::kOutside;
        }
        return Membership::kInside;
      }
      const double band = options_.hull_band * r_;
      const std::vector<double>& pts = *hull_boundary_;
      double sup = 0.0;
      for (size_t off = 0; off < pts.size(); off += d) {
        for (int k = 0; k < d; ++k) diff[k] = y[k] - pts[off + k];
        sup = std::max(sup, norm_->Gauge(diff));
        if (sup > r_ + band) return Membership::kOutside;
      }
      return sup < r_ - band ? Membership::kInside : Membership::kUncertain;
    }
  }
  return Membership::kOutside;
}

Membership BallRegion::Classify(const Vector& y) const {
  return Classify(std::span<const double>(y.data(), static_cast<size_t>(y.size())));
}

bool BallRegion::Contains(const Vector& y) const {
  return Classify(y) != Membership::kOutside;
}

Box BallRegion::SamplingBox() const {
  const int d = dim();
  switch (kind_) {
    case RegionKind::kMolecule:
      return norm_->BoundingBox(centers_.points, r_);
    case RegionKind::kPolyhedron: {
      Box box{Vector::Constant(d, -std::numeric_limits<double>::infinity()),
              Vector::Constant(d, std::numeric_limits<double>::infinity())};
      for (const Vector& c : centers_.points) {
        const Box ball = norm_->BoundingBox(std::span<const Vector>(&c, 1), r_);
        box.lo = box.lo.cwiseMax(ball.lo);
        box.hi = box.hi.cwiseMin(ball.hi);
      }
      box.hi = box.hi.cwiseMax(box.lo);
      return box;
    }
    case RegionKind::kRHull: {
      if (whole_space_) ThrowInvalid("the r-hull is all of space (cr > r)");
      const Circumball& ball = *circumball_;
      const double rad = ball.radius + RelativeSlack(ball.radius);
      return norm_->BoundingBox(std::span<const Vector>(&ball.center, 1), rad);
    }
  }
  ThrowInvalid("unknown region kind");
}

bool Contains(const BallRegion& region, const Vector& y) { return region.Contains(y); }
bool IsEmpty(const BallRegion& region) { return region.IsEmpty(); }

}  // namespace unicon

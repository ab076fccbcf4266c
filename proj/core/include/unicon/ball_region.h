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

#ifndef UNICON_BALL_REGION_H_
#define UNICON_BALL_REGION_H_

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "unicon/common.h"
#include "unicon/configurations.h"
#include "unicon/norm_body.h"

namespace unicon {

enum class RegionKind {
  kMolecule,    // union of r-balls
  kPolyhedron,  // intersection of r-balls
  kRHull,       // intersection of all r-balls containing the centers
};

std::string ToString(RegionKind kind);

enum class Membership { kOutside, kInside, kUncertain };

struct RegionOptions {
  // Boundary directions per dimension for r-hull membership under
  // non-polytopal norms.
  int hull_directions_per_dim = 4096;
  // Relative half-width of the r-hull "uncertain" band.
  double hull_band = 1e-6;
};

// lo <= a . y <= hi.
struct Slab {
  Vector normal;
  double lo;
  double hi;
};

// Polytopal K only. The r-ball polyhedron of `centers` is the intersection of
// these slabs (one per facet pair of K).
std::vector<Slab> PolyhedronSlabs(std::span<const Vector> centers, double r,
                                  const NormBody& k);
// Polytopal K only, nonempty polyhedron. The r-ball hull is again an
// intersection of slabs with the facet normals of K; offsets come from the
// support function of the polyhedron, evaluated by linear programming.
std::vector<Slab> HullSlabs(std::span<const Vector> centers, double r,
                            const NormBody& k);
// max { u . z : z in intersection of slabs } (linear program).
double SlabSupport(const std::vector<Slab>& slabs, const Vector& u);

// Membership oracle for a molecule, polyhedron, or r-hull.
class BallRegion {
 public:
  BallRegion(RegionKind kind, PointConfiguration centers, double r,
             std::shared_ptr<const NormBody> norm, RegionOptions options = {});

  RegionKind kind() const { return kind_; }
  const PointConfiguration& centers() const { return centers_; }
  double radius() const { return r_; }
  const NormBody& norm() const { return *norm_; }
  std::shared_ptr<const NormBody> norm_ptr() const { return norm_; }
  int dim() const { return norm_->dim(); }

  // Circumball of the centers (polyhedron and r-hull only).
  const Circumball& circumball() const;

  // Polyhedron: cr_K(centers) > r (equality counts as nonempty). Molecule and
  // r-hull: never.
  bool IsEmpty() const;
  // r-hull when cr_K(centers) > r.
  bool IsWholeSpace() const;

  Membership Classify(std::span<const double> y) const;
  Membership Classify(const Vector& y) const;
  // Uncertain points count as members.
  bool Contains(const Vector& y) const;

  // Bounded superset of the region used for sampling and grids. Throws for
  // the whole-space hull.
  Box SamplingBox() const;

 private:
  void PrepareHull();

  RegionKind kind_;
  PointConfiguration centers_;
  double r_;
  std::shared_ptr<const NormBody> norm_;
  RegionOptions options_;
  std::optional<Circumball> circumball_;
  bool empty_ = false;
  bool whole_space_ = false;
  // r-hull data: slabs for polytopal norms, boundary samples otherwise.
  std::shared_ptr<const std::vector<Slab>> hull_slabs_;
  std::shared_ptr<const std::vector<double>> hull_boundary_;
};

// Free-function forms.
bool Contains(const BallRegion& region, const Vector& y);
bool IsEmpty(const BallRegion& region);

}  // namespace unicon

#endif  // UNICON_BALL_REGION_H_

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

#ifndef UNICON_NORM_BODY_H_
#define UNICON_NORM_BODY_H_

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "unicon/common.h"
#include "unicon/estimate.h"

namespace unicon {

enum class NormKind { kEuclidean, kLp, kPolytopeH, kPolytopeV };
enum class Generating { kYes, kNo, kUnknown };

std::string ToString(NormKind kind);
std::string ToString(Generating g);

// Serializable description of a unit ball. `p` is used by kLp only and may be
// +infinity. `normals` describe K = {x : |a_i . x| <= 1}; `vertices` describe
// K = conv(+-v_j). `blocks` optionally declares a coordinate partition for the
// direct-sum test of the generating-set classifier.
struct NormDescriptor {
  NormKind kind = NormKind::kEuclidean;
  int dim = 0;
  double p = 2.0;
  std::vector<Vector> normals;
  std::vector<Vector> vertices;
  std::vector<std::vector<int>> blocks;
};

// Axis-aligned box.
struct Box {
  Vector lo;
  Vector hi;
  double Volume() const;
  int dim() const { return static_cast<int>(lo.size()); }
};

// An o-symmetric convex body K and the Minkowski norm it generates.
// Immutable after construction; all queries are const and thread-safe.
class NormBody {
 public:
  explicit NormBody(NormDescriptor descriptor);

  static NormBody Euclidean(int dim);
  static NormBody Lp(int dim, double p);
  static NormBody L1(int dim) { return Lp(dim, 1.0); }
  static NormBody LInf(int dim);
  static NormBody FromNormals(std::vector<Vector> normals,
                              std::vector<std::vector<int>> blocks = {});
  static NormBody FromVertices(std::vector<Vector> vertices,
                               std::vector<std::vector<int>> blocks = {});

  int dim() const { return dim_; }
  NormKind kind() const { return descriptor_.kind; }
  double p() const { return descriptor_.p; }
  const NormDescriptor& descriptor() const { return descriptor_; }
  std::string Name() const;

  // ||x||_K. Closed form for every representation (polytopes use their
  // facet normals).
  double Gauge(std::span<const double> x) const;
  double Gauge(const Vector& x) const;
  // Independent route for polytopes: min { t : x in t * conv(+-v_j) } solved as
  // a linear program over the vertex list.
  double GaugeByLp(const Vector& x) const;

  // h_K(u) = max { x . u : x in K }. Throws for u = 0.
  double Support(const Vector& u) const;
  // Polytopes only: the support function as a linear program over the facet
  // inequalities.
  double SupportByLp(const Vector& u) const;

  const VolumeEstimate& unit_volume() const { return unit_volume_; }
  Generating generating() const { return generating_; }

  // Unit balls whose boundary is a finite union of facets: polytope reps and
  // l1 / l-infinity.
  bool is_polytopal() const { return polytope_ != nullptr; }
  // One normal per facet pair +-a (K = {|a.x| <= 1}); canonical order.
  const std::vector<Vector>& facet_normals() const;
  // All vertices including negatives; canonical order.
  const std::vector<Vector>& vertices() const;
  // d = 2 polytopal only: the vertex cycle in counter-clockwise order.
  std::vector<Eigen::Vector2d> PolygonCycle() const;

  // Superset of the r-ball molecule of `centers`.
  Box BoundingBox(std::span<const Vector> centers, double r) const;

 private:
  struct Polytope {
    std::vector<Vector> normals;
    std::vector<Vector> vertices;
    // Row-major copy of `normals` for the hot gauge loop.
    std::vector<double> normal_data;
  };

  void BuildPolytope();
  void ComputeUnitVolume();
  void Classify();

  int dim_;
  NormDescriptor descriptor_;
  std::shared_ptr<const Polytope> polytope_;
  std::vector<double> axis_support_;
  VolumeEstimate unit_volume_;
  Generating generating_ = Generating::kUnknown;
};

// Standalone entry points mirroring the member functions.
double Gauge(const NormBody& k, const Vector& x);
double Support(const NormBody& k, const Vector& u);
VolumeEstimate UnitBallVolume(const NormBody& k);
Generating ClassifyGenerating(const NormBody& k);

// Facet/vertex conversion for o-symmetric polytopes (exposed for tests).
// Facets: one normal per +- pair with |a.x| <= 1 describing conv(vertices).
std::vector<Vector> FacetsFromVertices(const std::vector<Vector>& vertices,
                                       double tol);
// Vertices (including negatives) of {x : |a_i . x| <= 1}.
std::vector<Vector> VerticesFromNormals(const std::vector<Vector>& normals,
                                        double tol);

}  // namespace unicon

#endif  // UNICON_NORM_BODY_H_

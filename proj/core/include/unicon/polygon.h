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

#ifndef UNICON_POLYGON_H_
#define UNICON_POLYGON_H_

#include <vector>

#include <Eigen/Dense>

#include "unicon/ball_region.h"

namespace unicon::planar {

using Point = Eigen::Vector2d;
// Convex polygon, vertices in counter-clockwise order.
using Polygon = std::vector<Point>;

double Cross(const Point& a, const Point& b);
double SignedArea(const Polygon& poly);
// max { u . x : x in poly }; -inf for the empty polygon.
double Support(const Polygon& poly, const Point& u);

// Keeps the part of `poly` with n . x <= c. Vertices within `eps` of the line
// are kept unmoved, so that zero-width slabs leave a segment or point.
Polygon ClipHalfPlane(const Polygon& poly, const Point& n, double c, double eps = 0.0);
Polygon ClipSlabs(Polygon poly, const std::vector<Slab>& slabs);

// center + r * K for a 2D polytopal norm.
Polygon BallPolygon(const NormBody& k, const Vector& center, double r);

// Area of a union of convex polygons. Each polygon edge contributes the
// pieces not covered by any other polygon; overlapping collinear edges are
// attributed once (same orientation) or dropped (opposite orientation).
double ConvexUnionArea(const std::vector<Polygon>& polygons);

// Exact convex polygons of the r-ball polyhedron and r-hull (2D polytopal).
// The polyhedron is empty when the centers have circumradius > r; at
// circumradius = r it degenerates to a point or a segment (fewer than three
// vertices).
Polygon PolyhedronPolygon(const std::vector<Vector>& centers, double r,
                          const NormBody& k);
Polygon HullPolygon(const std::vector<Vector>& centers, double r,
                    const NormBody& k);

}  // namespace unicon::planar

#endif  // UNICON_POLYGON_H_

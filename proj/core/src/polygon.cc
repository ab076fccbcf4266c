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

#include "unicon/polygon.h"

#include <algorithm>
#include <cmath>
#include <limits>

namespace unicon::planar {
namespace {

Point ToPoint(const Vector& v) { return Point(v[0], v[1]); }

double Scale(const std::vector<Polygon>& polys) {
  double s = 1.0;
  for (const Polygon& p : polys) {
    for (const Point& v : p) s = std::max(s, v.cwiseAbs().maxCoeff());
  }
  return s;
}

// Removes consecutive near-duplicate vertices left behind by clipping.
Polygon Simplify(const Polygon& poly, double eps) {
  Polygon out;
  for (const Point& v : poly) {
    if (out.empty() || (v - out.back()).lpNorm<Eigen::Infinity>() > eps) out.push_back(v);
  }
  while (out.size() > 1 && (out.front() - out.back()).lpNorm<Eigen::Infinity>() <= eps) {
    out.pop_back();
  }
  return out;
}

}  // namespace

double Cross(const Point& a, const Point& b) { return a.x() * b.y() - a.y() * b.x(); }

double SignedArea(const Polygon& poly) {
  if (poly.size() < 3) return 0.0;
  const Point& o = poly.front();
  double twice = 0.0;
  for (size_t i = 1; i + 1 < poly.size(); ++i) twice += Cross(poly[i] - o, poly[i + 1] - o);
  return 0.5 * twice;
}

double Support(const Polygon& poly, const Point& u) {
  double best = -std::numeric_limits<double>::infinity();
  for (const Point& v : poly) best = std::max(best, u.dot(v));
  return best;
}

Polygon ClipHalfPlane(const Polygon& poly, const Point& n, double c, double eps) {
  Polygon out;
  const size_t m = poly.size();
  for (size_t i = 0; i < m; ++i) {
    const Point& a = poly[i];
    const Point& b = poly[(i + 1) % m];
    const double fa = n.dot(a) - c;
    const double fb = n.dot(b) - c;
    const bool in_a = fa <= eps, in_b = fb <= eps;
    if (in_a) out.push_back(a);
    if (in_a != in_b && (fa < 0.0 || fb < 0.0) && (fa > 0.0 || fb > 0.0)) {
      const double t = std::clamp(fa / (fa - fb), 0.0, 1.0);
      out.push_back(a + t * (b - a));
    }
  }
  return out;
}

Polygon ClipSlabs(Polygon poly, const std::vector<Slab>& slabs) {
  double scale = 1.0;
  for (const Point& v : poly) scale = std::max(scale, v.cwiseAbs().maxCoeff());
  for (const Slab& s : slabs) {
    const Point n = ToPoint(s.normal);
    poly = ClipHalfPlane(poly, n, s.hi, 1e-13 * scale);
    poly = ClipHalfPlane(poly, -n, -s.lo, 1e-13 * scale);
    if (poly.empty()) break;
  }
  return Simplify(poly, 1e-14 * scale);
}

Polygon BallPolygon(const NormBody& k, const Vector& center, double r) {
  Polygon poly;
  const Point c = ToPoint(center);
  for (const Point& v : k.PolygonCycle()) poly.push_back(c + r * v);
  return poly;
}

double ConvexUnionArea(const std::vector<Polygon>& input) {
  std::vector<Polygon> polys;
  for (const Polygon& p : input) {
    if (p.size() < 3) continue;
    const bool duplicate = std::any_of(polys.begin(), polys.end(), [&](const Polygon& q) {
      if (q.size() != p.size()) return false;
      for (size_t i = 0; i < p.size(); ++i) {
        if ((q[i] - p[i]).lpNorm<Eigen::Infinity>() > 0.0) return false;
      }
      return true;
    });
    if (!duplicate) polys.push_back(p);
  }
  if (polys.empty()) return 0.0;
  const double scale = Scale(polys);
  const double eps = 1e-12 * scale;

  // Accumulate boundary contributions relative to a local origin.
  const Point origin = polys.front().front();
  double twice = 0.0;
  std::vector<std::pair<double, double>> covered;
  for (size_t i = 0; i < polys.size(); ++i) {
    const Polygon& pi = polys[i];
    for (size_t e = 0; e < pi.size(); ++e) {
      const Point a = pi[e];
      const Point b = pi[(e + 1) % pi.size()];
      const Point dir = b - a;
      if (dir.norm() <= eps) continue;
      const Point outward = Point(dir.y(), -dir.x()).normalized();
      covered.clear();
      for (size_t j = 0; j < polys.size(); ++j) {
        if (j == i) continue;
        const Polygon& pj = polys[j];
        double t_lo = 0.0, t_hi = 1.0;
        for (size_t f = 0; f < pj.size() && t_lo < t_hi; ++f) {
          const Point fa_pt = pj[f];
          const Point fdir = pj[(f + 1) % pj.size()] - fa_pt;
          if (fdir.norm() <= eps) continue;
          const Point n = Point(fdir.y(), -fdir.x()).normalized();
          const double c = n.dot(fa_pt);
          const double fa = n.dot(a) - c;
          const double fb = n.dot(b) - c;
          if (std::abs(fa) <= eps && std::abs(fb) <= eps) {
            // Collinear boundary pieces: same orientation is owned by the
            // lower index; opposite orientation means both sides are covered.
            const bool same = n.dot(outward) > 0.0;
            if (same && j > i) t_hi = t_lo;
            continue;
          }
          if (std::abs(fa - fb) <= eps * 1e-3) {
            if (fa >= 0.0) t_hi = t_lo;
            continue;
          }
          const double t0 = fa / (fa - fb);
          if (fb < fa) {
            t_lo = std::max(t_lo, t0);
          } else {
            t_hi = std::min(t_hi, t0);
          }
        }
        if (t_hi > t_lo) covered.emplace_back(t_lo, t_hi);
      }
      std::sort(covered.begin(), covered.end());
      double t = 0.0;
      auto emit = [&](double t0, double t1) {
        if (t1 <= t0) return;
        const Point p0 = a + t0 * dir - origin;
        const Point p1 = a + t1 * dir - origin;
        twice += Cross(p0, p1);
      };
      for (const auto& [lo, hi] : covered) {
        if (lo > t) emit(t, lo);
        t = std::max(t, hi);
      }
      emit(t, 1.0);
    }
  }
  return 0.5 * twice;
}

Polygon PolyhedronPolygon(const std::vector<Vector>& centers, double r, const NormBody& k) {
  if (centers.empty()) return {};
  std::vector<Slab> slabs = PolyhedronSlabs(centers, r, k);
  const double eps = 1e-12 * std::max(1.0, r);
  for (Slab& s : slabs) {
    if (s.lo > s.hi + eps) return {};
    // Touching balls (cr = r): collapse rounding-level infeasibility.
    if (s.lo > s.hi) s.lo = s.hi = 0.5 * (s.lo + s.hi);
  }
  return ClipSlabs(BallPolygon(k, centers.front(), r), slabs);
}

Polygon HullPolygon(const std::vector<Vector>& centers, double r, const NormBody& k) {
  const Polygon body = PolyhedronPolygon(centers, r, k);
  if (body.empty()) ThrowInvalid("the r-hull is all of space (cr > r)");
  std::vector<Slab> hull;
  for (const Vector& a : k.facet_normals()) {
    const Point n = ToPoint(a);
    Slab s{a, Support(body, n) - r, r - Support(body, -n)};
    // A single center gives zero-width slabs that rounding can invert.
    if (s.lo > s.hi) s.lo = s.hi = 0.5 * (s.lo + s.hi);
    hull.push_back(s);
  }
  Vector anchor(2);
  anchor << body.front().x(), body.front().y();
  return ClipSlabs(BallPolygon(k, anchor, r), hull);
}

}  // namespace unicon::planar

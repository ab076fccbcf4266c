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

#include "unicon/configurations.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "unicon/linear_program.h"

namespace unicon {
namespace {

constexpr int kEllipsoidMaxIterations = 20000;
constexpr double kEllipsoidRelativeGap = 1e-10;

Vector Centroid(const std::vector<Vector>& pts) {
  Vector c = Vector::Zero(pts.front().size());
  for (const Vector& p : pts) c += p;
  return c / static_cast<double>(pts.size());
}

double MaxGauge(const std::vector<Vector>& pts, const NormBody& k, const Vector& x) {
  double r = 0.0;
  for (const Vector& p : pts) r = std::max(r, k.Gauge(p - x));
  return r;
}

// ----- Euclidean: move-to-front Welzl -----

struct Ball {
  Vector center;
  double radius_sq = -1.0;  // negative: empty ball
};

Ball BallFromSupport(const std::vector<Vector>& support) {
  Ball ball;
  if (support.empty()) return ball;
  const Vector& s0 = support.front();
  if (support.size() == 1) {
    ball.center = s0;
    ball.radius_sq = 0.0;
    return ball;
  }
  const int k = static_cast<int>(support.size()) - 1;
  Matrix gram(k, k);
  Vector rhs(k);
  for (int i = 0; i < k; ++i) {
    const Vector di = support[i + 1] - s0;
    rhs[i] = 0.5 * di.squaredNorm();
    for (int j = 0; j < k; ++j) gram(i, j) = di.dot(support[j + 1] - s0);
  }
  const Vector alpha = gram.colPivHouseholderQr().solve(rhs);
  ball.center = s0;
  for (int i = 0; i < k; ++i) ball.center += alpha[i] * (support[i + 1] - s0);
  ball.radius_sq = 0.0;
  for (const Vector& s : support) {
    ball.radius_sq = std::max(ball.radius_sq, (s - ball.center).squaredNorm());
  }
  return ball;
}

bool InBall(const Ball& ball, const Vector& p) {
  if (ball.radius_sq < 0.0) return false;
  const double slack = 1e-12 * std::max(1.0, ball.radius_sq);
  return (p - ball.center).squaredNorm() <= ball.radius_sq + slack;
}

Ball MoveToFront(std::vector<Vector>& pts, int end, std::vector<Vector>& support,
                 int dim) {
  Ball ball = BallFromSupport(support);
  if (static_cast<int>(support.size()) == dim + 1) return ball;
  for (int i = 0; i < end; ++i) {
    if (InBall(ball, pts[i])) continue;
    support.push_back(pts[i]);
    ball = MoveToFront(pts, i, support, dim);
    support.pop_back();
    std::rotate(pts.begin(), pts.begin() + i, pts.begin() + i + 1);
  }
  return ball;
}

Circumball WelzlCircumball(const std::vector<Vector>& points, int dim) {
  std::vector<Vector> pts = points;
  std::vector<Vector> support;
  const Ball ball = MoveToFront(pts, static_cast<int>(pts.size()), support, dim);
  Circumball result;
  result.center = ball.center;
  result.radius = std::sqrt(std::max(0.0, ball.radius_sq));
  for (const Vector& p : points) result.radius = std::max(result.radius, (p - ball.center).norm());
  result.lower_bound = result.radius;
  result.method = CircumradiusMethod::kWelzl;
  return result;
}

// ----- Polytopal gauges: linear programs over the facet normals -----

LpSolution SolveOrThrow(const LinearProgram& lp) {
  LpSolution sol = lp.Solve();
  if (sol.status != LpStatus::kOptimal) {
    throw Error(ErrorKind::kNumerical, "circumradius LP did not reach an optimum");
  }
  return sol;
}

Circumball PolytopalCircumball(const std::vector<Vector>& points, const NormBody& k) {
  const int d = k.dim();
  const auto& normals = k.facet_normals();
  std::vector<double> hi, lo;
  double scale = 1.0;
  for (const Vector& a : normals) {
    double mx = -std::numeric_limits<double>::infinity();
    double mn = std::numeric_limits<double>::infinity();
    for (const Vector& p : points) {
      const double v = a.dot(p);
      mx = std::max(mx, v);
      mn = std::min(mn, v);
    }
    hi.push_back(mx);
    lo.push_back(mn);
    scale = std::max({scale, std::abs(mx), std::abs(mn)});
  }

  // Stage 1: min R  s.t.  a.x + R >= max_j a.p_j,  a.x - R <= min_j a.p_j.
  LinearProgram radius_lp(d + 1);
  radius_lp.SetNonNegative(d);
  radius_lp.SetObjective(Vector::Unit(d + 1, d), LpSense::kMinimize);
  for (size_t f = 0; f < normals.size(); ++f) {
    Vector row(d + 1);
    row.head(d) = normals[f];
    row[d] = 1.0;
    radius_lp.AddRow(row, RowType::kGreaterEqual, hi[f]);
    row[d] = -1.0;
    radius_lp.AddRow(row, RowType::kLessEqual, lo[f]);
  }
  const double radius = SolveOrThrow(radius_lp).objective;
  const double slack = 1e-12 * (scale + radius);
  const double r_fix = radius + slack;

  // Stage 2: among optimal centers, minimize the l-infinity distance s to the
  // centroid. Stage 3: lexicographic minimization of the coordinates.
  const Vector centroid = Centroid(points);
  LinearProgram center_lp(d + 1);
  center_lp.SetNonNegative(d);
  for (size_t f = 0; f < normals.size(); ++f) {
    Vector row = Vector::Zero(d + 1);
    row.head(d) = normals[f];
    center_lp.AddRow(row, RowType::kGreaterEqual, hi[f] - r_fix);
    center_lp.AddRow(row, RowType::kLessEqual, lo[f] + r_fix);
  }
  for (int i = 0; i < d; ++i) {
    Vector row = Vector::Zero(d + 1);
    row[i] = 1.0;
    row[d] = -1.0;
    center_lp.AddRow(row, RowType::kLessEqual, centroid[i]);
    row[d] = 1.0;
    center_lp.AddRow(row, RowType::kGreaterEqual, centroid[i]);
  }
  center_lp.SetObjective(Vector::Unit(d + 1, d), LpSense::kMinimize);
  LpSolution sol = SolveOrThrow(center_lp);
  center_lp.AddRow(Vector::Unit(d + 1, d), RowType::kLessEqual, sol.objective + slack);
  for (int i = 0; i < d; ++i) {
    center_lp.SetObjective(Vector::Unit(d + 1, i), LpSense::kMinimize);
    sol = SolveOrThrow(center_lp);
    center_lp.AddRow(Vector::Unit(d + 1, i), RowType::kLessEqual, sol.x[i] + slack);
  }

  Circumball result;
  result.center = sol.x.head(d);
  result.radius = radius;
  result.lower_bound = radius;
  result.method = CircumradiusMethod::kLinearProgram;
  return result;
}

// ----- General gauges: central-cut ellipsoid method -----

Vector GaugeGradient(const NormBody& k, const Vector& y) {
  const double norm = k.Gauge(y);
  Vector g = Vector::Zero(y.size());
  if (norm == 0.0) return g;
  const double p = k.kind() == NormKind::kLp ? k.p() : 2.0;
  for (int i = 0; i < y.size(); ++i) {
    const double ratio = std::abs(y[i]) / norm;
    g[i] = (y[i] < 0 ? -1.0 : 1.0) * std::pow(ratio, p - 1.0);
  }
  return g;
}

Circumball EllipsoidCircumball(const std::vector<Vector>& points, const NormBody& k,
                               double diameter) {
  const int n = k.dim();
  Vector lo = points.front(), hi = points.front();
  for (const Vector& p : points) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  // The optimal center lies in the convex hull of the points, hence in this
  // Euclidean ball.
  Vector x = 0.5 * (lo + hi);
  const double r0 = 0.5 * (hi - lo).norm() + 1e-12;
  Matrix shape = Matrix::Identity(n, n) * r0 * r0;

  Circumball best;
  best.center = x;
  best.radius = MaxGauge(points, k, x);
  double lower = 0.5 * diameter;
  const double nn = static_cast<double>(n);
  for (int iter = 0; iter < kEllipsoidMaxIterations; ++iter) {
    int active = 0;
    double f = -1.0;
    for (size_t j = 0; j < points.size(); ++j) {
      const double v = k.Gauge(points[j] - x);
      if (v > f) {
        f = v;
        active = static_cast<int>(j);
      }
    }
    if (f < best.radius) {
      best.radius = f;
      best.center = x;
    }
    const Vector g = -GaugeGradient(k, points[active] - x);
    const double gpg = g.dot(shape * g);
    if (!(gpg > 0.0)) {
      lower = std::max(lower, f);
      break;
    }
    lower = std::max(lower, f - std::sqrt(gpg));
    if (best.radius - lower <= kEllipsoidRelativeGap * std::max(1.0, best.radius)) break;
    const Vector step = shape * g / std::sqrt(gpg);
    x -= step / (nn + 1.0);
    shape = (nn * nn / (nn * nn - 1.0)) * (shape - (2.0 / (nn + 1.0)) * step * step.transpose());
    shape = 0.5 * (shape + shape.transpose());
  }
  best.lower_bound = std::min(lower, best.radius);
  best.exact = best.radius - best.lower_bound <=
               kEllipsoidRelativeGap * std::max(1.0, best.radius);
  best.method = CircumradiusMethod::kEllipsoid;
  return best;
}

PairDistance ExtremePair(const PointConfiguration& x, const NormBody& k, bool want_max) {
  x.Validate();
  if (x.dim != k.dim()) ThrowInvalid("configuration/norm dimension mismatch");
  PairDistance best;
  if (x.size() < 2) return best;
  best.distance = want_max ? -1.0 : std::numeric_limits<double>::infinity();
  for (int i = 0; i < x.size(); ++i) {
    for (int j = i + 1; j < x.size(); ++j) {
      const double dist = k.Gauge(x.points[i] - x.points[j]);
      if (want_max ? dist > best.distance : dist < best.distance) best = {dist, i, j};
    }
  }
  return best;
}

}  // namespace

PointConfiguration::PointConfiguration(int d, std::vector<Vector> pts, std::string name)
    : dim(d), points(std::move(pts)), label(std::move(name)) {}

void PointConfiguration::Validate() const {
  if (points.empty()) ThrowInvalid("point configuration is empty");
  for (const Vector& p : points) {
    if (p.size() != dim) ThrowInvalid("point dimension mismatch in '" + label + "'");
    if (!p.allFinite()) ThrowInvalid("non-finite coordinate in '" + label + "'");
  }
}

PairDistance MinPairDistance(const PointConfiguration& x, const NormBody& k) {
  PairDistance p = ExtremePair(x, k, false);
  if (p.i < 0) p.distance = 0.0;
  return p;
}

PairDistance MaxPairDistance(const PointConfiguration& x, const NormBody& k) {
  PairDistance p = ExtremePair(x, k, true);
  if (p.i < 0) p.distance = 0.0;
  return p;
}

double Diameter(const PointConfiguration& x, const NormBody& k) {
  return MaxPairDistance(x, k).distance;
}

Circumball Circumradius(const PointConfiguration& x, const NormBody& k) {
  x.Validate();
  if (x.dim != k.dim()) ThrowInvalid("configuration/norm dimension mismatch");
  Circumball result;
  if (x.size() == 1) {
    result.center = x.points.front();
    return result;
  }
  if (k.dim() == 1) {
    double lo = x.points.front()[0], hi = lo;
    for (const Vector& p : x.points) {
      lo = std::min(lo, p[0]);
      hi = std::max(hi, p[0]);
    }
    result.center = Vector::Constant(1, 0.5 * (lo + hi));
    result.radius = MaxGauge(x.points, k, result.center);
    result.lower_bound = result.radius;
    return result;
  }
  if (k.is_polytopal()) return PolytopalCircumball(x.points, k);
  if (k.kind() == NormKind::kEuclidean || k.p() == 2.0) return WelzlCircumball(x.points, k.dim());
  return EllipsoidCircumball(x.points, k, Diameter(x, k));
}

double VolumetricRadius(double volume, double unit_volume, int dim) {
  if (!(volume > 0.0)) ThrowInvalid("volumetric radius needs a positive volume");
  if (!(unit_volume > 0.0)) ThrowInvalid("volumetric radius needs V_d(K) > 0");
  return std::pow(volume / unit_volume, 1.0 / dim);
}

double VolumetricRadius(double volume, const NormBody& k) {
  return VolumetricRadius(volume, k.unit_volume().value, k.dim());
}

std::string ContractionCertificate::Describe() const {
  std::ostringstream os;
  os.precision(17);
  os << (pass ? "PASS" : "FAIL") << " lambda=" << lambda
     << " min|p_i-p_j|=" << p_min.distance << " max|q_i-q_j|=" << q_max.distance;
  if (violation) {
    os << " violation: " << violation->side << "-pair (" << violation->i << ","
       << violation->j << ") margin " << violation->margin;
  }
  return os.str();
}

ContractionCertificate CertifyUniformContraction(const PointConfiguration& p,
                                                 const PointConfiguration& q,
                                                 double lambda, const NormBody& k,
                                                 double tol) {
  if (p.size() != q.size()) ThrowInvalid("P and Q must have the same cardinality");
  if (p.size() < 2) ThrowInvalid("uniform contraction needs N >= 2");
  if (!(lambda > 0.0)) ThrowInvalid("separating value must be positive");
  ContractionCertificate cert;
  cert.lambda = lambda;
  cert.p_min = MinPairDistance(p, k);
  cert.q_max = MaxPairDistance(q, k);
  if (cert.p_min.distance < lambda - tol) {
    cert.p_violation = PairViolation{'P', cert.p_min.i + 1, cert.p_min.j + 1,
                                     lambda - cert.p_min.distance};
  }
  if (cert.q_max.distance > lambda + tol) {
    cert.q_violation = PairViolation{'Q', cert.q_max.i + 1, cert.q_max.j + 1,
                                     cert.q_max.distance - lambda};
  }
  cert.violation = cert.p_violation ? cert.p_violation : cert.q_violation;
  cert.pass = !cert.violation.has_value();
  return cert;
}

}  // namespace unicon

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

#include "unicon/norm_body.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

#include "unicon/linear_program.h"
#include "unicon/rng.h"

namespace unicon {
namespace {

constexpr int kMaxPolytopeDim = 16;
constexpr uint64_t kMaxCombinations = 5'000'000;
constexpr uint64_t kUnitVolumeSamples = 1u << 18;
constexpr double kUnitVolumeConfidence = 0.99;

uint64_t Binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<uint64_t>(n - k + i) / static_cast<uint64_t>(i);
    if (result > kMaxCombinations * 16) return result;
  }
  return result;
}

// Calls fn(indices) for every k-subset of {0..n-1} in lexicographic order.
void ForEachCombination(int n, int k,
                        const std::function<void(const std::vector<int>&)>& fn) {
  if (k > n || k <= 0) return;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool LexLess(const Vector& a, const Vector& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(),
                                      b.data() + b.size());
}

// Flips `v` so that its first non-negligible coordinate is positive.
Vector CanonicalSign(const Vector& v, double tol) {
  for (int i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > tol) return v[i] < 0 ? Vector(-v) : v;
  }
  return v;
}

void AddUnique(std::vector<Vector>& list, const Vector& v, double tol) {
  for (const Vector& w : list) {
    if ((w - v).lpNorm<Eigen::Infinity>() <= tol) return;
  }
  list.push_back(v);
}

int Rank(const std::vector<Vector>& rows, int dim) {
  if (rows.empty()) return 0;
  Matrix m(static_cast<int>(rows.size()), dim);
  for (size_t i = 0; i < rows.size(); ++i) m.row(static_cast<int>(i)) = rows[i].transpose();
  Eigen::FullPivLU<Matrix> lu(m);
  lu.setThreshold(1e-10);
  return static_cast<int>(lu.rank());
}

void CheckCombinationBudget(int n, int k) {
  if (Binomial(n, k) > kMaxCombinations) {
    ThrowInvalid("polytope too large for facet/vertex enumeration");
  }
}

uint64_t DescriptorHash(const NormDescriptor& d) {
  uint64_t h = 1469598103934665603ull;
  auto mix = [&h](const void* data, size_t n) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < n; ++i) {
      h ^= bytes[i];
      h *= 1099511628211ull;
    }
  };
  const int kind = static_cast<int>(d.kind);
  mix(&kind, sizeof kind);
  mix(&d.dim, sizeof d.dim);
  mix(&d.p, sizeof d.p);
  for (const Vector& v : d.normals) mix(v.data(), sizeof(double) * v.size());
  for (const Vector& v : d.vertices) mix(v.data(), sizeof(double) * v.size());
  return h;
}

double Factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

double UnitBallVolume(int d) {
  if (d < 0) ThrowInvalid("dimension must be nonnegative");
  const double half = 0.5 * d;
  return std::exp(half * std::log(M_PI) - std::lgamma(1.0 + half));
}

std::string ToString(NormKind kind) {
  switch (kind) {
    case NormKind::kEuclidean: return "euclidean";
    case NormKind::kLp: return "lp";
    case NormKind::kPolytopeH: return "polytope-h";
    case NormKind::kPolytopeV: return "polytope-v";
  }
  return "?";
}

std::string ToString(Generating g) {
  switch (g) {
    case Generating::kYes: return "yes";
    case Generating::kNo: return "no";
    case Generating::kUnknown: return "unknown";
  }
  return "?";
}

double Box::Volume() const {
  double v = 1.0;
  for (int k = 0; k < lo.size(); ++k) v *= std::max(0.0, hi[k] - lo[k]);
  return v;
}

std::vector<Vector> FacetsFromVertices(const std::vector<Vector>& vertices,
                                       double tol) {
  if (vertices.empty()) return {};
  const int dim = static_cast<int>(vertices.front().size());
  const int n = static_cast<int>(vertices.size());
  CheckCombinationBudget(n, dim);
  std::vector<Vector> facets;
  Matrix m(dim, dim);
  ForEachCombination(n, dim, [&](const std::vector<int>& idx) {
    for (int i = 0; i < dim; ++i) m.row(i) = vertices[idx[i]].transpose();
    Eigen::FullPivLU<Matrix> lu(m);
    lu.setThreshold(1e-10);
    if (lu.rank() < dim) return;
    const Vector a = lu.solve(Vector::Ones(dim));
    for (const Vector& v : vertices) {
      if (a.dot(v) > 1.0 + tol) return;
    }
    AddUnique(facets, CanonicalSign(a, tol), tol);
  });
  std::sort(facets.begin(), facets.end(), LexLess);
  return facets;
}

std::vector<Vector> VerticesFromNormals(const std::vector<Vector>& normals,
                                        double tol) {
  if (normals.empty()) return {};
  const int dim = static_cast<int>(normals.front().size());
  std::vector<Vector> planes;
  for (const Vector& a : normals) {
    planes.push_back(a);
    planes.push_back(-a);
  }
  const int n = static_cast<int>(planes.size());
  CheckCombinationBudget(n, dim);
  std::vector<Vector> vertices;
  Matrix m(dim, dim);
  ForEachCombination(n, dim, [&](const std::vector<int>& idx) {
    for (int i = 0; i < dim; ++i) m.row(i) = planes[idx[i]].transpose();
    Eigen::FullPivLU<Matrix> lu(m);
    lu.setThreshold(1e-10);
    if (lu.rank() < dim) return;
    const Vector x = lu.solve(Vector::Ones(dim));
    for (const Vector& a : normals) {
      if (std::abs(a.dot(x)) > 1.0 + tol) return;
    }
    AddUnique(vertices, x, tol);
  });
  std::sort(vertices.begin(), vertices.end(), LexLess);
  return vertices;
}

NormBody::NormBody(NormDescriptor descriptor)
    : dim_(descriptor.dim), descriptor_(std::move(descriptor)) {
  if (dim_ < 1) ThrowInvalid("norm dimension must be >= 1");
  switch (descriptor_.kind) {
    case NormKind::kEuclidean:
      break;
    case NormKind::kLp:
      if (!(descriptor_.p >= 1.0)) ThrowInvalid("lp norm needs p >= 1");
      break;
    case NormKind::kPolytopeH: {
      if (descriptor_.normals.empty()) ThrowInvalid("polytope-h needs normals");
      for (const Vector& a : descriptor_.normals) {
        if (a.size() != dim_) ThrowInvalid("normal dimension mismatch");
        if (a.lpNorm<Eigen::Infinity>() == 0.0) ThrowInvalid("zero facet normal");
      }
      if (Rank(descriptor_.normals, dim_) < dim_) {
        ThrowInvalid("polytope-h normals do not span the space: K is unbounded");
      }
      break;
    }
    case NormKind::kPolytopeV: {
      if (descriptor_.vertices.empty()) ThrowInvalid("polytope-v needs vertices");
      for (const Vector& v : descriptor_.vertices) {
        if (v.size() != dim_) ThrowInvalid("vertex dimension mismatch");
      }
      if (Rank(descriptor_.vertices, dim_) < dim_) {
        ThrowInvalid("polytope-v vertices do not span the space: empty interior");
      }
      break;
    }
  }
  if (!descriptor_.blocks.empty()) {
    std::vector<int> seen(dim_, 0);
    for (const auto& block : descriptor_.blocks) {
      if (block.empty()) ThrowInvalid("empty block in direct-sum declaration");
      for (int axis : block) {
        if (axis < 0 || axis >= dim_) ThrowInvalid("block axis out of range");
        ++seen[axis];
      }
    }
    for (int count : seen) {
      if (count != 1) ThrowInvalid("blocks must partition the axes");
    }
  }
  BuildPolytope();
  axis_support_.resize(dim_);
  for (int k = 0; k < dim_; ++k) axis_support_[k] = Support(Vector::Unit(dim_, k));
  for (int k = 0; k < dim_; ++k) {
    const double g = Gauge(Vector::Unit(dim_, k));
    if (!(g > 0.0) || !std::isfinite(g)) ThrowInvalid("degenerate unit ball");
  }
  ComputeUnitVolume();
  Classify();
}

NormBody NormBody::Euclidean(int dim) {
  NormDescriptor d;
  d.kind = NormKind::kEuclidean;
  d.dim = dim;
  return NormBody(std::move(d));
}

NormBody NormBody::Lp(int dim, double p) {
  NormDescriptor d;
  d.kind = NormKind::kLp;
  d.dim = dim;
  d.p = p;
  return NormBody(std::move(d));
}

NormBody NormBody::LInf(int dim) {
  return Lp(dim, std::numeric_limits<double>::infinity());
}

NormBody NormBody::FromNormals(std::vector<Vector> normals,
                               std::vector<std::vector<int>> blocks) {
  NormDescriptor d;
  d.kind = NormKind::kPolytopeH;
  d.dim = normals.empty() ? 0 : static_cast<int>(normals.front().size());
  d.normals = std::move(normals);
  d.blocks = std::move(blocks);
  return NormBody(std::move(d));
}

NormBody NormBody::FromVertices(std::vector<Vector> vertices,
                                std::vector<std::vector<int>> blocks) {
  NormDescriptor d;
  d.kind = NormKind::kPolytopeV;
  d.dim = vertices.empty() ? 0 : static_cast<int>(vertices.front().size());
  d.vertices = std::move(vertices);
  d.blocks = std::move(blocks);
  return NormBody(std::move(d));
}

std::string NormBody::Name() const {
  std::ostringstream os;
  switch (kind()) {
    case NormKind::kEuclidean:
      os << "euclid";
      break;
    case NormKind::kLp:
      if (std::isinf(p())) {
        os << "linf";
      } else if (p() == 1.0) {
        os << "l1";
      } else {
        os << "lp:" << p();
      }
      break;
    case NormKind::kPolytopeH:
      os << "poly-h(" << facet_normals().size() << " facet pairs)";
      break;
    case NormKind::kPolytopeV:
      os << "poly-v(" << vertices().size() << " vertices)";
      break;
  }
  return os.str();
}

void NormBody::BuildPolytope() {
  const double tol = kDefaultTolerances.exact;
  auto poly = std::make_shared<Polytope>();
  switch (kind()) {
    case NormKind::kEuclidean:
      return;
    case NormKind::kLp: {
      const bool l1 = p() == 1.0;
      const bool linf = std::isinf(p());
      if (!(l1 || linf) || dim_ > kMaxPolytopeDim) return;
      // Sign vectors, first coordinate +1 for normals (l1) and all for
      // vertices (l-infinity).
      std::vector<Vector> signs;
      for (uint64_t mask = 0; mask < (1ull << dim_); ++mask) {
        Vector s(dim_);
        for (int i = 0; i < dim_; ++i) s[i] = (mask >> i) & 1 ? -1.0 : 1.0;
        signs.push_back(s);
      }
      std::vector<Vector> units;
      for (int i = 0; i < dim_; ++i) {
        units.push_back(Vector::Unit(dim_, i));
        units.push_back(-Vector::Unit(dim_, i));
      }
      if (l1) {
        for (const Vector& s : signs) {
          if (s[0] > 0) poly->normals.push_back(s);
        }
        poly->vertices = units;
      } else {
        for (int i = 0; i < dim_; ++i) poly->normals.push_back(Vector::Unit(dim_, i));
        poly->vertices = signs;
      }
      break;
    }
    case NormKind::kPolytopeH:
      poly->vertices = VerticesFromNormals(descriptor_.normals, tol);
      poly->normals = FacetsFromVertices(poly->vertices, tol);
      break;
    case NormKind::kPolytopeV: {
      std::vector<Vector> symmetric;
      for (const Vector& v : descriptor_.vertices) {
        AddUnique(symmetric, v, tol);
        AddUnique(symmetric, -v, tol);
      }
      poly->normals = FacetsFromVertices(symmetric, tol);
      poly->vertices = VerticesFromNormals(poly->normals, tol);
      break;
    }
  }
  std::sort(poly->normals.begin(), poly->normals.end(), LexLess);
  std::sort(poly->vertices.begin(), poly->vertices.end(), LexLess);
  for (const Vector& a : poly->normals) {
    poly->normal_data.insert(poly->normal_data.end(), a.data(), a.data() + a.size());
  }
  polytope_ = std::move(poly);
}

double NormBody::Gauge(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != dim_) ThrowInvalid("gauge: dimension mismatch");
  switch (kind()) {
    case NormKind::kEuclidean: {
      double s = 0.0;
      for (double v : x) s += v * v;
      return std::sqrt(s);
    }
    case NormKind::kLp: {
      const double p = descriptor_.p;
      if (p == 1.0) {
        double s = 0.0;
        for (double v : x) s += std::abs(v);
        return s;
      }
      double m = 0.0;
      for (double v : x) m = std::max(m, std::abs(v));
      if (std::isinf(p) || m == 0.0) return m;
      if (p == 2.0) {
        double s = 0.0;
        for (double v : x) s += v * v;
        return std::sqrt(s);
      }
      double s = 0.0;
      for (double v : x) s += std::pow(std::abs(v) / m, p);
      return m * std::pow(s, 1.0 / p);
    }
    case NormKind::kPolytopeH:
    case NormKind::kPolytopeV: {
      const double* a = polytope_->normal_data.data();
      const size_t count = polytope_->normals.size();
      double best = 0.0;
      for (size_t f = 0; f < count; ++f, a += dim_) {
        double dot = 0.0;
        for (int i = 0; i < dim_; ++i) dot += a[i] * x[i];
        best = std::max(best, std::abs(dot));
      }
      return best;
    }
  }
  return 0.0;
}

double NormBody::Gauge(const Vector& x) const {
  return Gauge(std::span<const double>(x.data(), static_cast<size_t>(x.size())));
}

double NormBody::GaugeByLp(const Vector& x) const {
  if (!is_polytopal()) ThrowInvalid("GaugeByLp needs a polytopal norm");
  if (x.size() != dim_) ThrowInvalid("gauge: dimension mismatch");
  const auto& verts = polytope_->vertices;
  const int m = static_cast<int>(verts.size());
  LinearProgram lp(m);
  for (int j = 0; j < m; ++j) lp.SetNonNegative(j);
  lp.SetObjective(Vector::Ones(m), LpSense::kMinimize);
  for (int i = 0; i < dim_; ++i) {
    Vector row(m);
    for (int j = 0; j < m; ++j) row[j] = verts[j][i];
    lp.AddRow(row, RowType::kEqual, x[i]);
  }
  const LpSolution sol = lp.Solve();
  if (sol.status != LpStatus::kOptimal) {
    throw Error(ErrorKind::kNumerical, "gauge LP did not reach an optimum");
  }
  return sol.objective;
}

double NormBody::Support(const Vector& u) const {
  if (u.size() != dim_) ThrowInvalid("support: dimension mismatch");
  if (u.lpNorm<Eigen::Infinity>() == 0.0) ThrowInvalid("support: zero direction");
  switch (kind()) {
    case NormKind::kEuclidean:
      return u.norm();
    case NormKind::kLp: {
      const double p = descriptor_.p;
      if (p == 1.0) return u.lpNorm<Eigen::Infinity>();
      if (std::isinf(p)) return u.lpNorm<1>();
      if (p == 2.0) return u.norm();
      const double q = p / (p - 1.0);
      const double m = u.lpNorm<Eigen::Infinity>();
      double s = 0.0;
      for (int i = 0; i < u.size(); ++i) s += std::pow(std::abs(u[i]) / m, q);
      return m * std::pow(s, 1.0 / q);
    }
    case NormKind::kPolytopeH:
    case NormKind::kPolytopeV: {
      double best = -std::numeric_limits<double>::infinity();
      for (const Vector& v : polytope_->vertices) best = std::max(best, v.dot(u));
      return best;
    }
  }
  return 0.0;
}

double NormBody::SupportByLp(const Vector& u) const {
  if (!is_polytopal()) ThrowInvalid("SupportByLp needs a polytopal norm");
  if (u.size() != dim_) ThrowInvalid("support: dimension mismatch");
  if (u.lpNorm<Eigen::Infinity>() == 0.0) ThrowInvalid("support: zero direction");
  LinearProgram lp(dim_);
  lp.SetObjective(u, LpSense::kMaximize);
  for (const Vector& a : polytope_->normals) {
    lp.AddRow(a, RowType::kLessEqual, 1.0);
    lp.AddRow(a, RowType::kGreaterEqual, -1.0);
  }
  const LpSolution sol = lp.Solve();
  if (sol.status != LpStatus::kOptimal) {
    throw Error(ErrorKind::kNumerical, "support LP did not reach an optimum");
  }
  return sol.objective;
}

const std::vector<Vector>& NormBody::facet_normals() const {
  if (!is_polytopal()) ThrowInvalid("facet normals of a non-polytopal norm");
  return polytope_->normals;
}

const std::vector<Vector>& NormBody::vertices() const {
  if (!is_polytopal()) ThrowInvalid("vertices of a non-polytopal norm");
  return polytope_->vertices;
}

std::vector<Eigen::Vector2d> NormBody::PolygonCycle() const {
  if (dim_ != 2 || !is_polytopal()) ThrowInvalid("PolygonCycle needs a 2D polytopal norm");
  std::vector<Eigen::Vector2d> cycle;
  for (const Vector& v : polytope_->vertices) cycle.emplace_back(v[0], v[1]);
  std::sort(cycle.begin(), cycle.end(), [](const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
    return std::atan2(a.y(), a.x()) < std::atan2(b.y(), b.x());
  });
  return cycle;
}

Box NormBody::BoundingBox(std::span<const Vector> centers, double r) const {
  if (centers.empty()) ThrowInvalid("bounding box of an empty center list");
  Box box{Vector::Constant(dim_, std::numeric_limits<double>::infinity()),
          Vector::Constant(dim_, -std::numeric_limits<double>::infinity())};
  for (const Vector& c : centers) {
    if (c.size() != dim_) ThrowInvalid("bounding box: dimension mismatch");
    box.lo = box.lo.cwiseMin(c);
    box.hi = box.hi.cwiseMax(c);
  }
  for (int k = 0; k < dim_; ++k) {
    box.lo[k] -= r * axis_support_[k];
    box.hi[k] += r * axis_support_[k];
  }
  return box;
}

void NormBody::ComputeUnitVolume() {
  const int d = dim_;
  std::optional<double> exact;
  switch (kind()) {
    case NormKind::kEuclidean:
      exact = UnitBallVolume(d);
      break;
    case NormKind::kLp:
      if (p() == 1.0) exact = std::pow(2.0, d) / Factorial(d);
      else if (std::isinf(p())) exact = std::pow(2.0, d);
      else if (p() == 2.0) exact = UnitBallVolume(d);
      else exact = std::exp(d * std::log(2.0 * std::tgamma(1.0 + 1.0 / p())) -
                            std::lgamma(1.0 + d / p()));
      break;
    case NormKind::kPolytopeH:
    case NormKind::kPolytopeV:
      if (d == 1) {
        exact = 2.0 * polytope_->vertices.front().cwiseAbs()[0];
      } else if (d == 2) {
        const auto cycle = PolygonCycle();
        double twice = 0.0;
        for (size_t i = 0; i < cycle.size(); ++i) {
          const auto& a = cycle[i];
          const auto& b = cycle[(i + 1) % cycle.size()];
          twice += a.x() * b.y() - a.y() * b.x();
        }
        exact = 0.5 * twice;
      } else if (d == 3) {
        // Cone volumes from the origin over every facet; facets come in +-
        // pairs of equal area.
        double volume = 0.0;
        for (const Vector& a : polytope_->normals) {
          std::vector<Eigen::Vector3d> face;
          for (const Vector& v : polytope_->vertices) {
            if (std::abs(a.dot(v) - 1.0) <= kDefaultTolerances.exact) {
              face.emplace_back(v[0], v[1], v[2]);
            }
          }
          Eigen::Vector3d centroid = Eigen::Vector3d::Zero();
          for (const auto& v : face) centroid += v;
          centroid /= static_cast<double>(face.size());
          const Eigen::Vector3d n = Eigen::Vector3d(a[0], a[1], a[2]).normalized();
          const Eigen::Vector3d e1 = (face.front() - centroid).normalized();
          const Eigen::Vector3d e2 = n.cross(e1);
          std::sort(face.begin(), face.end(), [&](const auto& p, const auto& q) {
            return std::atan2((p - centroid).dot(e2), (p - centroid).dot(e1)) <
                   std::atan2((q - centroid).dot(e2), (q - centroid).dot(e1));
          });
          double area = 0.0;
          for (size_t i = 0; i < face.size(); ++i) {
            area += 0.5 * n.dot((face[i] - centroid).cross(face[(i + 1) % face.size()] - centroid));
          }
          volume += 2.0 * area / (3.0 * a.norm());
        }
        exact = volume;
      }
      break;
  }
  if (exact) {
    unit_volume_ = VolumeEstimate::Exact(*exact);
    return;
  }
  // Monte Carlo with a seed derived from the descriptor content, so the same
  // norm always gets the same estimate.
  const uint64_t seed = DescriptorHash(descriptor_);
  uint64_t hits = 0;
  std::vector<double> x(d);
  for (uint64_t i = 0; i < kUnitVolumeSamples; ++i) {
    CounterStream stream(seed, StreamPurpose::kUnitBallVolume, i);
    for (int k = 0; k < d; ++k) x[k] = (2.0 * stream.Uniform() - 1.0) * axis_support_[k];
    if (Gauge(x) <= 1.0) ++hits;
  }
  double box = 1.0;
  for (int k = 0; k < d; ++k) box *= 2.0 * axis_support_[k];
  const Proportion prop = ClopperPearson(hits, kUnitVolumeSamples, kUnitVolumeConfidence);
  unit_volume_.value = box * static_cast<double>(hits) / static_cast<double>(kUnitVolumeSamples);
  unit_volume_.lo = box * prop.lo;
  unit_volume_.hi = box * prop.hi;
  unit_volume_.method = VolumeMethod::kMonteCarlo;
  unit_volume_.samples = kUnitVolumeSamples;
  unit_volume_.seed = seed;
  unit_volume_.confidence = kUnitVolumeConfidence;
}

void NormBody::Classify() {
  // Rule table; "yes" only when a rule fires.
  if (dim_ <= 2) {
    generating_ = Generating::kYes;  // planar bodies
    return;
  }
  if (kind() == NormKind::kEuclidean || (kind() == NormKind::kLp && p() == 2.0)) {
    generating_ = Generating::kYes;
    return;
  }
  if (!is_polytopal()) {
    generating_ = Generating::kUnknown;
    return;
  }
  const double tol = kDefaultTolerances.exact;
  const auto& normals = polytope_->normals;
  auto support_count = [&](const Vector& a) {
    int count = 0;
    for (int i = 0; i < a.size(); ++i) count += std::abs(a[i]) > tol;
    return count;
  };
  // Boxes: direct sum of segments (the cube is square + segment, etc.).
  if (std::all_of(normals.begin(), normals.end(),
                  [&](const Vector& a) { return support_count(a) == 1; })) {
    generating_ = Generating::kYes;
    return;
  }
  if (!descriptor_.blocks.empty()) {
    std::vector<int> block_of(dim_);
    bool small_blocks = true;
    for (size_t b = 0; b < descriptor_.blocks.size(); ++b) {
      if (descriptor_.blocks[b].size() > 2) small_blocks = false;
      for (int axis : descriptor_.blocks[b]) block_of[axis] = static_cast<int>(b);
    }
    const bool separable = std::all_of(normals.begin(), normals.end(), [&](const Vector& a) {
      int block = -1;
      for (int i = 0; i < dim_; ++i) {
        if (std::abs(a[i]) <= tol) continue;
        if (block >= 0 && block_of[i] != block) return false;
        block = block_of[i];
      }
      return true;
    });
    if (!separable) {
      generating_ = Generating::kNo;
      return;
    }
    if (small_blocks) {
      generating_ = Generating::kYes;
      return;
    }
  }
  // Every facet a simplex (e.g. the cross-polytope): such polytopes are
  // indecomposable in d >= 3, hence not a direct sum of polygons/segments.
  const bool simplicial = std::all_of(normals.begin(), normals.end(), [&](const Vector& a) {
    int incident = 0;
    for (const Vector& v : polytope_->vertices) incident += std::abs(a.dot(v) - 1.0) <= tol;
    return incident == dim_;
  });
  generating_ = simplicial ? Generating::kNo : Generating::kUnknown;
}

double Gauge(const NormBody& k, const Vector& x) { return k.Gauge(x); }
double Support(const NormBody& k, const Vector& u) { return k.Support(u); }
VolumeEstimate UnitBallVolume(const NormBody& k) { return k.unit_volume(); }
Generating ClassifyGenerating(const NormBody& k) { return k.generating(); }

}  // namespace unicon

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

#include "unicon/instances.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "json.hpp"
#include "unicon/rng.h"

namespace unicon {
namespace {

using nlohmann::json;

constexpr uint64_t kPackedTag = 1;
constexpr uint64_t kClusterTag = 2;

std::string Real(double v) {
  if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string Row(const Vector& v) {
  std::string s = "[";
  for (int i = 0; i < v.size(); ++i) {
    if (i > 0) s += ", ";
    s += Real(v[i]);
  }
  return s + "]";
}

std::string Rows(const std::vector<Vector>& rows, const std::string& indent) {
  if (rows.empty()) return "[]";
  std::string s = "[\n";
  for (size_t i = 0; i < rows.size(); ++i) {
    s += indent + "  " + Row(rows[i]) + (i + 1 < rows.size() ? ",\n" : "\n");
  }
  return s + indent + "]";
}

double ReadReal(const json& j, const std::string& what) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
  }
  ThrowInputData(what + ": expected a number");
}

std::vector<Vector> ReadRows(const json& j, int dim, const std::string& what) {
  if (!j.is_array()) ThrowInputData(what + ": expected an array of points");
  std::vector<Vector> rows;
  for (const json& row : j) {
    if (!row.is_array()) ThrowInputData(what + ": expected an array of numbers");
    if (dim >= 0 && static_cast<int>(row.size()) != dim) {
      ThrowInputData(what + ": point " + std::to_string(rows.size() + 1) + " has dimension " +
                     std::to_string(row.size()) + ", expected " + std::to_string(dim));
    }
    Vector v(static_cast<int>(row.size()));
    for (size_t i = 0; i < row.size(); ++i) v[static_cast<int>(i)] = ReadReal(row[i], what);
    rows.push_back(std::move(v));
  }
  return rows;
}

std::vector<std::vector<int>> ReadBlocks(const json& j) {
  std::vector<std::vector<int>> blocks;
  if (j.is_null()) return blocks;
  if (!j.is_array()) ThrowInputData("blocks: expected an array of index arrays");
  for (const json& b : j) blocks.push_back(b.get<std::vector<int>>());
  return blocks;
}

std::string NormKindName(NormKind kind) {
  switch (kind) {
    case NormKind::kEuclidean:
      return "euclidean";
    case NormKind::kLp:
      return "lp";
    case NormKind::kPolytopeH:
      return "polytope-h";
    case NormKind::kPolytopeV:
      return "polytope-v";
  }
  return "unknown";
}

std::string NormToJson(const NormDescriptor& n) {
  std::ostringstream os;
  os << "{\n    \"kind\": \"" << NormKindName(n.kind) << "\",\n    \"p\": " << Real(n.p)
     << ",\n    \"normals\": " << Rows(n.normals, "    ")
     << ",\n    \"vertices\": " << Rows(n.vertices, "    ") << ",\n    \"blocks\": [";
  for (size_t b = 0; b < n.blocks.size(); ++b) {
    os << (b > 0 ? ", " : "") << "[";
    for (size_t i = 0; i < n.blocks[b].size(); ++i) os << (i > 0 ? ", " : "") << n.blocks[b][i];
    os << "]";
  }
  os << "]\n  }";
  return os.str();
}

NormDescriptor NormFromJson(const json& j, int dim) {
  if (!j.is_object()) ThrowInputData("norm: expected an object");
  NormDescriptor n;
  n.dim = dim;
  const std::string kind = j.value("kind", "");
  if (kind == "euclidean") {
    n.kind = NormKind::kEuclidean;
  } else if (kind == "lp") {
    n.kind = NormKind::kLp;
    n.p = ReadReal(j.at("p"), "norm.p");
  } else if (kind == "polytope-h") {
    n.kind = NormKind::kPolytopeH;
    n.normals = ReadRows(j.at("normals"), dim, "norm.normals");
  } else if (kind == "polytope-v") {
    n.kind = NormKind::kPolytopeV;
    n.vertices = ReadRows(j.at("vertices"), dim, "norm.vertices");
  } else {
    ThrowInputData("norm: unknown kind '" + kind + "'");
  }
  if (j.contains("blocks")) n.blocks = ReadBlocks(j.at("blocks"));
  return n;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) ThrowInputData("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

uint64_t IntPow(uint64_t base, int e) {
  uint64_t acc = 1;
  for (int i = 0; i < e; ++i) acc *= base;
  return acc;
}

PointConfiguration Lattice(int d, int n, double lambda, const NormBody& k) {
  // Spacing from the shortest integer vector in a small window; the result is
  // certified afterwards regardless.
  const int radius = 2;
  const int side = 2 * radius + 1;
  double g_min = std::numeric_limits<double>::infinity();
  Vector z(d);
  for (uint64_t code = 0; code < IntPow(side, d); ++code) {
    uint64_t c = code;
    bool zero = true;
    for (int a = 0; a < d; ++a) {
      z[a] = static_cast<double>(static_cast<int>(c % side) - radius);
      zero = zero && z[a] == 0.0;
      c /= side;
    }
    if (!zero) g_min = std::min(g_min, k.Gauge(z));
  }
  int m = 1;
  while (IntPow(m, d) < static_cast<uint64_t>(n)) ++m;
  std::vector<Vector> grid;
  grid.reserve(n);
  std::vector<int> idx(d, 0);
  for (int i = 0; i < n; ++i) {
    Vector v(d);
    for (int a = 0; a < d; ++a) v[a] = idx[a];
    grid.push_back(v);
    for (int a = d - 1; a >= 0; --a) {
      if (++idx[a] < m) break;
      idx[a] = 0;
    }
  }
  double spacing = lambda / g_min;
  for (int attempt = 0; attempt < 8; ++attempt) {
    PointConfiguration pts(d, {});
    for (const Vector& g : grid) pts.points.push_back(spacing * g);
    const PairDistance closest = MinPairDistance(pts, k);
    if (closest.distance >= lambda) return pts;
    spacing *= lambda / closest.distance * (1.0 + 1e-15);
  }
  throw Error(ErrorKind::kNumerical, "lattice spacing could not be certified");
}

PointConfiguration Dart(int d, int n, double lambda, const NormBody& k, uint64_t seed) {
  Vector e1 = Vector::Zero(d);
  e1[0] = 1.0;
  double side = 2.0 * std::pow(static_cast<double>(n), 1.0 / d) * lambda * k.Support(e1);
  const uint64_t attempts = 2000 * static_cast<uint64_t>(n);
  for (int round = 0; round <= 10; ++round, side *= 2.0) {
    CounterStream stream(seed, StreamPurpose::kInstanceGeneration, static_cast<uint64_t>(round));
    PointConfiguration pts(d, {});
    Vector y(d);
    for (uint64_t t = 0; t < attempts && pts.size() < n; ++t) {
      for (int a = 0; a < d; ++a) y[a] = side * stream.Uniform();
      bool ok = true;
      for (const Vector& p : pts.points) {
        if (k.Gauge(Vector(y - p)) < lambda) {
          ok = false;
          break;
        }
      }
      if (ok) pts.points.push_back(y);
    }
    if (pts.size() == n) return pts;
  }
  throw Error(ErrorKind::kNumerical, "dart throwing did not place all points");
}

}  // namespace

std::string ToString(Regime regime) {
  switch (regime) {
    case Regime::kSubLambda:
      return "sub-lambda";
    case Regime::kMid:
      return "mid";
    case Regime::kSuper:
      return "super";
  }
  return "unknown";
}

std::string ToString(PackStrategy strategy) {
  return strategy == PackStrategy::kLattice ? "lattice" : "dart";
}

Regime ParseRegime(const std::string& text) {
  if (text == "sub-lambda") return Regime::kSubLambda;
  if (text == "mid") return Regime::kMid;
  if (text == "super") return Regime::kSuper;
  ThrowInvalid("unknown regime '" + text + "' (expected sub-lambda, mid, super)");
}

PackStrategy ParsePackStrategy(const std::string& text) {
  if (text == "lattice") return PackStrategy::kLattice;
  if (text == "dart") return PackStrategy::kDart;
  ThrowInvalid("unknown packing strategy '" + text + "' (expected lattice, dart)");
}

double RegimeRadius(Regime regime, double lambda, double cr, const RegimeConstants& constants) {
  switch (regime) {
    case Regime::kSubLambda:
      return constants.sub_lambda * lambda;
    case Regime::kMid:
      if (cr < lambda / 2.0) ThrowInvalid("mid regime needs cr_K(P) >= lambda/2");
      return std::max((lambda / 2.0 + cr) / 2.0, lambda / 2.0);
    case Regime::kSuper:
      return constants.super_scale * cr + lambda;
  }
  ThrowInvalid("unknown regime");
}

Regime ClassifyRegime(double r, double lambda, double cr, double tol) {
  if (r < lambda / 2.0 * (1.0 - tol)) return Regime::kSubLambda;
  if (r <= cr * (1.0 + tol)) return Regime::kMid;
  return Regime::kSuper;
}

ContractionCertificate UniformContractionInstance::Certify() const {
  return CertifyUniformContraction(p, q, lambda, *norm);
}

PointConfiguration GenPacked(int d, int n, double lambda, const NormBody& k,
                             PackStrategy strategy, uint64_t seed) {
  if (n < 2) ThrowInvalid("gen_packed needs N >= 2");
  if (!(lambda > 0.0)) ThrowInvalid("lambda must be positive");
  if (k.dim() != d) ThrowInvalid("norm dimension does not match d");
  PointConfiguration pts = strategy == PackStrategy::kLattice ? Lattice(d, n, lambda, k)
                                                              : Dart(d, n, lambda, k, seed);
  pts.label = "P";
  if (MinPairDistance(pts, k).distance < lambda - kDefaultTolerances.exact) {
    throw Error(ErrorKind::kNumerical, "packed configuration failed certification");
  }
  return pts;
}

PointConfiguration GenClustered(int d, int n, double lambda, const NormBody& k, uint64_t seed) {
  if (n < 2) ThrowInvalid("gen_clustered needs N >= 2");
  if (!(lambda > 0.0)) ThrowInvalid("lambda must be positive");
  if (k.dim() != d) ThrowInvalid("norm dimension does not match d");
  CounterStream stream(seed, StreamPurpose::kInstanceGeneration, 0);
  const double h = lambda / 2.0;
  Vector anchor(d), extent(d), y(d);
  for (int a = 0; a < d; ++a) anchor[a] = lambda * (2.0 * stream.Uniform() - 1.0);
  for (int a = 0; a < d; ++a) {
    Vector e = Vector::Zero(d);
    e[a] = 1.0;
    extent[a] = h * k.Support(e);
  }
  PointConfiguration pts(d, {}, "Q");
  while (pts.size() < n) {
    for (int a = 0; a < d; ++a) y[a] = extent[a] * (2.0 * stream.Uniform() - 1.0);
    if (k.Gauge(y) <= h) pts.points.push_back(anchor + y);
  }
  return pts;
}

UniformContractionInstance GenInstance(int n, double lambda, std::shared_ptr<const NormBody> k,
                                       Regime regime, uint64_t seed, const GenOptions& options) {
  if (!k) ThrowInvalid("instance needs a norm");
  const int d = k->dim();
  UniformContractionInstance inst;
  inst.norm = k;
  inst.lambda = lambda;
  inst.seed = seed;
  inst.strategy = options.strategy;
  const uint64_t gen = static_cast<uint64_t>(StreamPurpose::kInstanceGeneration);
  inst.p = GenPacked(d, n, lambda, *k, options.strategy, DeriveSeed(seed, gen, kPackedTag));
  inst.q = GenClustered(d, n, lambda, *k, DeriveSeed(seed, gen, kClusterTag));
  const double cr = Circumradius(inst.p, *k).radius;
  if (options.r) {
    if (!(*options.r > 0.0)) ThrowInvalid("r must be positive");
    inst.r = *options.r;
    inst.regime = ClassifyRegime(inst.r, lambda, cr);
  } else {
    inst.r = RegimeRadius(regime, lambda, cr, options.constants);
    inst.regime = regime;
  }
  const ContractionCertificate cert = inst.Certify();
  if (!cert.pass) throw Error(ErrorKind::kNumerical, "generated instance failed: " + cert.Describe());
  return inst;
}

std::string InstanceToJson(const UniformContractionInstance& inst) {
  std::ostringstream os;
  os << "{\n  \"version\": \"1\",\n  \"dim\": " << inst.dim()
     << ",\n  \"norm\": " << NormToJson(inst.norm->descriptor())
     << ",\n  \"lambda\": " << Real(inst.lambda) << ",\n  \"r\": " << Real(inst.r)
     << ",\n  \"regime\": \"" << ToString(inst.regime) << "\",\n  \"seed\": " << inst.seed;
  if (inst.strategy) os << ",\n  \"strategy\": \"" << ToString(*inst.strategy) << "\"";
  os << ",\n  \"P\": " << Rows(inst.p.points, "  ") << ",\n  \"Q\": " << Rows(inst.q.points, "  ")
     << "\n}\n";
  return os.str();
}

UniformContractionInstance InstanceFromJson(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    ThrowInputData(std::string("instance is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) ThrowInputData("instance must be a JSON object");
  UniformContractionInstance inst;
  try {
    const json& version = j.at("version");
    const bool ok = (version.is_string() && version.get<std::string>() == "1") ||
                    (version.is_number_integer() && version.get<int>() == 1);
    if (!ok) ThrowInputData("unsupported instance version " + version.dump());
    const int dim = j.at("dim").get<int>();
    if (dim < 1) ThrowInputData("dim must be positive");
    try {
      inst.norm = std::make_shared<const NormBody>(NormFromJson(j.at("norm"), dim));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::kInputData) throw;
      ThrowInputData(std::string("invalid norm: ") + e.what());
    }
    inst.lambda = ReadReal(j.at("lambda"), "lambda");
    inst.r = ReadReal(j.at("r"), "r");
    if (!(inst.lambda > 0.0) || !(inst.r > 0.0)) ThrowInputData("lambda and r must be positive");
    inst.regime = ParseRegime(j.at("regime").get<std::string>());
    inst.seed = j.at("seed").get<uint64_t>();
    if (j.contains("strategy")) inst.strategy = ParsePackStrategy(j.at("strategy").get<std::string>());
    inst.p = PointConfiguration(dim, ReadRows(j.at("P"), dim, "P"), "P");
    inst.q = PointConfiguration(dim, ReadRows(j.at("Q"), dim, "Q"), "Q");
  } catch (const json::exception& e) {
    ThrowInputData(std::string("malformed instance: ") + e.what());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kInputData) throw;
    ThrowInputData(e.what());
  }
  if (inst.p.size() != inst.q.size()) ThrowInputData("P and Q must have the same number of points");
  if (inst.p.size() < 2) ThrowInputData("instances need N >= 2");
  const ContractionCertificate cert = inst.Certify();
  if (!cert.pass) {
    const PairViolation& v = *cert.violation;
    std::ostringstream os;
    os.precision(17);
    os << (v.side == 'P' ? "P-pair (" : "Q-pair (") << v.i << ", " << v.j << ") violates the "
       << (v.side == 'P' ? "separation" : "contraction") << " by " << v.margin << " (lambda "
       << inst.lambda << ")";
    ThrowInputData(os.str());
  }
  const double cr = Circumradius(inst.p, *inst.norm).radius;
  if (ClassifyRegime(inst.r, inst.lambda, cr, 1e-9) != inst.regime) {
    ThrowInputData("regime '" + ToString(inst.regime) + "' is inconsistent with r and cr_K(P)");
  }
  return inst;
}

void SaveInstance(const UniformContractionInstance& instance, const std::string& path) {
  std::ofstream out(path);
  if (!out) ThrowInvalid("cannot write " + path);
  out << InstanceToJson(instance);
  if (!out) ThrowInvalid("failed writing " + path);
}

UniformContractionInstance LoadInstance(const std::string& path) {
  return InstanceFromJson(ReadFile(path));
}

NormBody ParseNorm(const std::string& spec, int dim) {
  if (dim < 1) ThrowInvalid("dimension must be positive");
  if (spec == "euclid" || spec == "euclidean") return NormBody::Euclidean(dim);
  if (spec == "l1") return NormBody::L1(dim);
  if (spec == "linf") return NormBody::LInf(dim);
  const size_t colon = spec.find(':');
  if (colon == std::string::npos) ThrowInvalid("unknown norm '" + spec + "'");
  const std::string head = spec.substr(0, colon);
  const std::string arg = spec.substr(colon + 1);
  if (head == "lp") {
    if (arg == "inf") return NormBody::LInf(dim);
    size_t used = 0;
    double p = 0.0;
    try {
      p = std::stod(arg, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != arg.size() || !(p >= 1.0)) ThrowInvalid("lp:<p> needs a number p >= 1");
    return NormBody::Lp(dim, p);
  }
  if (head == "hexagon") {
    if (dim != 2) ThrowInvalid("hexagon norms are planar");
    size_t used = 0;
    uint64_t seed = 0;
    try {
      seed = std::stoull(arg, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != arg.size() || arg.empty()) ThrowInvalid("hexagon:<seed> needs an integer seed");
    return RandomSymmetricHexagon(seed);
  }
  if (head == "poly-h" || head == "poly-v") {
    json j;
    try {
      j = json::parse(ReadFile(arg));
    } catch (const json::parse_error& e) {
      ThrowInputData("polytope file " + arg + ": " + e.what());
    }
    std::vector<Vector> rows;
    std::vector<std::vector<int>> blocks;
    try {
      if (j.is_object()) {
        rows = ReadRows(j.at("rows"), dim, arg);
        if (j.contains("blocks")) blocks = ReadBlocks(j.at("blocks"));
      } else {
        rows = ReadRows(j, dim, arg);
      }
    } catch (const json::exception& e) {
      ThrowInputData("polytope file " + arg + ": " + e.what());
    }
    if (rows.empty()) ThrowInputData("polytope file " + arg + " has no rows");
    return head == "poly-h" ? NormBody::FromNormals(std::move(rows), std::move(blocks))
                            : NormBody::FromVertices(std::move(rows), std::move(blocks));
  }
  ThrowInvalid("unknown norm '" + spec + "'");
}

NormBody RandomSymmetricHexagon(uint64_t seed) {
  CounterStream stream(seed, StreamPurpose::kNormGeneration, 0);
  std::vector<Vector> vertices;
  for (int j = 0; j < 3; ++j) {
    const double angle = j * std::numbers::pi / 3.0 + 0.15 * (2.0 * stream.Uniform() - 1.0);
    const double radius = 0.8 + 0.4 * stream.Uniform();
    Vector v(2);
    v << radius * std::cos(angle), radius * std::sin(angle);
    vertices.push_back(v);
    vertices.push_back(-v);
  }
  return NormBody::FromVertices(std::move(vertices));
}

}  // namespace unicon

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

#include "cli.h"

#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "unicon/ball_region.h"
#include "unicon/bounds.h"
#include "unicon/instances.h"
#include "unicon/verify.h"
#include "unicon/volumetry.h"

namespace unicon::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string Num(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

void WriteOutput(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) ThrowInputData("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct GenArgs {
  int dim = 0;
  std::string norm;
  int n = 0;
  double lambda = 0.0;
  std::string regime;
  uint64_t seed = 0;
  double r = 0.0;
  std::string strategy = "lattice";
  double sub_lambda = 0.4;
  double super_scale = 1.25;
  std::string out;
};

int CmdGen(const GenArgs& a, const CLI::App& sub, std::ostream& out, std::ostream& err) {
  if (sub.count("--seed") == 0) throw UsageError("gen: --seed is required");
  auto norm = std::make_shared<const NormBody>(ParseNorm(a.norm, a.dim));
  GenOptions options;
  options.strategy = ParsePackStrategy(a.strategy);
  options.constants = {a.sub_lambda, a.super_scale};
  if (sub.count("--r") > 0) options.r = a.r;
  const UniformContractionInstance inst = GenInstance(a.n, a.lambda, norm, ParseRegime(a.regime), a.seed, options);
  const ContractionCertificate cert = inst.Certify();
  std::ostream& summary = a.out.empty() ? err : out;
  if (a.out.empty()) {
    out << InstanceToJson(inst);
  } else {
    SaveInstance(inst, a.out);
    summary << "wrote " << a.out << "\n";
  }
  summary << "certificate: " << cert.Describe() << "\n";
  summary << "norm " << norm->Name() << ", N = " << inst.n() << ", r = " << Num(inst.r) << ", regime "
          << ToString(inst.regime) << "\n";
  const uint64_t n = static_cast<uint64_t>(inst.n());
  if (!bounds::MeetsThreshold(n, a.dim, 2.0)) summary << "note: below 2^d threshold\n";
  if (!bounds::MeetsThreshold(n, a.dim, 3.0)) summary << "note: below 3^d threshold\n";
  return kExitOk;
}

struct VolumeArgs {
  std::string instance;
  std::string side = "P";
  std::string kind = "union";
  std::string method = "mc";
  uint64_t samples = 1000000;
  uint64_t seed = 0;
  double confidence = 0.99;
  int jobs = 1;
  int resolution = 256;
  double r = 0.0;
  std::string format = "text";
  std::string out;
};

int CmdVolume(const VolumeArgs& a, const CLI::App& sub, std::ostream& out) {
  const UniformContractionInstance inst = LoadInstance(a.instance);
  const PointConfiguration& centers = a.side == "P" ? inst.p : inst.q;
  RegionKind kind = RegionKind::kMolecule;
  if (a.kind == "intersection") kind = RegionKind::kPolyhedron;
  if (a.kind == "hull") kind = RegionKind::kRHull;
  const double r = sub.count("--r") > 0 ? a.r : inst.r;
  BallRegion region(kind, centers, r, inst.norm);
  VolumeEstimate e;
  if (a.method == "mc") {
    if (sub.count("--seed") == 0) throw UsageError("volume: --seed is required for --method mc");
    e = McVolume(region, {a.samples, a.seed, a.confidence, a.jobs});
  } else if (a.method == "exact2d") {
    e = ExactArea2d(region);
  } else {
    const GridBounds g = ComputeGridBounds(region, a.resolution);
    e.method = VolumeMethod::kGridBound;
    e.lo = g.lower;
    e.hi = g.upper;
    e.value = 0.5 * (g.lower + g.upper);
    e.samples = g.cells;
  }
  std::ostringstream os;
  if (a.format == "machine") {
    nlohmann::ordered_json j;
    j["side"] = a.side;
    j["kind"] = ToString(kind);
    j["r"] = r;
    j["value"] = e.value;
    j["lo"] = e.lo;
    j["hi"] = e.hi;
    j["method"] = ToString(e.method);
    j["samples"] = e.samples;
    j["seed"] = e.seed;
    j["confidence"] = e.confidence;
    j["uncertain"] = e.uncertain;
    j["note"] = e.note;
    os << j.dump(2) << "\n";
  } else {
    os << "region: " << ToString(kind) << " of " << a.side << ", r = " << Num(r) << "\n"
       << "value: " << Num(e.value) << "\n"
       << "interval: [" << Num(e.lo) << ", " << Num(e.hi) << "]\n"
       << "method: " << ToString(e.method) << "\n"
       << "samples: " << e.samples << "\n"
       << "seed: " << e.seed << "\n"
       << "confidence: " << Num(e.confidence) << "\n";
    if (e.uncertain > 0) os << "uncertain: " << e.uncertain << "\n";
    if (!e.note.empty()) os << "note: " << e.note << "\n";
  }
  WriteOutput(os.str(), a.out, out);
  return kExitOk;
}

struct BoundsArgs {
  double r = 0.0;
  double lambda = 0.0;
  int dim = 0;
  uint64_t n = 0;
  int k = 0;
  double vk = 0.0;
  double cr = 0.0;
  double volume_a = 0.0;
  int d0 = 0;
  std::string format = "text";
  std::string out;
};

int CmdBounds(const BoundsArgs& a, const CLI::App& sub, std::ostream& out) {
  bounds::BoundsInputs in;
  in.r = a.r;
  in.lambda = a.lambda;
  in.d = a.dim;
  in.n = a.n;
  if (sub.count("--k") > 0) in.k = a.k;
  if (sub.count("--vk") > 0) in.vk = a.vk;
  if (sub.count("--cr") > 0) in.cr = a.cr;
  if (sub.count("--volume-a") > 0) in.volume_a = a.volume_a;
  if (sub.count("--d0") > 0) in.d0 = a.d0;
  const bounds::BoundsReport report = bounds::Evaluate(in);
  std::ostringstream os;
  if (a.format == "machine") {
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const bounds::BoundEntry& e : report.entries) {
      nlohmann::ordered_json j;
      j["id"] = e.id;
      j["applicable"] = e.applicable;
      if (e.value) j["value"] = *e.value;
      if (e.holds) j["holds"] = *e.holds;
      if (e.margin) j["margin"] = *e.margin;
      j["clamped"] = e.clamped;
      j["note"] = e.note;
      j["inputs"] = e.inputs;
      entries.push_back(std::move(j));
    }
    os << entries.dump(2) << "\n";
  } else {
    for (const bounds::BoundEntry& e : report.entries) {
      os << e.id << ": ";
      if (!e.applicable) {
        os << "n/a";
      } else {
        if (e.value) os << Num(*e.value);
        if (e.holds) os << (e.value ? " " : "") << (*e.holds ? "pass" : "fail");
        if (e.margin) os << " margin " << Num(*e.margin);
        if (e.clamped) os << " (clamped)";
      }
      os << "  [";
      bool first = true;
      for (const auto& [key, v] : e.inputs) {
        os << (first ? "" : " ") << key << "=" << Num(v);
        first = false;
      }
      os << "]";
      if (!e.note.empty()) os << "  " << e.note;
      os << "\n";
    }
  }
  WriteOutput(os.str(), a.out, out);
  return kExitOk;
}

struct VerifyArgs {
  std::string config;
  std::vector<std::string> instances;
  std::vector<int> dims;
  std::vector<std::string> norms;
  std::vector<std::string> regimes;
  std::vector<double> n_bases;
  int count = 1;
  double lambda = 1.0;
  uint64_t samples = 0;
  double confidence = 0.99;
  int jobs = 1;
  uint64_t directions = 0;
  uint64_t quermass_samples = 0;
  std::vector<int> quermass_ks;
  bool no_part_ii = false;
  bool no_exact = false;
  int d0 = 0;
  uint64_t seed = 0;
  std::string format = "text";
  std::string out;
};

int CmdVerify(const VerifyArgs& a, const CLI::App& sub, std::ostream& out) {
  SuiteConfig config;
  if (!a.config.empty()) config = SuiteConfigFromJson(ReadFile(a.config));
  auto given = [&](const char* flag) { return sub.count(flag) > 0; };
  if (given("--dims")) config.dims = a.dims;
  if (given("--norms")) config.norms = a.norms;
  if (given("--regimes")) {
    config.regimes.clear();
    for (const std::string& r : a.regimes) config.regimes.push_back(ParseRegime(r));
  }
  if (given("--n-bases")) config.n_bases = a.n_bases;
  if (given("--count")) config.instances_per_regime = a.count;
  if (given("--lambda")) config.lambda = a.lambda;
  if (given("--samples")) config.params.samples = a.samples;
  if (given("--confidence")) config.params.confidence = a.confidence;
  if (given("--jobs")) config.params.jobs = a.jobs;
  if (given("--directions")) config.params.direction_samples = a.directions;
  if (given("--quermass-samples")) config.params.quermass_volume_samples = a.quermass_samples;
  if (given("--quermass-k")) config.quermass_ks = a.quermass_ks;
  if (a.no_part_ii) config.part_ii = false;
  if (a.no_exact) config.params.prefer_exact = false;
  if (given("--d0")) config.d0 = a.d0;
  if (given("--seed")) config.seed = a.seed;

  SuiteReport report;
  if (!a.instances.empty()) {
    // Instance files carry their own seeds.
    if (!config.seed) config.seed = 0;
    config.part_ii = false;
    ValidateSuiteConfig(config);
    report.config = config;
    for (const std::string& path : a.instances) {
      const UniformContractionInstance inst = LoadInstance(path);
      report.instances.push_back(VerifyToReport(path, inst, config.params, config.quermass_ks));
    }
  } else {
    if (!config.seed) throw UsageError("verify: a seed is required (--seed or \"seed\" in the config)");
    report = RunSuite(config);
  }
  std::string text;
  if (a.format == "machine") {
    text = ReportJson(report);
  } else if (a.format == "csv-table") {
    text = ReportCsv(report);
  } else {
    text = ReportText(report);
  }
  WriteOutput(text, a.out, out);
  if (!a.out.empty() && a.format != "text") out << ReportText(report);
  return report.AnyFail() ? kExitVerifyFail : kExitOk;
}

}  // namespace

int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Uniform contractions of congruent balls: instances, volumes, bounds, verification"};
  app.name("unicon");
  app.require_subcommand(1);

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "Generate a certified uniform-contraction instance");
  gen->add_option("--dim", gen_args.dim, "Dimension")->required()->check(CLI::PositiveNumber);
  gen->add_option("--norm", gen_args.norm, "euclid | l1 | linf | lp:<p> | poly-h:<file> | poly-v:<file> | hexagon:<seed>")
      ->required();
  gen->add_option("--n", gen_args.n, "Number of points")->required()->check(CLI::Range(2, 1 << 24));
  gen->add_option("--lambda", gen_args.lambda, "Separating value")->required()->check(CLI::PositiveNumber);
  gen->add_option("--regime", gen_args.regime, "sub-lambda | mid | super")->required();
  gen->add_option("--seed", gen_args.seed, "Master seed (required)");
  gen->add_option("--r", gen_args.r, "Radius override")->check(CLI::PositiveNumber);
  gen->add_option("--strategy", gen_args.strategy, "lattice | dart");
  gen->add_option("--sub-lambda", gen_args.sub_lambda, "r / lambda in the sub-lambda regime");
  gen->add_option("--super-scale", gen_args.super_scale, "r = scale * cr + lambda in the super regime");
  gen->add_option("--out", gen_args.out, "Instance file (stdout when omitted)");

  VolumeArgs vol_args;
  CLI::App* vol = app.add_subcommand("volume", "Volume of a ball region of an instance");
  vol->add_option("--instance", vol_args.instance, "Instance file")->required();
  vol->add_option("--side", vol_args.side, "P | Q")->check(CLI::IsMember({"P", "Q"}));
  vol->add_option("--kind", vol_args.kind, "union | intersection | hull")
      ->check(CLI::IsMember({"union", "intersection", "hull"}));
  vol->add_option("--method", vol_args.method, "mc | exact2d | grid")->check(CLI::IsMember({"mc", "exact2d", "grid"}));
  vol->add_option("--samples", vol_args.samples, "Monte Carlo samples")->check(CLI::PositiveNumber);
  vol->add_option("--seed", vol_args.seed, "Monte Carlo seed");
  vol->add_option("--confidence", vol_args.confidence, "Interval confidence")->check(CLI::Range(0.5, 1.0));
  vol->add_option("--jobs", vol_args.jobs, "Worker threads")->check(CLI::PositiveNumber);
  vol->add_option("--resolution", vol_args.resolution, "Grid cells per axis")->check(CLI::Range(2, 1 << 27));
  vol->add_option("--r", vol_args.r, "Radius override")->check(CLI::PositiveNumber);
  vol->add_option("--format", vol_args.format, "text | machine")->check(CLI::IsMember({"text", "machine"}));
  vol->add_option("--out", vol_args.out, "Output file");

  BoundsArgs bnd_args;
  CLI::App* bnd = app.add_subcommand("bounds", "Evaluate the closed-form bounds");
  bnd->add_option("--r", bnd_args.r, "Ball radius")->required();
  bnd->add_option("--lambda", bnd_args.lambda, "Separating value")->required();
  bnd->add_option("--dim", bnd_args.dim, "Dimension")->required()->check(CLI::PositiveNumber);
  bnd->add_option("--n", bnd_args.n, "Number of points")->required()->check(CLI::PositiveNumber);
  bnd->add_option("--k", bnd_args.k, "Quermass index");
  bnd->add_option("--vk", bnd_args.vk, "Unit-ball volume (default omega_d)");
  bnd->add_option("--cr", bnd_args.cr, "Circumradius of P");
  bnd->add_option("--volume-a", bnd_args.volume_a, "Volume of A for the ball-body bound");
  bnd->add_option("--d0", bnd_args.d0, "Dimension from which the large-d lemmas are assumed");
  bnd->add_option("--format", bnd_args.format, "text | machine")->check(CLI::IsMember({"text", "machine"}));
  bnd->add_option("--out", bnd_args.out, "Output file");

  VerifyArgs ver_args;
  CLI::App* ver = app.add_subcommand("verify", "Run the verification suite or verify instance files");
  ver->add_option("--config", ver_args.config, "Suite configuration (JSON)");
  ver->add_option("--instance", ver_args.instances, "Instance file(s) to verify instead of a generated suite");
  ver->add_option("--dims", ver_args.dims, "Dimensions")->delimiter(',');
  ver->add_option("--norms", ver_args.norms, "Norm shorthands")->delimiter(',');
  ver->add_option("--regimes", ver_args.regimes, "Regimes")->delimiter(',');
  ver->add_option("--n-bases", ver_args.n_bases, "N = ceil(base^d) for each base")->delimiter(',');
  ver->add_option("--count", ver_args.count, "Instances per regime")->check(CLI::PositiveNumber);
  ver->add_option("--lambda", ver_args.lambda, "Separating value")->check(CLI::PositiveNumber);
  ver->add_option("--samples", ver_args.samples, "Monte Carlo samples per volume")->check(CLI::PositiveNumber);
  ver->add_option("--confidence", ver_args.confidence, "Interval confidence");
  ver->add_option("--jobs", ver_args.jobs, "Worker threads")->check(CLI::PositiveNumber);
  ver->add_option("--directions", ver_args.directions, "Quermass direction samples")->check(CLI::PositiveNumber);
  ver->add_option("--quermass-samples", ver_args.quermass_samples, "Planar volume samples in the quermass recursion")
      ->check(CLI::PositiveNumber);
  ver->add_option("--quermass-k", ver_args.quermass_ks, "Quermass indices")->delimiter(',');
  ver->add_flag("--no-part-ii", ver_args.no_part_ii, "Skip the formula-layer checks");
  ver->add_flag("--no-exact", ver_args.no_exact, "Use Monte Carlo even where exact planar areas exist");
  ver->add_option("--d0", ver_args.d0, "Dimension from which the large-d lemmas are assumed");
  ver->add_option("--seed", ver_args.seed, "Master seed");
  ver->add_option("--format", ver_args.format, "machine | text | csv-table")
      ->check(CLI::IsMember({"machine", "text", "csv-table"}));
  ver->add_option("--out", ver_args.out, "Report file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  try {
    if (gen->parsed()) return CmdGen(gen_args, *gen, out, err);
    if (vol->parsed()) return CmdVolume(vol_args, *vol, out);
    if (bnd->parsed()) return CmdBounds(bnd_args, *bnd, out);
    if (ver->parsed()) return CmdVerify(ver_args, *ver, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::kInvalidArgument:
        return kExitUsage;
      case ErrorKind::kInputData:
        return kExitInputData;
      case ErrorKind::kNumerical:
        return kExitVerifyFail;
    }
  }
  return kExitUsage;
}

}  // namespace unicon::cli

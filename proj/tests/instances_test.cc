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
#include <filesystem>
#include <memory>
#include <set>

#include <gtest/gtest.h>

#include "json.hpp"
#include "test_support.h"

namespace unicon {
namespace {

using testing::Vec;

std::shared_ptr<const NormBody> Share(NormBody k) {
  return std::make_shared<const NormBody>(std::move(k));
}

TEST(GenPacked, LatticeExamples) {
  const PointConfiguration p = GenPacked(2, 9, 1.0, NormBody::LInf(2), PackStrategy::kLattice, 1);
  std::set<std::pair<double, double>> got;
  for (const Vector& v : p.points) got.insert({v[0], v[1]});
  std::set<std::pair<double, double>> want;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) want.insert({i, j});
  EXPECT_EQ(got, want);

  const PointConfiguration e = GenPacked(2, 4, 2.0, NormBody::Euclidean(2), PackStrategy::kLattice, 1);
  for (const Vector& v : e.points) {
    EXPECT_NEAR(std::fmod(v[0], 2.0), 0.0, 1e-12);
    EXPECT_NEAR(std::fmod(v[1], 2.0), 0.0, 1e-12);
  }
}

TEST(GenPacked, AlwaysSeparated) {
  const std::vector<NormBody> norms = {NormBody::Euclidean(2), NormBody::L1(2), NormBody::LInf(3),
                                       NormBody::Lp(3, 3.0), RandomSymmetricHexagon(8)};
  for (const NormBody& k : norms) {
    for (PackStrategy s : {PackStrategy::kLattice, PackStrategy::kDart}) {
      for (int n : {2, 5, 9, 17}) {
        const double lambda = 0.7;
        const PointConfiguration p = GenPacked(k.dim(), n, lambda, k, s, 3 + n);
        ASSERT_EQ(p.size(), n);
        EXPECT_GE(MinPairDistance(p, k).distance, lambda - 1e-9) << k.Name() << " " << ToString(s);
      }
    }
  }
  const PointConfiguration a = GenPacked(2, 12, 1.0, NormBody::L1(2), PackStrategy::kDart, 5);
  const PointConfiguration b = GenPacked(2, 12, 1.0, NormBody::L1(2), PackStrategy::kDart, 5);
  for (int i = 0; i < 12; ++i) EXPECT_EQ(a.points[i], b.points[i]);
}

TEST(GenClustered, AlwaysContracted) {
  const std::vector<NormBody> norms = {NormBody::Euclidean(3), NormBody::L1(2), NormBody::LInf(2),
                                       NormBody::Lp(2, 1.5), RandomSymmetricHexagon(8)};
  for (const NormBody& k : norms) {
    for (int seed = 0; seed < 5; ++seed) {
      const PointConfiguration q = GenClustered(k.dim(), 10, 1.3, k, seed);
      EXPECT_LE(MaxPairDistance(q, k).distance, 1.3 + 1e-9) << k.Name();
    }
  }
}

TEST(GenInstance, Regimes) {
  const auto linf = Share(NormBody::LInf(2));
  const UniformContractionInstance sup = GenInstance(4, 1.0, linf, Regime::kSuper, 7);
  const double cr = Circumradius(sup.p, *linf).radius;
  EXPECT_NEAR(cr, 0.5, 1e-9);
  EXPECT_GT(sup.r, cr);
  EXPECT_NEAR(sup.r, 1.25 * cr + 1.0, 1e-12);
  EXPECT_TRUE(sup.Certify().pass);

  const UniformContractionInstance sub = GenInstance(4, 1.0, linf, Regime::kSubLambda, 7);
  EXPECT_NEAR(sub.r, 0.4, 1e-12);
  const UniformContractionInstance mid = GenInstance(9, 1.0, linf, Regime::kMid, 7);
  EXPECT_GE(mid.r, 0.5);
  EXPECT_LE(mid.r, Circumradius(mid.p, *linf).radius);
  EXPECT_EQ(ClassifyRegime(mid.r, 1.0, Circumradius(mid.p, *linf).radius), Regime::kMid);

  for (auto k : {Share(NormBody::Euclidean(2)), Share(NormBody::L1(2)), linf}) {
    for (uint64_t seed = 0; seed < 10; ++seed) {
      const UniformContractionInstance two = GenInstance(2, 1.0, k, Regime::kSuper, seed);
      EXPECT_GE(Circumradius(two.p, *k).radius, 0.5 - 1e-9);
      const UniformContractionInstance nine = GenInstance(9, 1.0, k, Regime::kSuper, seed);
      EXPECT_GE(Circumradius(nine.p, *k).radius, 1.0 - 1e-9) << k->Name();
    }
  }
}

TEST(GenInstance, Deterministic) {
  const auto hex = Share(RandomSymmetricHexagon(3));
  GenOptions opts;
  opts.strategy = PackStrategy::kDart;
  const std::string a = InstanceToJson(GenInstance(7, 1.0, hex, Regime::kSuper, 11, opts));
  const std::string b = InstanceToJson(GenInstance(7, 1.0, hex, Regime::kSuper, 11, opts));
  EXPECT_EQ(a, b);
  EXPECT_NE(a, InstanceToJson(GenInstance(7, 1.0, hex, Regime::kSuper, 12, opts)));
}

TEST(Json, RoundTrip) {
  const std::vector<std::shared_ptr<const NormBody>> norms = {
      Share(NormBody::Euclidean(3)), Share(NormBody::Lp(2, 3.0)), Share(NormBody::LInf(2)),
      Share(RandomSymmetricHexagon(4)), Share(ParseNorm("lp:inf", 3))};
  for (const auto& k : norms) {
    const UniformContractionInstance inst = GenInstance(5, 0.8, k, Regime::kSuper, 9);
    const std::string text = InstanceToJson(inst);
    const UniformContractionInstance back = InstanceFromJson(text);
    EXPECT_EQ(InstanceToJson(back), text) << k->Name();
    EXPECT_EQ(back.r, inst.r);
    for (int i = 0; i < inst.n(); ++i) {
      EXPECT_EQ(back.p.points[i], inst.p.points[i]);
      EXPECT_EQ(back.q.points[i], inst.q.points[i]);
    }
  }
}

TEST(Json, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "unicon_instances_test.json";
  const UniformContractionInstance inst =
      GenInstance(4, 1.0, Share(NormBody::L1(2)), Regime::kMid, 3);
  SaveInstance(inst, path.string());
  EXPECT_EQ(InstanceToJson(LoadInstance(path.string())), InstanceToJson(inst));
  std::filesystem::remove(path);
  EXPECT_THROW(LoadInstance(path.string()), Error);
}

ErrorKind KindOf(const std::string& text) {
  try {
    InstanceFromJson(text);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected a load error";
  return ErrorKind::kInvalidArgument;
}

TEST(Json, RejectsCorruption) {
  const UniformContractionInstance inst =
      GenInstance(4, 1.0, Share(NormBody::LInf(2)), Regime::kSuper, 3);
  const nlohmann::json good = nlohmann::json::parse(InstanceToJson(inst));

  nlohmann::json bad = good;
  bad["P"][1] = bad["P"][0];
  bad["P"][1][0] = bad["P"][0][0].get<double>() + 0.25;
  try {
    InstanceFromJson(bad.dump());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInputData);
    EXPECT_NE(std::string(e.what()).find("P-pair (1, 2)"), std::string::npos) << e.what();
  }

  bad = good;
  bad["version"] = "2";
  EXPECT_EQ(KindOf(bad.dump()), ErrorKind::kInputData);
  bad.erase("version");
  EXPECT_EQ(KindOf(bad.dump()), ErrorKind::kInputData);
  bad = good;
  bad["version"] = 1;
  EXPECT_NO_THROW(InstanceFromJson(bad.dump()));

  bad = good;
  bad["Q"][0][0] = 100.0;
  EXPECT_EQ(KindOf(bad.dump()), ErrorKind::kInputData);
  bad = good;
  bad["regime"] = "sub-lambda";
  EXPECT_EQ(KindOf(bad.dump()), ErrorKind::kInputData);
  bad = good;
  bad["P"][0] = {0.0, 0.0, 0.0};
  EXPECT_EQ(KindOf(bad.dump()), ErrorKind::kInputData);
  EXPECT_EQ(KindOf("{not json"), ErrorKind::kInputData);
  EXPECT_EQ(KindOf("[]"), ErrorKind::kInputData);
}

TEST(ParseNorm, Specs) {
  EXPECT_EQ(ParseNorm("euclid", 3).kind(), NormKind::kEuclidean);
  EXPECT_EQ(ParseNorm("l1", 2).Gauge(Vec({1, -2})), 3.0);
  EXPECT_EQ(ParseNorm("linf", 2).Gauge(Vec({1, -2})), 2.0);
  EXPECT_NEAR(ParseNorm("lp:3", 2).Gauge(Vec({1, 1})), std::cbrt(2.0), 1e-12);
  EXPECT_EQ(ParseNorm("hexagon:5", 2).PolygonCycle().size(), 6u);
  EXPECT_THROW(ParseNorm("hexagon:5", 3), Error);
  EXPECT_THROW(ParseNorm("lp:0.5", 2), Error);
  EXPECT_THROW(ParseNorm("bogus", 2), Error);

  const auto path = std::filesystem::temp_directory_path() / "unicon_poly_h.json";
  {
    std::FILE* f = std::fopen(path.string().c_str(), "w");
    std::fputs("[[1, 0], [0, 1], [1, 1]]", f);
    std::fclose(f);
  }
  const NormBody h = ParseNorm("poly-h:" + path.string(), 2);
  EXPECT_NEAR(h.Gauge(Vec({1, 1})), 2.0, 1e-12);
  std::filesystem::remove(path);
  EXPECT_THROW(ParseNorm("poly-h:" + path.string(), 2), Error);
}

TEST(Regime, ParseAndClassify) {
  EXPECT_EQ(ParseRegime("sub-lambda"), Regime::kSubLambda);
  EXPECT_EQ(ParseRegime(ToString(Regime::kMid)), Regime::kMid);
  EXPECT_EQ(ParsePackStrategy("dart"), PackStrategy::kDart);
  EXPECT_THROW(ParseRegime("hyper"), Error);
  EXPECT_EQ(ClassifyRegime(0.3, 1.0, 2.0), Regime::kSubLambda);
  EXPECT_EQ(ClassifyRegime(1.0, 1.0, 2.0), Regime::kMid);
  EXPECT_EQ(ClassifyRegime(2.5, 1.0, 2.0), Regime::kSuper);
}

}  // namespace
}  // namespace unicon

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

#ifndef UNICON_RNG_H_
#define UNICON_RNG_H_

#include <array>
#include <cstdint>
#include <limits>

namespace unicon {

// Philox-4x32-10 counter-based generator (Salmon et al., SC'11). The output
// is a pure function of (counter, key), which is what lets Monte Carlo shards
// reproduce the exact same sample stream under any worker partitioning.
class Philox4x32 {
 public:
  using Counter = std::array<uint32_t, 4>;
  using Key = std::array<uint32_t, 2>;

  static Counter Generate(Counter counter, Key key);
};

// Purpose tags keep the substreams used by different algorithms disjoint.
enum class StreamPurpose : uint32_t {
  kMonteCarloVolume = 1,
  kUnitBallVolume = 2,
  kDirections = 3,
  kInstanceGeneration = 4,
  kNormGeneration = 5,
  kSeedDerivation = 6,
  kPropertyTest = 7,
};

// Sequential view of one substream: key = seed, counter = (block, index,
// purpose). Satisfies UniformRandomBitGenerator so it plugs into <random>.
class CounterStream {
 public:
  using result_type = uint64_t;

  CounterStream(uint64_t seed, StreamPurpose purpose, uint64_t index);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()();

  // Uniform on [0, 1) with 53 random bits.
  double Uniform();
  // Standard normal via Box-Muller; the spare variate is cached.
  double Normal();

 private:
  void Refill();

  Philox4x32::Key key_;
  uint64_t index_;
  uint32_t purpose_;
  uint32_t block_ = 0;
  std::array<uint32_t, 4> buffer_{};
  int consumed_ = 4;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Derives an independent child seed; used for per-instance and per-level seeds.
uint64_t DeriveSeed(uint64_t seed, uint64_t tag, uint64_t index);

}  // namespace unicon

#endif  // UNICON_RNG_H_

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

#include "unicon/rng.h"

#include <cmath>
#include <numbers>

namespace unicon {
namespace {

constexpr uint32_t kPhiloxM0 = 0xD2511F53;
constexpr uint32_t kPhiloxM1 = 0xCD9E8D57;
constexpr uint32_t kPhiloxW0 = 0x9E3779B9;
constexpr uint32_t kPhiloxW1 = 0xBB67AE85;
constexpr int kPhiloxRounds = 10;

inline void MulHiLo(uint32_t a, uint32_t b, uint32_t& hi, uint32_t& lo) {
  const uint64_t product = static_cast<uint64_t>(a) * b;
  hi = static_cast<uint32_t>(product >> 32);
  lo = static_cast<uint32_t>(product);
}

}  // namespace

Philox4x32::Counter Philox4x32::Generate(Counter ctr, Key key) {
  for (int round = 0; round < kPhiloxRounds; ++round) {
    uint32_t hi0, lo0, hi1, lo1;
    MulHiLo(kPhiloxM0, ctr[0], hi0, lo0);
    MulHiLo(kPhiloxM1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    key[0] += kPhiloxW0;
    key[1] += kPhiloxW1;
  }
  return ctr;
}

CounterStream::CounterStream(uint64_t seed, StreamPurpose purpose,
                             uint64_t index)
    : key_{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32)},
      index_(index),
      purpose_(static_cast<uint32_t>(purpose)) {}

void CounterStream::Refill() {
  buffer_ = Philox4x32::Generate(
      {block_, static_cast<uint32_t>(index_),
       static_cast<uint32_t>(index_ >> 32), purpose_},
      key_);
  ++block_;
  consumed_ = 0;
}

CounterStream::result_type CounterStream::operator()() {
  if (consumed_ > 2) Refill();
  const uint64_t value = (static_cast<uint64_t>(buffer_[consumed_]) << 32) |
                         buffer_[consumed_ + 1];
  consumed_ += 2;
  return value;
}

double CounterStream::Uniform() {
  return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

double CounterStream::Normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // 1 - U keeps the log argument in (0, 1].
  const double u1 = 1.0 - Uniform();
  const double u2 = Uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

uint64_t DeriveSeed(uint64_t seed, uint64_t tag, uint64_t index) {
  const auto out = Philox4x32::Generate(
      {static_cast<uint32_t>(index), static_cast<uint32_t>(index >> 32),
       static_cast<uint32_t>(tag), static_cast<uint32_t>(tag >> 32)},
      {static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32)});
  return (static_cast<uint64_t>(out[0]) << 32) | out[1];
}

}  // namespace unicon

// Copyright 2026 The qsample Authors
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

#include "qsample/rng.h"

#include "qsample/error.h"

namespace qsample {
namespace {

constexpr uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

uint64_t Mix(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

Rng::Rng(RngSeed seed)
    : key_(Mix(Mix(seed.seed + kGolden) ^ Mix(seed.stream * kGolden + 1))) {}

uint64_t Rng::Next() { return Mix(key_ + (++counter_) * kGolden); }

Rng Rng::Split(uint64_t child) const {
  return Rng(Mix(key_ ^ Mix(child + 0x632be59bd9b4e019ULL)), 0, true);
}

int64_t Rng::UniformInt(int64_t lo, int64_t hi) {
  if (hi < lo) {
    throw Error(ErrorCode::kInvalidArgument, "UniformInt: empty range");
  }
  const uint64_t span = static_cast<uint64_t>(hi) - static_cast<uint64_t>(lo);
  if (span == std::numeric_limits<uint64_t>::max()) {
    return static_cast<int64_t>(Next());
  }
  const uint64_t range = span + 1;
  // Lemire's multiply-and-reject.
  UInt128 m = static_cast<UInt128>(Next()) * range;
  uint64_t low = static_cast<uint64_t>(m);
  if (low < range) {
    const uint64_t threshold = (0 - range) % range;
    while (low < threshold) {
      m = static_cast<UInt128>(Next()) * range;
      low = static_cast<uint64_t>(m);
    }
  }
  return static_cast<int64_t>(static_cast<uint64_t>(lo) +
                              static_cast<uint64_t>(m >> 64));
}

double Rng::UniformReal() {
  return static_cast<double>(Next() >> 11) * 0x1.0p-53;
}

}  // namespace qsample

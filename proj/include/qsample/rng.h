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

#ifndef QSAMPLE_RNG_H_
#define QSAMPLE_RNG_H_

#include <cstdint>
#include <limits>

namespace qsample {

// Signed 128-bit integer for exact intermediate products.
__extension__ typedef __int128 Int128;
__extension__ typedef unsigned __int128 UInt128;

// Identifies one reproducible random stream.
struct RngSeed {
  uint64_t seed = 0;
  uint64_t stream = 0;
};

// Counter-based generator: the i-th output of a stream is a fixed mixing
// function of (key, i), where the key is derived from (seed, stream). Streams
// can be split into children without touching the parent's counter, so every
// oracle and every experiment trial can own an independent stream.
class Rng {
 public:
  using result_type = uint64_t;

  explicit Rng(RngSeed seed);
  Rng(uint64_t seed, uint64_t stream) : Rng(RngSeed{seed, stream}) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()() { return Next(); }

  uint64_t Next();

  // Independent child stream; does not advance this generator.
  Rng Split(uint64_t child) const;

  // Uniform integer in [lo, hi] (inclusive), unbiased.
  int64_t UniformInt(int64_t lo, int64_t hi);

  // Uniform double in [0, 1) with 53 random bits.
  double UniformReal();

  uint64_t counter() const { return counter_; }

 private:
  Rng(uint64_t key, uint64_t counter, bool) : key_(key), counter_(counter) {}

  uint64_t key_;
  uint64_t counter_ = 0;
};

}  // namespace qsample

#endif  // QSAMPLE_RNG_H_

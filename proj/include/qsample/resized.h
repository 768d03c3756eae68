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

#ifndef QSAMPLE_RESIZED_H_
#define QSAMPLE_RESIZED_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "qsample/modnum.h"
#include "qsample/rng.h"

namespace qsample {

// A single-component sample (a', a' s + e' mod q), |e'| <= xi'.
struct ResizedSample {
  int64_t a = 0;
  int64_t b = 0;
};

enum class ResizedSupport {
  kInvertible,  // a' uniform over the units of Z_q
  kFull,        // a' uniform over Z_q
  kExplicit,    // a' uniform over a caller-supplied list
};

class ResizedOracle {
 public:
  // The error defaults to uniform on [-xi, xi].
  ResizedOracle(Residue secret, int64_t xi, RngSeed seed,
                ResizedSupport support = ResizedSupport::kInvertible,
                std::vector<int64_t> explicit_support = {},
                std::optional<ErrorDistribution> error = std::nullopt);

  // Secret uniform in Z_q, drawn from stream `seed` split 0.
  static ResizedOracle WithRandomSecret(Modulus q, int64_t xi, RngSeed seed,
                                        ResizedSupport support =
                                            ResizedSupport::kInvertible);

  ResizedSample Query();

  const Residue& secret() const { return secret_; }
  const Modulus& modulus() const { return secret_.modulus(); }
  int64_t xi() const { return xi_; }
  std::size_t queries() const { return queries_; }

 private:
  Residue secret_;
  int64_t xi_;
  ResizedSupport support_;
  std::vector<int64_t> explicit_support_;
  ErrorDistribution error_;
  Rng rng_;
  std::size_t queries_ = 0;
};

// Draws `repetitions` samples and fails on the first centered residual
// |b - a * candidate| above xi.
bool ETest(int64_t candidate, ResizedOracle& oracle, int64_t xi,
           int repetitions);

// Smallest M with ((2 xi + 1) / q)^M <= 2^-20; 1 when 2 xi + 1 >= q.
int DefaultTestRepetitions(const Modulus& q, int64_t xi);

struct SearchErrorResult {
  std::optional<int64_t> secret;  // nullopt: every candidate failed
  int iterations = 0;             // candidates tried, at most 2 xi + 1
  int redraws = 0;                // anchors discarded as non-invertible
  ResizedSample anchor;
};

// Walks candidate errors e from -xi up to xi, forms (a')^{-1} (b' - e) from
// the anchor sample and returns the first candidate that passes ETest.
// Throws kNotInvertible if the anchor's a' is not a unit.
SearchErrorResult SearchErrorFrom(const ResizedSample& anchor,
                                  ResizedOracle& oracle, int64_t xi,
                                  int repetitions);

// Queries anchors until a' is invertible (kNotInvertible after 1000 tries),
// then runs SearchErrorFrom.
SearchErrorResult SearchError(ResizedOracle& oracle, int64_t xi,
                              int repetitions);

}  // namespace qsample

#endif  // QSAMPLE_RESIZED_H_

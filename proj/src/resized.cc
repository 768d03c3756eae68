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

#include "qsample/resized.h"

#include <cmath>
#include <string>
#include <utility>

#include "qsample/error.h"

namespace qsample {
namespace {

constexpr int kMaxAnchorDraws = 1000;

}  // namespace

ResizedOracle::ResizedOracle(Residue secret, int64_t xi, RngSeed seed,
                             ResizedSupport support,
                             std::vector<int64_t> explicit_support,
                             std::optional<ErrorDistribution> error)
    : secret_(secret),
      xi_(xi),
      support_(support),
      explicit_support_(std::move(explicit_support)),
      error_(error.value_or(ErrorDistribution::UniformBounded(xi))),
      rng_(Rng(seed).Split(1)) {
  if (xi_ < 0) throw Error(ErrorCode::kInvalidArgument, "xi must be >= 0");
  if (error_.bound() > xi_) {
    throw Error(ErrorCode::kInvalidArgument, "error bound exceeds xi");
  }
  if (support_ == ResizedSupport::kExplicit && explicit_support_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "explicit support is empty");
  }
}

ResizedOracle ResizedOracle::WithRandomSecret(Modulus q, int64_t xi,
                                              RngSeed seed,
                                              ResizedSupport support) {
  Rng secret_rng = Rng(seed).Split(0);
  return ResizedOracle(Residue(secret_rng.UniformInt(0, q.value() - 1), q), xi,
                       seed, support);
}

ResizedSample ResizedOracle::Query() {
  ++queries_;
  const Modulus& q = modulus();
  int64_t a = 0;
  switch (support_) {
    case ResizedSupport::kFull:
      a = rng_.UniformInt(0, q.value() - 1);
      break;
    case ResizedSupport::kInvertible:
      do {
        a = rng_.UniformInt(1, q.value() - 1);
      } while (!IsInvertible(a, q));
      break;
    case ResizedSupport::kExplicit:
      a = explicit_support_[static_cast<std::size_t>(rng_.UniformInt(
          0, static_cast<int64_t>(explicit_support_.size()) - 1))];
      break;
  }
  a = q.Center(a);
  const int64_t e = error_.Sample(rng_);
  return ResizedSample{a, q.Add(q.Mul(a, secret_.value()), e)};
}

bool ETest(int64_t candidate, ResizedOracle& oracle, int64_t xi,
           int repetitions) {
  const Modulus& q = oracle.modulus();
  for (int i = 0; i < repetitions; ++i) {
    const ResizedSample s = oracle.Query();
    if (std::abs(q.Sub(s.b, q.Mul(s.a, candidate))) > xi) return false;
  }
  return true;
}

int DefaultTestRepetitions(const Modulus& q, int64_t xi) {
  const double ratio =
      static_cast<double>(2 * xi + 1) / static_cast<double>(q.value());
  if (ratio >= 1.0) return 1;
  return std::max(1, static_cast<int>(std::ceil(-20.0 / std::log2(ratio))));
}

SearchErrorResult SearchErrorFrom(const ResizedSample& anchor,
                                  ResizedOracle& oracle, int64_t xi,
                                  int repetitions) {
  const Modulus& q = oracle.modulus();
  const int64_t a_inv = ModInverse(anchor.a, q);
  SearchErrorResult result;
  result.anchor = anchor;
  for (int64_t e = -xi; e <= xi; ++e) {
    ++result.iterations;
    const int64_t candidate = q.Mul(a_inv, q.Sub(anchor.b, e));
    if (ETest(candidate, oracle, xi, repetitions)) {
      result.secret = candidate;
      return result;
    }
  }
  return result;
}

SearchErrorResult SearchError(ResizedOracle& oracle, int64_t xi,
                              int repetitions) {
  const Modulus& q = oracle.modulus();
  for (int draw = 0; draw < kMaxAnchorDraws; ++draw) {
    const ResizedSample anchor = oracle.Query();
    if (!IsInvertible(anchor.a, q)) continue;
    SearchErrorResult result = SearchErrorFrom(anchor, oracle, xi, repetitions);
    result.redraws = draw;
    return result;
  }
  throw Error(ErrorCode::kNotInvertible,
              "no invertible a' in " + std::to_string(kMaxAnchorDraws) +
                  " draws");
}

}  // namespace qsample

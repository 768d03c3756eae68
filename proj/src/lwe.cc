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

#include "qsample/lwe.h"

#include <cmath>
#include <numeric>
#include <utility>

#include "qsample/error.h"

namespace qsample {

LweOracle::LweOracle(ResidueVector secret, ErrorDistribution error,
                     RngSeed seed,
                     std::optional<std::vector<ResidueVector>> support,
                     std::size_t state_cap)
    : secret_(std::move(secret)),
      error_(error),
      support_(std::move(support)),
      state_cap_(state_cap),
      rng_(Rng(seed).Split(1)) {
  if (secret_.size() == 0) {
    throw Error(ErrorCode::kInvalidArgument, "secret must be nonempty");
  }
  if (support_) {
    if (support_->empty()) {
      throw Error(ErrorCode::kInvalidArgument, "support must be nonempty");
    }
    for (const auto& a : *support_) {
      if (a.size() != secret_.size()) {
        throw Error(ErrorCode::kDimensionMismatch, "support vector length");
      }
      if (!(a.modulus() == secret_.modulus())) {
        throw Error(ErrorCode::kModulusMismatch, "support vector modulus");
      }
    }
  }
}

LweOracle LweOracle::WithRandomSecret(Modulus q, int n,
                                      ErrorDistribution error, RngSeed seed) {
  Rng secret_rng = Rng(seed).Split(0);
  return LweOracle(ResidueVector::Uniform(q, static_cast<std::size_t>(n),
                                          secret_rng),
                   error, seed);
}

ResidueVector LweOracle::DrawSupportVector() {
  if (support_) {
    const auto i = rng_.UniformInt(0, static_cast<int64_t>(support_->size()) - 1);
    return (*support_)[static_cast<std::size_t>(i)];
  }
  return ResidueVector::Uniform(modulus(), secret_.size(), rng_);
}

LweSample LweOracle::ClassicalQuery() {
  ++classical_queries_;
  ResidueVector a = DrawSupportVector();
  const int64_t e = error_.Sample(rng_);
  const int64_t b = modulus().Add(InnerProductMod(secret_, a).value(), e);
  return LweSample{std::move(a), Residue(b, modulus())};
}

StateVector LweOracle::QuantumQuery() {
  ++quantum_queries_;
  const Modulus q = modulus();
  const int n = dimension();
  StateDimension(q, n + 1, state_cap_);

  std::vector<LweSample> pairs;
  auto label = [&](ResidueVector a) {
    const int64_t e = error_.Sample(rng_);
    const int64_t b = q.Add(InnerProductMod(secret_, a).value(), e);
    pairs.push_back(LweSample{std::move(a), Residue(b, q)});
  };
  if (support_) {
    pairs.reserve(support_->size());
    for (const auto& a : *support_) label(a);
  } else {
    // Enumerate Z_q^n in canonical digit order.
    std::vector<int64_t> digits(static_cast<std::size_t>(n), 0);
    for (;;) {
      label(ResidueVector(q, digits));
      int i = n - 1;
      while (i >= 0 && ++digits[static_cast<std::size_t>(i)] == q.value()) {
        digits[static_cast<std::size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
    }
  }
  return StateVector::FromSamples(q, n, pairs, state_cap_);
}

std::optional<ResidueVector> BvSolve(const StateVector& state, int n,
                                     Rng& rng) {
  if (state.registers() != n + 1) {
    throw Error(ErrorCode::kDimensionMismatch,
                "BV expects n + 1 = " + std::to_string(n + 1) +
                    " registers, got " + std::to_string(state.registers()));
  }
  const Modulus& q = state.modulus();
  const ResidueVector outcome = MeasureAll(QftAll(state), rng);
  const int64_t y = outcome[static_cast<std::size_t>(n)];
  if (!IsInvertible(y, q)) return std::nullopt;
  const int64_t minus_y_inv = q.Sub(0, ModInverse(y, q));
  ResidueVector candidate(q, static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < candidate.size(); ++i) {
    candidate.Set(i, q.Mul(minus_y_inv, outcome[i]));
  }
  return candidate;
}

bool TestCandidate(const ResidueVector& candidate, LweSampleSource& oracle,
                   int64_t k, int repetitions) {
  const Modulus q = oracle.modulus();
  for (int i = 0; i < repetitions; ++i) {
    const LweSample sample = oracle.ClassicalQuery();
    const int64_t residual =
        q.Sub(sample.b.value(), InnerProductMod(sample.a, candidate).value());
    if (std::abs(residual) > k) return false;
  }
  return true;
}

SolverParams SolverParams::Defaults(const Modulus& q, int64_t k, double eta) {
  if (!(eta > 0.0 && eta < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "eta must lie in (0, 1)");
  }
  SolverParams params;
  params.eta = eta;
  params.outer_repetitions = static_cast<int>(std::ceil(
      8.0 * static_cast<double>(std::max<int64_t>(k, 1)) * std::log(1.0 / eta)));
  params.outer_repetitions = std::max(params.outer_repetitions, 1);

  const double accept = static_cast<double>(2 * k + 1) /
                        static_cast<double>(q.value());
  params.test_repetitions = 1;
  if (accept < 1.0) {
    double bound = accept;
    while (bound > 1e-2) {
      bound *= accept;
      ++params.test_repetitions;
    }
  }
  return params;
}

SolveOutcome QlweSolveDetailed(LweSampleSource& oracle,
                               const SolverParams& params, Rng& rng) {
  SolveOutcome outcome;
  const int n = oracle.dimension();
  for (int i = 0; i < params.outer_repetitions; ++i) {
    ++outcome.iterations;
    const StateVector sample = oracle.QuantumQuery();
    std::optional<ResidueVector> candidate = BvSolve(sample, n, rng);
    if (!candidate) {
      ++outcome.bottoms;
      if (params.on_bottom == BottomPolicy::kAbort) return outcome;
      continue;
    }
    if (TestCandidate(*candidate, oracle, oracle.error_bound(),
                      params.test_repetitions)) {
      outcome.secret = std::move(candidate);
      return outcome;
    }
  }
  return outcome;
}

std::optional<ResidueVector> QlweSolve(LweSampleSource& oracle,
                                       const SolverParams& params, Rng& rng) {
  return QlweSolveDetailed(oracle, params, rng).secret;
}

}  // namespace qsample

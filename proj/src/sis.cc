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

#include "qsample/sis.h"

#include <cmath>
#include <string>
#include <utility>

#include "qsample/error.h"

namespace qsample {

SisOracle::SisOracle(std::vector<int64_t> secret, Modulus q, int m,
                     double beta, RngSeed seed)
    : secret_(std::move(secret)),
      modulus_(q),
      m_(m),
      beta_(beta),
      rng_(Rng(seed).Split(1)) {
  if (secret_.empty() || m_ < 1) {
    throw Error(ErrorCode::kInvalidArgument, "need n >= 1 and m >= 1");
  }
  if (!(beta_ < static_cast<double>(q.value()))) {
    throw Error(ErrorCode::kInvalidArgument, "beta must be below q");
  }
  const double norm = EuclideanNorm(secret_);
  if (norm == 0.0 || norm > beta_) {
    throw Error(ErrorCode::kInvalidArgument,
                "secret norm must lie in (0, beta]");
  }
}

SisOracle SisOracle::WithRandomSecret(Modulus q, int n, int m, double beta,
                                      int64_t entry_bound, RngSeed seed) {
  if (n < 1 || entry_bound < 1) {
    throw Error(ErrorCode::kInvalidArgument, "need n >= 1, entry bound >= 1");
  }
  Rng rng = Rng(seed).Split(0);
  std::vector<int64_t> v(static_cast<std::size_t>(n));
  for (int attempt = 0; attempt < 1'000'000; ++attempt) {
    for (auto& x : v) x = rng.UniformInt(-entry_bound, entry_bound);
    const double norm = EuclideanNorm(v);
    if (norm > 0.0 && norm <= beta) return SisOracle(v, q, m, beta, seed);
  }
  throw Error(ErrorCode::kInvalidArgument,
              "no secret with the requested entry and norm bounds found");
}

SisSample SisOracle::Query() {
  ++queries_;
  const auto n = secret_.size();
  ResidueMatrix a = ResidueMatrix::Uniform(
      modulus_, static_cast<std::size_t>(m_), n, rng_);
  ResidueVector z = a * ResidueVector(modulus_, secret_);
  return SisSample{std::move(a), std::move(z)};
}

double EuclideanNorm(const std::vector<int64_t>& v) {
  double total = 0.0;
  for (int64_t x : v) total += static_cast<double>(x) * static_cast<double>(x);
  return std::sqrt(total);
}

int DefaultMaxSamples(int n, int m) { return (n + m - 1) / m + 8; }

SisSolution SisSolve(SisSampleSource& source) {
  return SisSolve(source,
                  DefaultMaxSamples(source.dimension(), source.rows()));
}

SisSolution SisSolve(SisSampleSource& source, int max_samples) {
  const Modulus q = source.modulus();
  const int n = source.dimension();
  const int m = source.rows();
  if (!q.is_prime()) {
    throw Error(ErrorCode::kNonPrimeModulus,
                "SIS elimination needs prime q, got " +
                    std::to_string(q.value()));
  }
  if (max_samples < (n + m - 1) / m) {
    throw Error(ErrorCode::kInvalidArgument,
                "max_samples below ceil(n / m)");
  }

  ResidueMatrix stacked(q, 0, static_cast<std::size_t>(n));
  std::vector<int64_t> rhs;
  for (int used = 1; used <= max_samples; ++used) {
    const SisSample sample = source.Query();
    stacked.AppendRows(sample.a);
    rhs.insert(rhs.end(), sample.z.values().begin(), sample.z.values().end());
    if (stacked.rows() < static_cast<std::size_t>(n)) continue;

    ResidueVector solution(q, 0);
    try {
      solution = SolveLinearMod(stacked, ResidueVector(q, rhs));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kRankDeficient) continue;
      throw;
    }

    SisSolution result;
    result.samples_used = used;
    result.v.assign(solution.values().begin(), solution.values().end());
    const double norm = EuclideanNorm(result.v);
    if (norm > source.norm_bound()) {
      throw Error(ErrorCode::kNormTooLarge,
                  "lifted solution has norm " + std::to_string(norm) +
                      " > beta; is beta >= q/2?");
    }
    const SisSample check = source.Query();
    if (!(check.a * solution == check.z)) {
      throw Error(ErrorCode::kVerificationFailed,
                  "solution does not satisfy a fresh sample");
    }
    return result;
  }
  throw Error(ErrorCode::kRankDeficient,
              "stacked system still below rank " + std::to_string(n) +
                  " after " + std::to_string(max_samples) + " samples");
}

}  // namespace qsample

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

#ifndef QSAMPLE_LWE_H_
#define QSAMPLE_LWE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qsample/modnum.h"
#include "qsample/qsim.h"
#include "qsample/rng.h"

namespace qsample {

// Anything the qLWE solver can query: quantum samples for BV and classical
// samples for the candidate test. Both must be consistent with one secret.
class LweSampleSource {
 public:
  virtual ~LweSampleSource() = default;

  virtual Modulus modulus() const = 0;
  virtual int dimension() const = 0;
  // k: every classical residual b - <s, a> is within [-k, k].
  virtual int64_t error_bound() const = 0;

  virtual LweSample ClassicalQuery() = 0;
  virtual StateVector QuantumQuery() = 0;
};

// Holds a secret s in Z_q^n and answers LWE queries over a support V (all of
// Z_q^n by default). Errors are fresh on every query, and independent per
// basis vector inside one quantum sample.
class LweOracle : public LweSampleSource {
 public:
  LweOracle(ResidueVector secret, ErrorDistribution error, RngSeed seed,
            std::optional<std::vector<ResidueVector>> support = std::nullopt,
            std::size_t state_cap = kDefaultStateCap);

  // Uniformly random secret drawn from stream `seed` split 0.
  static LweOracle WithRandomSecret(Modulus q, int n, ErrorDistribution error,
                                    RngSeed seed);

  Modulus modulus() const override { return secret_.modulus(); }
  int dimension() const override { return static_cast<int>(secret_.size()); }
  int64_t error_bound() const override { return error_.bound(); }

  LweSample ClassicalQuery() override;
  StateVector QuantumQuery() override;

  const ResidueVector& secret() const { return secret_; }
  const ErrorDistribution& error() const { return error_; }
  std::size_t classical_queries() const { return classical_queries_; }
  std::size_t quantum_queries() const { return quantum_queries_; }

 private:
  ResidueVector DrawSupportVector();

  ResidueVector secret_;
  ErrorDistribution error_;
  std::optional<std::vector<ResidueVector>> support_;
  std::size_t state_cap_;
  Rng rng_;
  std::size_t classical_queries_ = 0;
  std::size_t quantum_queries_ = 0;
};

// Generalized Bernstein-Vazirani on a state with n + 1 registers: Fourier
// transform every register, measure (x, y), return -y^{-1} x when
// gcd(y, q) = 1 and nullopt (bottom) otherwise.
std::optional<ResidueVector> BvSolve(const StateVector& state, int n, Rng& rng);

// Draws `repetitions` classical samples; fails as soon as one residual
// |b - <a, candidate>| (centered) exceeds k.
bool TestCandidate(const ResidueVector& candidate, LweSampleSource& oracle,
                   int64_t k, int repetitions);

// What the solver does when BV returns bottom.
enum class BottomPolicy {
  // Count the iteration and keep going.
  kRetry,
  // Return bottom immediately, as in the printed solver loop.
  kAbort,
};

struct SolverParams {
  int outer_repetitions = 1;  // l1
  int test_repetitions = 1;   // l2
  double eta = 0.1;
  BottomPolicy on_bottom = BottomPolicy::kRetry;

  // l1 = ceil(8 max(k, 1) ln(1/eta)); l2 = least l with ((2k+1)/q)^l <= 1e-2
  // (1 when 2k + 1 >= q and the test cannot discriminate).
  static SolverParams Defaults(const Modulus& q, int64_t k, double eta);
};

struct SolveOutcome {
  std::optional<ResidueVector> secret;
  int iterations = 0;
  int bottoms = 0;
};

// Repeats quantum query -> BV -> Test up to l1 times and returns the first
// candidate that passes.
SolveOutcome QlweSolveDetailed(LweSampleSource& oracle,
                               const SolverParams& params, Rng& rng);
std::optional<ResidueVector> QlweSolve(LweSampleSource& oracle,
                                       const SolverParams& params, Rng& rng);

}  // namespace qsample

#endif  // QSAMPLE_LWE_H_

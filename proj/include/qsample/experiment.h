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

#ifndef QSAMPLE_EXPERIMENT_H_
#define QSAMPLE_EXPERIMENT_H_

#include <cstdint>
#include <string>
#include <vector>

namespace qsample {

enum class Problem { kLwe, kRlwe, kSis, kResizedSearch, kResizedCvp, kFig2 };

// Throws kInvalidArgument for an unknown name.
Problem ParseProblem(const std::string& name);
std::string ProblemName(Problem problem);

// Zero in an optional numeric field means "use the default for the problem".
struct ExperimentConfig {
  Problem problem = Problem::kLwe;
  int64_t q = 0;
  int n = 0;
  int m = 0;
  int64_t k = 0;
  int64_t xi = 0;
  double beta = 0.0;
  double eta = 0.1;
  std::string phi;  // comma-separated phi_0..phi_{n-1}; empty means X^n + 1
  int j = 0;
  int trials = 1000;
  uint64_t seed = 0;
  int64_t xi_min = 0;
  int64_t xi_max = 0;
  int64_t xi_step = 0;
  int attempts = 0;  // CVP pairs per trial: 1 for fig2, 5 for resized-cvp
  bool strict_bottom = false;
  unsigned threads = 0;  // 0: hardware concurrency
  std::string out;
};

struct SuccessRateRow {
  int64_t xi_prime = 0;
  int trials = 0;
  int successes = 0;
  double success_rate = 0.0;
};

// Sweep bounds after defaults: 10..1200 step 10 for q = 8380417, otherwise
// 1..40 step 1.
struct Sweep {
  int64_t min = 0;
  int64_t max = 0;
  int64_t step = 0;
};
Sweep ResolveSweep(const ExperimentConfig& config);

// One fig2 trial: a fresh secret and CVP recovery on stream (xi' << 32 | t).
bool Fig2TrialSucceeds(int64_t q, int64_t xi, int attempts, uint64_t seed,
                       int trial);

// For every xi' in the sweep, runs `trials` CVP recoveries with fresh secrets.
// Trial t at xi' uses stream (xi' << 32 | t) of the seed, so outcomes do not
// depend on the trial count or on threading.
std::vector<SuccessRateRow> RunFig2(const ExperimentConfig& config);

struct SolverReport {
  bool success = false;
  std::string planted;
  std::string recovered;  // "bottom" when nothing was returned
  int64_t samples_used = 0;
  double wall_time_ms = 0.0;
  std::vector<std::string> warnings;
};

// Runs one seeded instance of the selected pipeline (not fig2).
SolverReport RunSolver(const ExperimentConfig& config);

// Header "xi_prime,trials,successes,success_rate", rates with four decimals.
std::string FormatCsv(const std::vector<SuccessRateRow>& rows);
// Throws kIoError.
void WriteCsv(const std::vector<SuccessRateRow>& rows, const std::string& path);

}  // namespace qsample

#endif  // QSAMPLE_EXPERIMENT_H_

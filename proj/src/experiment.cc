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

#include "qsample/experiment.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include "qsample/error.h"
#include "qsample/lattice2d.h"
#include "qsample/lwe.h"
#include "qsample/resized.h"
#include "qsample/ring.h"
#include "qsample/sis.h"

namespace qsample {
namespace {

constexpr int64_t kDilithiumModulus = 8380417;

void Require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::kInvalidArgument, message);
}

std::string VectorString(const std::vector<int64_t>& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out << ", ";
    out << v[i];
  }
  out << ')';
  return out.str();
}

std::string PolyString(const RingElement& s) {
  return VectorString(s.coefficients());
}

SolverReport RunLwe(const ExperimentConfig& c) {
  Require(c.n >= 1, "--n must be positive");
  Require(c.k >= 0, "--k must be non-negative");
  const Modulus q(c.q);
  LweOracle oracle = LweOracle::WithRandomSecret(
      q, c.n, ErrorDistribution::UniformBounded(c.k), RngSeed{c.seed, 0});
  SolverParams params = SolverParams::Defaults(q, c.k, c.eta);
  if (c.strict_bottom) params.on_bottom = BottomPolicy::kAbort;
  Rng rng(c.seed, 1);
  const auto s = QlweSolve(oracle, params, rng);
  SolverReport report;
  report.planted = oracle.secret().ToString();
  report.recovered = s ? s->ToString() : "bottom";
  report.success = s && *s == oracle.secret();
  report.samples_used = static_cast<int64_t>(oracle.quantum_queries() +
                                             oracle.classical_queries());
  return report;
}

SolverReport RunRlwe(const ExperimentConfig& c) {
  Require(c.k >= 0, "--k must be non-negative");
  const Modulus q(c.q);
  PolyModulus phi = c.phi.empty() ? PolyModulus::Negacyclic(c.n)
                                  : PolyModulus::Parse(c.phi);
  Require(c.n == 0 || c.n == phi.degree(), "--n does not match --phi");
  RlweOracle oracle = RlweOracle::WithRandomSecret(
      q, phi, ErrorDistribution::UniformBounded(c.k), RngSeed{c.seed, 0});
  SolverParams params = SolverParams::Defaults(q, c.k, c.eta);
  if (c.strict_bottom) params.on_bottom = BottomPolicy::kAbort;
  Rng rng(c.seed, 1);
  const auto s = RlweSolve(oracle, params, rng, c.j);
  SolverReport report;
  report.planted = PolyString(oracle.secret());
  report.recovered = s ? PolyString(*s) : "bottom";
  report.success = s && *s == oracle.secret();
  report.samples_used = static_cast<int64_t>(oracle.queries());
  const std::size_t image = TransformImageSize(oracle.companion(), c.j);
  std::size_t full = 1;
  for (int i = 0; i < phi.degree(); ++i) full *= static_cast<std::size_t>(c.q);
  if (image < full) {
    report.warnings.push_back("transform image has " + std::to_string(image) +
                              " of " + std::to_string(full) +
                              " vectors; recovery may fail");
  }
  return report;
}

SolverReport RunSis(const ExperimentConfig& c) {
  Require(c.n >= 1 && c.m >= 1, "--n and --m must be positive");
  Require(c.beta >= 1.0, "--beta must be at least 1");
  const Modulus q(c.q);
  const int64_t entry_bound =
      std::max<int64_t>(1, std::min<int64_t>(3, static_cast<int64_t>(c.beta)));
  SisOracle oracle = SisOracle::WithRandomSecret(q, c.n, c.m, c.beta,
                                                 entry_bound,
                                                 RngSeed{c.seed, 0});
  SolverReport report;
  report.planted = VectorString(oracle.secret());
  const SisSolution solution = SisSolve(oracle);
  report.recovered = VectorString(solution.v);
  report.success = solution.v == oracle.secret();
  report.samples_used = solution.samples_used;
  return report;
}

SolverReport RunResizedSearch(const ExperimentConfig& c) {
  Require(c.xi >= 0, "--xi must be non-negative");
  const Modulus q(c.q);
  ResizedOracle oracle =
      ResizedOracle::WithRandomSecret(q, c.xi, RngSeed{c.seed, 0});
  const SearchErrorResult result =
      SearchError(oracle, c.xi, DefaultTestRepetitions(q, c.xi));
  SolverReport report;
  report.planted = std::to_string(oracle.secret().value());
  report.recovered =
      result.secret ? std::to_string(*result.secret) : "not-found";
  report.success = result.secret && *result.secret == oracle.secret().value();
  report.samples_used = static_cast<int64_t>(oracle.queries());
  return report;
}

SolverReport RunResizedCvp(const ExperimentConfig& c) {
  Require(c.xi >= 0, "--xi must be non-negative");
  const Modulus q(c.q);
  ResizedOracle oracle =
      ResizedOracle::WithRandomSecret(q, c.xi, RngSeed{c.seed, 0});
  const CvpRecoveryResult result = RecoverComponentCvp(
      oracle, c.xi, c.attempts > 0 ? c.attempts : kDefaultCvpAttempts);
  SolverReport report;
  report.planted = std::to_string(oracle.secret().value());
  report.recovered = result.secret ? std::to_string(*result.secret) : "failure";
  report.success = result.secret && *result.secret == oracle.secret().value();
  report.samples_used = static_cast<int64_t>(oracle.queries());
  return report;
}

}  // namespace

bool Fig2TrialSucceeds(int64_t q, int64_t xi, int attempts, uint64_t seed,
                       int trial) {
  const uint64_t stream =
      (static_cast<uint64_t>(xi) << 32) | static_cast<uint32_t>(trial);
  ResizedOracle oracle =
      ResizedOracle::WithRandomSecret(Modulus(q), xi, RngSeed{seed, stream});
  const CvpRecoveryResult result = RecoverComponentCvp(oracle, xi, attempts);
  return result.secret && *result.secret == oracle.secret().value();
}

Problem ParseProblem(const std::string& name) {
  if (name == "lwe") return Problem::kLwe;
  if (name == "rlwe") return Problem::kRlwe;
  if (name == "sis") return Problem::kSis;
  if (name == "resized-search") return Problem::kResizedSearch;
  if (name == "resized-cvp") return Problem::kResizedCvp;
  if (name == "fig2") return Problem::kFig2;
  throw Error(ErrorCode::kInvalidArgument, "unknown problem '" + name + "'");
}

std::string ProblemName(Problem problem) {
  switch (problem) {
    case Problem::kLwe: return "lwe";
    case Problem::kRlwe: return "rlwe";
    case Problem::kSis: return "sis";
    case Problem::kResizedSearch: return "resized-search";
    case Problem::kResizedCvp: return "resized-cvp";
    case Problem::kFig2: return "fig2";
  }
  return "unknown";
}

Sweep ResolveSweep(const ExperimentConfig& config) {
  Sweep sweep = config.q == kDilithiumModulus ? Sweep{10, 1200, 10}
                                              : Sweep{1, 40, 1};
  if (config.xi_min != 0) sweep.min = config.xi_min;
  if (config.xi_max != 0) sweep.max = config.xi_max;
  if (config.xi_step != 0) sweep.step = config.xi_step;
  Require(sweep.min >= 0 && sweep.step > 0 && sweep.min <= sweep.max,
          "sweep must be nonempty with a positive step");
  Require(sweep.max < (int64_t{1} << 31), "xi' too large");
  return sweep;
}

std::vector<SuccessRateRow> RunFig2(const ExperimentConfig& config) {
  Require(config.trials >= 1, "--trials must be positive");
  const Modulus q(config.q);
  const Sweep sweep = ResolveSweep(config);
  const int attempts = config.attempts > 0 ? config.attempts : 1;
  unsigned threads = config.threads > 0 ? config.threads
                                        : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1,
                                 static_cast<unsigned>(config.trials));

  std::vector<SuccessRateRow> rows;
  std::vector<char> outcome(static_cast<std::size_t>(config.trials));
  for (int64_t xi = sweep.min; xi <= sweep.max; xi += sweep.step) {
    auto work = [&](unsigned worker) {
      for (int t = static_cast<int>(worker); t < config.trials;
           t += static_cast<int>(threads)) {
        outcome[static_cast<std::size_t>(t)] =
            Fig2TrialSucceeds(q.value(), xi, attempts, config.seed, t);
      }
    };
    if (threads == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
      for (auto& th : pool) th.join();
    }
    SuccessRateRow row;
    row.xi_prime = xi;
    row.trials = config.trials;
    row.successes =
        static_cast<int>(std::count(outcome.begin(), outcome.end(), 1));
    row.success_rate = static_cast<double>(row.successes) / row.trials;
    rows.push_back(row);
  }
  return rows;
}

SolverReport RunSolver(const ExperimentConfig& config) {
  Require(config.q >= 2, "--q must be at least 2");
  const auto start = std::chrono::steady_clock::now();
  SolverReport report;
  switch (config.problem) {
    case Problem::kLwe: report = RunLwe(config); break;
    case Problem::kRlwe: report = RunRlwe(config); break;
    case Problem::kSis: report = RunSis(config); break;
    case Problem::kResizedSearch: report = RunResizedSearch(config); break;
    case Problem::kResizedCvp: report = RunResizedCvp(config); break;
    case Problem::kFig2:
      throw Error(ErrorCode::kInvalidArgument, "use RunFig2 for fig2");
  }
  if ((config.problem == Problem::kResizedCvp) &&
      !CvpConditionHolds(Modulus(config.q), config.xi)) {
    report.warnings.push_back("8 xi'^2 > q: CVP recovery is expected to fail");
  }
  report.wall_time_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  return report;
}

std::string FormatCsv(const std::vector<SuccessRateRow>& rows) {
  std::string out = "xi_prime,trials,successes,success_rate\n";
  char rate[32];
  for (const auto& row : rows) {
    std::snprintf(rate, sizeof(rate), "%.4f", row.success_rate);
    out += std::to_string(row.xi_prime) + ',' + std::to_string(row.trials) +
           ',' + std::to_string(row.successes) + ',' + rate + '\n';
  }
  return out;
}

void WriteCsv(const std::vector<SuccessRateRow>& rows,
              const std::string& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorCode::kIoError, "cannot open " + path);
  file << FormatCsv(rows);
  file.close();
  if (!file) throw Error(ErrorCode::kIoError, "cannot write " + path);
}

}  // namespace qsample

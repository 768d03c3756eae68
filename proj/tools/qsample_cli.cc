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

// Command-line front end: one seeded solver run per invocation, or the
// success-rate sweep as CSV.
//
//   qsample lwe --q 13 --n 2 --k 1 --eta 0.1 --seed 42
//   qsample rlwe --q 5 --phi -1,0 --k 0 --seed 7
//   qsample sis --q 101 --n 24 --m 4 --beta 8 --seed 1
//   qsample resized-search --q 3329 --xi 30 --seed 3
//   qsample resized-cvp --q 3329 --xi 5 --seed 3
//   qsample fig2 --q 3329 --trials 1000 --seed 1 --out kyber.csv

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qsample/error.h"
#include "qsample/experiment.h"
#include "qsample/lattice2d.h"
#include "qsample/modnum.h"

namespace {

constexpr int kExitSolverFailure = 1;
constexpr int kExitConfigError = 2;

// Defaults for flags left unset, per problem.
void ApplyDefaults(qsample::ExperimentConfig& c) {
  using qsample::Problem;
  switch (c.problem) {
    case Problem::kLwe:
      if (c.q == 0) c.q = 13;
      if (c.n == 0) c.n = 2;
      break;
    case Problem::kRlwe:
      if (c.q == 0) c.q = 5;
      if (c.n == 0 && c.phi.empty()) c.n = 2;
      break;
    case Problem::kSis:
      if (c.q == 0) c.q = 101;
      if (c.n == 0) c.n = 24;
      if (c.m == 0) c.m = 4;
      if (c.beta == 0.0) c.beta = 8.0;
      break;
    case Problem::kResizedSearch:
    case Problem::kResizedCvp:
    case Problem::kFig2:
      if (c.q == 0) c.q = 3329;
      break;
  }
}

bool IsSolverFailure(qsample::ErrorCode code) {
  using qsample::ErrorCode;
  return code == ErrorCode::kRankDeficient ||
         code == ErrorCode::kNormTooLarge ||
         code == ErrorCode::kVerificationFailed;
}

int RunSweep(const qsample::ExperimentConfig& config) {
  const qsample::Sweep sweep = qsample::ResolveSweep(config);
  if (!qsample::CvpConditionHolds(qsample::Modulus(config.q), sweep.max)) {
    std::cerr << "warning: 8 xi'^2 exceeds q for part of the sweep; "
                 "success is expected to drop there\n";
  }
  const auto rows = qsample::RunFig2(config);
  if (config.out.empty()) {
    std::cout << qsample::FormatCsv(rows);
  } else {
    qsample::WriteCsv(rows, config.out);
  }
  return 0;
}

int RunOnce(const qsample::ExperimentConfig& config) {
  const qsample::SolverReport report = qsample::RunSolver(config);
  for (const auto& w : report.warnings) std::cerr << "warning: " << w << '\n';
  char wall[32];
  std::snprintf(wall, sizeof(wall), "%.3f", report.wall_time_ms);
  std::cout << "problem=" << qsample::ProblemName(config.problem) << '\n'
            << "seed=" << config.seed << '\n'
            << "success=" << (report.success ? "true" : "false") << '\n'
            << "planted=" << report.planted << '\n'
            << "recovered=" << report.recovered << '\n'
            << "samples_used=" << report.samples_used << '\n'
            << "wall_time_ms=" << wall << '\n';
  return report.success ? 0 : kExitSolverFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum-sample learning algorithms and experiments"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  qsample::ExperimentConfig config;
  app.add_option("--q", config.q, "Modulus");
  app.add_option("--n", config.n, "Dimension or ring degree");
  app.add_option("--m", config.m, "Rows per SIS sample");
  app.add_option("--k", config.k, "LWE error bound");
  app.add_option("--xi", config.xi, "Resized error bound xi'");
  app.add_option("--beta", config.beta, "SIS norm bound");
  app.add_option("--eta", config.eta, "Solver failure budget");
  app.add_option("--phi", config.phi,
                 "phi_0,...,phi_{n-1} low to high, phi = X^n - sum phi_i X^i")
      ->allow_extra_args(false);
  app.add_option("--j", config.j, "Column index for the RLWE transform");
  app.add_option("--trials", config.trials, "Trials per sweep point");
  app.add_option("--seed", config.seed, "Root seed");
  app.add_option("--xi-min", config.xi_min, "Sweep start");
  app.add_option("--xi-max", config.xi_max, "Sweep end (inclusive)");
  app.add_option("--xi-step", config.xi_step, "Sweep step");
  app.add_option("--attempts", config.attempts,
                 "Sample pairs per CVP recovery");
  app.add_option("--threads", config.threads, "Worker threads for fig2");
  app.add_flag("--strict-bottom", config.strict_bottom,
               "Stop the LWE solver at the first bottom");
  app.add_option("--out", config.out, "CSV path (stdout when omitted)");

  for (const char* name :
       {"lwe", "rlwe", "sis", "resized-search", "resized-cvp", "fig2"}) {
    app.add_subcommand(name, std::string("Run ") + name);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfigError;
  }

  try {
    config.problem = qsample::ParseProblem(app.get_subcommands().front()->get_name());
    ApplyDefaults(config);
    if (config.problem == qsample::Problem::kFig2) return RunSweep(config);
    return RunOnce(config);
  } catch (const qsample::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return IsSolverFailure(e.code()) ? kExitSolverFailure : kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfigError;
  }
}

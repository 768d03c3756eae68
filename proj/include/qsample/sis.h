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

#ifndef QSAMPLE_SIS_H_
#define QSAMPLE_SIS_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qsample/modnum.h"
#include "qsample/rng.h"

namespace qsample {

// One measured SIS sample: m equations A v = z over Z_q.
struct SisSample {
  ResidueMatrix a;
  ResidueVector z;
};

class SisSampleSource {
 public:
  virtual ~SisSampleSource() = default;

  virtual Modulus modulus() const = 0;
  virtual int dimension() const = 0;  // n
  virtual int rows() const = 0;       // m
  virtual double norm_bound() const = 0;  // beta

  virtual SisSample Query() = 0;
};

// Holds a short integer vector v with 0 < ||v|| <= beta < q and emits
// (A, A v mod q) with A uniform m x n.
class SisOracle : public SisSampleSource {
 public:
  SisOracle(std::vector<int64_t> secret, Modulus q, int m, double beta,
            RngSeed seed);

  // Secret entries uniform in [-entry_bound, entry_bound], redrawn until
  // 0 < ||v|| <= beta.
  static SisOracle WithRandomSecret(Modulus q, int n, int m, double beta,
                                    int64_t entry_bound, RngSeed seed);

  Modulus modulus() const override { return modulus_; }
  int dimension() const override { return static_cast<int>(secret_.size()); }
  int rows() const override { return m_; }
  double norm_bound() const override { return beta_; }

  SisSample Query() override;

  const std::vector<int64_t>& secret() const { return secret_; }
  std::size_t queries() const { return queries_; }

 private:
  std::vector<int64_t> secret_;
  Modulus modulus_;
  int m_;
  double beta_;
  Rng rng_;
  std::size_t queries_ = 0;
};

double EuclideanNorm(const std::vector<int64_t>& v);

struct SisSolution {
  std::vector<int64_t> v;
  int samples_used = 0;
};

// ceil(n / m) + 8.
int DefaultMaxSamples(int n, int m);

// Stacks samples until the system has full column rank, solves it by modular
// elimination and lifts each coordinate to its centered representative. The
// answer is checked against ||v|| <= beta and against one extra sample, which
// is not counted in samples_used.
//
// Throws kNonPrimeModulus, kRankDeficient (after max_samples), kNormTooLarge
// and kVerificationFailed.
SisSolution SisSolve(SisSampleSource& source, int max_samples);
SisSolution SisSolve(SisSampleSource& source);

}  // namespace qsample

#endif  // QSAMPLE_SIS_H_

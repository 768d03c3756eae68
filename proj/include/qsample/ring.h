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

#ifndef QSAMPLE_RING_H_
#define QSAMPLE_RING_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsample/lwe.h"
#include "qsample/modnum.h"
#include "qsample/qsim.h"
#include "qsample/rng.h"

namespace qsample {

// Monic phi(X) = X^n - sum_{i<n} phi_i X^i, stored as (phi_0, ..., phi_{n-1}).
class PolyModulus {
 public:
  explicit PolyModulus(std::vector<int64_t> tail);

  // X^n + 1, i.e. phi_0 = -1 and the rest zero.
  static PolyModulus Negacyclic(int n);
  // Comma-separated phi_0..phi_{n-1}, low to high: "-1,0,0,0" is X^4 + 1.
  static PolyModulus Parse(std::string_view text);

  int degree() const { return static_cast<int>(tail_.size()); }
  const std::vector<int64_t>& tail() const { return tail_; }

  friend bool operator==(const PolyModulus&, const PolyModulus&) = default;

 private:
  std::vector<int64_t> tail_;
};

// An element of Z_q[X]/<phi>, held as its coefficient vector V(a).
class RingElement {
 public:
  RingElement(Modulus q, PolyModulus phi, std::vector<int64_t> coefficients);
  RingElement(const ResidueVector& v, PolyModulus phi);

  static RingElement Zero(Modulus q, PolyModulus phi);
  static RingElement One(Modulus q, PolyModulus phi);
  // X^power mod phi.
  static RingElement Monomial(Modulus q, PolyModulus phi, int power);
  static RingElement Uniform(Modulus q, PolyModulus phi, Rng& rng);

  const Modulus& modulus() const { return modulus_; }
  const PolyModulus& poly_modulus() const { return phi_; }
  int degree() const { return phi_.degree(); }
  int64_t coefficient(std::size_t i) const { return coefficients_[i]; }
  const std::vector<int64_t>& coefficients() const { return coefficients_; }
  ResidueVector Vec() const { return ResidueVector(modulus_, coefficients_); }

  friend bool operator==(const RingElement&, const RingElement&) = default;

 private:
  Modulus modulus_;
  PolyModulus phi_;
  std::vector<int64_t> coefficients_;
};

// Schoolbook product reduced by X^n = sum phi_i X^i, then mod q.
RingElement PolyMulMod(const RingElement& a, const RingElement& b);
RingElement PolyAdd(const RingElement& a, const RingElement& b);

// The companion matrix P of phi over Z_q together with P^0 .. P^{n-1}.
// V(X a mod phi) = V(a) P.
class CompanionMatrix {
 public:
  CompanionMatrix(const PolyModulus& phi, Modulus q);

  const ResidueMatrix& P() const { return powers_.at(1 % powers_.size()); }
  const ResidueMatrix& Power(int i) const {
    return powers_.at(static_cast<std::size_t>(i));
  }
  int degree() const { return static_cast<int>(powers_.size()); }
  const PolyModulus& poly_modulus() const { return phi_; }
  const Modulus& modulus() const { return modulus_; }

 private:
  PolyModulus phi_;
  Modulus modulus_;
  std::vector<ResidueMatrix> powers_;
};

// M_phi(b): row i is V(b) P^i = V(X^i b mod phi), so V(a b) = V(a) M_phi(b).
ResidueMatrix MulMatrix(const RingElement& b, const CompanionMatrix& companion);

// C_j with columns (P^i)_j, so that a_j = (M_phi(a)_j)^T = V(a) C_j.
ResidueMatrix ColumnMap(const CompanionMatrix& companion, int j);

struct RlweSample {
  RingElement a;
  RingElement b;
};

// Secret s(X); queries return (a, s a + e) with a uniform in R_q and e having
// i.i.d. coefficients from the error law.
class RlweOracle {
 public:
  RlweOracle(RingElement secret, ErrorDistribution error, RngSeed seed,
             std::size_t state_cap = kDefaultStateCap);

  static RlweOracle WithRandomSecret(Modulus q, PolyModulus phi,
                                     ErrorDistribution error, RngSeed seed);

  RlweSample Query();

  const RingElement& secret() const { return secret_; }
  const ErrorDistribution& error() const { return error_; }
  const CompanionMatrix& companion() const { return companion_; }
  const Modulus& modulus() const { return secret_.modulus(); }
  int degree() const { return secret_.degree(); }
  std::size_t queries() const { return queries_; }
  std::size_t state_cap() const { return state_cap_; }

 private:
  friend StateVector RlweToLweQuantum(RlweOracle& oracle, int j);
  friend StateVector RlweColumnQuantum(RlweOracle& oracle, int j);

  RingElement secret_;
  ErrorDistribution error_;
  CompanionMatrix companion_;
  std::size_t state_cap_;
  Rng rng_;
  std::size_t queries_ = 0;
};

// (a, b) -> (a_j, b_j) with a_j = V(a) C_j and b_j the j-th coefficient of b.
// For a valid RLWE sample, b_j = <V(s), a_j> + e_j mod q.
LweSample RlweToLwe(const RlweSample& sample, int j,
                    const CompanionMatrix& companion);

// The post-transform quantum sample
//   (1/sqrt|V'|) sum_{a_j in V'} |a_j>|<V(s), a_j> + e_{a,j}>
// over the image V' = {V(a) C_j : a in R_q}, built directly. Each label gets
// a fresh error.
StateVector RlweToLweQuantum(RlweOracle& oracle, int j);

// The interchanged-role sample (1/sqrt q^n) sum_a |V(a)>|<V(a), s_j> + e>,
// an LWE sample for the secret s_j = (M_phi(s)_j)^T.
StateVector RlweColumnQuantum(RlweOracle& oracle, int j);

// |V'|, the size of the image of a -> a_j.
std::size_t TransformImageSize(const CompanionMatrix& companion, int j);

// Exposes an RLWE oracle as an LWE sample source for qLWE-Solver.
class RlweAsLweSource : public LweSampleSource {
 public:
  enum class Variant {
    // Samples (a_j, b_j) for the secret V(s).
    kSecretVector,
    // Samples (V(a), b_j) for the secret column s_j.
    kSecretColumn,
  };

  RlweAsLweSource(RlweOracle& oracle, int j, Variant variant);

  Modulus modulus() const override { return oracle_.modulus(); }
  int dimension() const override { return oracle_.degree(); }
  int64_t error_bound() const override { return oracle_.error().bound(); }

  LweSample ClassicalQuery() override;
  StateVector QuantumQuery() override;

 private:
  RlweOracle& oracle_;
  int j_;
  Variant variant_;
};

// Recovers s(X) by running qLWE-Solver on the kSecretVector transform at j.
std::optional<RingElement> RlweSolve(RlweOracle& oracle,
                                     const SolverParams& params, Rng& rng,
                                     int j = 0);

// Recovers every column s_j with the kSecretColumn transform and reassembles
// M_phi(s). Bottom if any column fails.
std::optional<ResidueMatrix> RlweSolveColumns(RlweOracle& oracle,
                                              const SolverParams& params,
                                              Rng& rng);

}  // namespace qsample

#endif  // QSAMPLE_RING_H_

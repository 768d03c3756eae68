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

#ifndef QSAMPLE_MODNUM_H_
#define QSAMPLE_MODNUM_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qsample/rng.h"

namespace qsample {

// Largest modulus accepted; keeps every product of two residues in int64.
inline constexpr int64_t kMaxModulus = int64_t{1} << 31;

// The integer q >= 2 defining Z_q, with its primality cached.
class Modulus {
 public:
  explicit Modulus(int64_t q);

  int64_t value() const { return q_; }
  bool is_prime() const { return prime_; }

  // Centered representative: [-q/2, q/2) for q > 2, {0, 1} for q = 2.
  int64_t Center(int64_t x) const;
  int64_t Center(Int128 x) const;
  // Representative in [0, q). Used only at I/O and indexing boundaries.
  int64_t Canonical(int64_t x) const;

  int64_t Add(int64_t a, int64_t b) const { return Center(a + b); }
  int64_t Sub(int64_t a, int64_t b) const { return Center(a - b); }
  int64_t Mul(int64_t a, int64_t b) const {
    return Center(static_cast<Int128>(a) * b);
  }

  friend bool operator==(const Modulus& a, const Modulus& b) {
    return a.q_ == b.q_;
  }

 private:
  int64_t q_;
  bool prime_;
};

// An element of Z_q held in centered form.
class Residue {
 public:
  Residue(int64_t x, Modulus q) : value_(q.Center(x)), modulus_(q) {}

  int64_t value() const { return value_; }
  const Modulus& modulus() const { return modulus_; }

  friend bool operator==(const Residue& a, const Residue& b) {
    return a.modulus_ == b.modulus_ && a.value_ == b.value_;
  }

 private:
  int64_t value_;
  Modulus modulus_;
};

Residue CenteredLift(int64_t x, Modulus q);

// Throws kNotInvertible when gcd(y, q) != 1.
Residue ModInverse(const Residue& y);
int64_t ModInverse(int64_t y, const Modulus& q);
bool IsInvertible(int64_t y, const Modulus& q);

// A vector over Z_q; all entries centered and sharing one modulus.
class ResidueVector {
 public:
  ResidueVector(Modulus q, std::size_t n) : modulus_(q), values_(n, 0) {}
  ResidueVector(Modulus q, std::span<const int64_t> raw);
  ResidueVector(Modulus q, std::initializer_list<int64_t> raw)
      : ResidueVector(q, std::span<const int64_t>(raw.begin(), raw.size())) {}

  static ResidueVector Uniform(Modulus q, std::size_t n, Rng& rng);

  std::size_t size() const { return values_.size(); }
  const Modulus& modulus() const { return modulus_; }
  int64_t operator[](std::size_t i) const { return values_[i]; }
  Residue at(std::size_t i) const { return Residue(values_.at(i), modulus_); }
  std::span<const int64_t> values() const { return values_; }
  void Set(std::size_t i, int64_t x) { values_.at(i) = modulus_.Center(x); }

  std::string ToString() const;

  friend bool operator==(const ResidueVector& a, const ResidueVector& b) {
    return a.modulus_ == b.modulus_ && a.values_ == b.values_;
  }

 private:
  Modulus modulus_;
  std::vector<int64_t> values_;
};

// Throws kDimensionMismatch / kModulusMismatch.
Residue InnerProductMod(const ResidueVector& a, const ResidueVector& b);

// Dense row-major matrix over Z_q.
class ResidueMatrix {
 public:
  ResidueMatrix(Modulus q, std::size_t rows, std::size_t cols)
      : modulus_(q), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static ResidueMatrix FromRows(Modulus q,
                                const std::vector<std::vector<int64_t>>& rows);
  static ResidueMatrix Identity(Modulus q, std::size_t n);
  static ResidueMatrix Uniform(Modulus q, std::size_t rows, std::size_t cols,
                               Rng& rng);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Modulus& modulus() const { return modulus_; }

  int64_t operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  void Set(std::size_t i, std::size_t j, int64_t x) {
    data_[i * cols_ + j] = modulus_.Center(x);
  }
  std::span<const int64_t> Row(std::size_t i) const {
    return std::span<const int64_t>(data_).subspan(i * cols_, cols_);
  }
  ResidueVector RowVector(std::size_t i) const;
  ResidueVector ColumnVector(std::size_t j) const;

  // Appends the rows of `other` (same modulus and column count).
  void AppendRows(const ResidueMatrix& other);

  ResidueMatrix operator*(const ResidueMatrix& rhs) const;
  // Matrix-vector product A x.
  ResidueVector operator*(const ResidueVector& x) const;

  friend bool operator==(const ResidueMatrix& a, const ResidueMatrix& b) {
    return a.modulus_ == b.modulus_ && a.rows_ == b.rows_ &&
           a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  Modulus modulus_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<int64_t> data_;
};

// Row vector times matrix, v^T M.
ResidueVector RowTimesMatrix(const ResidueVector& v, const ResidueMatrix& m);

// Rank over the field Z_q. Throws kNonPrimeModulus for composite q.
std::size_t RankMod(const ResidueMatrix& a);

// Solves A x = rhs over Z_q for prime q by Gaussian elimination. A may have
// more rows than columns; the solution must be unique.
//
// Throws kNonPrimeModulus, kDimensionMismatch, kRankDeficient (rank < cols:
// draw more equations) or kInconsistentSystem (no solution).
ResidueVector SolveLinearMod(const ResidueMatrix& a, const ResidueVector& rhs);

// One classical LWE-style sample (a, b).
struct LweSample {
  ResidueVector a;
  Residue b;
};

// Error law chi. Every draw e satisfies |e| <= bound() (bernoulli: {0, 1}).
class ErrorDistribution {
 public:
  enum class Kind { kUniformBounded, kTruncatedGaussian, kBernoulli };

  // Uniform on [-k, k].
  static ErrorDistribution UniformBounded(int64_t k);
  // Discrete gaussian with weight exp(-x^2 / (2 sigma^2)) conditioned on
  // |x| <= bound.
  static ErrorDistribution TruncatedGaussian(double sigma, int64_t bound);
  // B_eta on {0, 1}, eta in [0, 1/2).
  static ErrorDistribution Bernoulli(double eta);

  Kind kind() const { return kind_; }
  int64_t bound() const { return bound_; }
  double sigma() const { return sigma_; }
  double eta() const { return eta_; }

  int64_t Sample(Rng& rng) const;

 private:
  ErrorDistribution(Kind kind, int64_t bound, double sigma, double eta)
      : kind_(kind), bound_(bound), sigma_(sigma), eta_(eta) {}

  Kind kind_;
  int64_t bound_;
  double sigma_;
  double eta_;
};

}  // namespace qsample

#endif  // QSAMPLE_MODNUM_H_

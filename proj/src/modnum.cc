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

#include "qsample/modnum.h"

#include <cmath>
#include <numeric>
#include <sstream>
#include <utility>

#include "qsample/error.h"

namespace qsample {
namespace {

bool IsPrime(int64_t q) {
  if (q < 2) return false;
  if (q % 2 == 0) return q == 2;
  for (int64_t d = 3; d * d <= q; d += 2) {
    if (q % d == 0) return false;
  }
  return true;
}

void RequireSameShape(const ResidueVector& a, const ResidueVector& b) {
  if (!(a.modulus() == b.modulus())) {
    throw Error(ErrorCode::kModulusMismatch, "vectors over different moduli");
  }
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "lengths " + std::to_string(a.size()) + " and " +
                    std::to_string(b.size()));
  }
}

void RequirePrime(const Modulus& q) {
  if (!q.is_prime()) {
    throw Error(ErrorCode::kNonPrimeModulus,
                "elimination needs a prime modulus, got " +
                    std::to_string(q.value()));
  }
}

// Reduces `rows` (an augmented or plain system) to row echelon form in place
// and returns the pivot column of each pivot row.
std::vector<std::size_t> Echelonize(const Modulus& q,
                                    std::vector<std::vector<int64_t>>& rows,
                                    std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const int64_t inv = ModInverse(rows[r][c], q);
    for (auto& x : rows[r]) x = q.Mul(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const int64_t f = rows[i][c];
      for (std::size_t k = c; k < rows[i].size(); ++k) {
        if (rows[r][k] != 0) rows[i][k] = q.Sub(rows[i][k], q.Mul(f, rows[r][k]));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Modulus::Modulus(int64_t q) : q_(q), prime_(IsPrime(q)) {
  if (q < 2 || q > kMaxModulus) {
    throw Error(ErrorCode::kInvalidArgument,
                "modulus must lie in [2, 2^31], got " + std::to_string(q));
  }
}

int64_t Modulus::Center(int64_t x) const {
  int64_t r = x % q_;
  if (r < 0) r += q_;
  if (q_ == 2) return r;
  return r >= (q_ + 1) / 2 ? r - q_ : r;
}

int64_t Modulus::Center(Int128 x) const {
  return Center(static_cast<int64_t>(x % q_));
}

int64_t Modulus::Canonical(int64_t x) const {
  int64_t r = x % q_;
  return r < 0 ? r + q_ : r;
}

Residue CenteredLift(int64_t x, Modulus q) { return Residue(x, q); }

bool IsInvertible(int64_t y, const Modulus& q) {
  return std::gcd(q.Canonical(y), q.value()) == 1;
}

int64_t ModInverse(int64_t y, const Modulus& q) {
  // Extended Euclid on (y mod q, q).
  int64_t old_r = q.Canonical(y), r = q.value();
  int64_t old_s = 1, s = 0;
  while (r != 0) {
    const int64_t quot = old_r / r;
    old_r = std::exchange(r, old_r - quot * r);
    old_s = std::exchange(s, old_s - quot * s);
  }
  if (old_r != 1) {
    throw Error(ErrorCode::kNotInvertible,
                std::to_string(y) + " mod " + std::to_string(q.value()));
  }
  return q.Center(old_s);
}

Residue ModInverse(const Residue& y) {
  return Residue(ModInverse(y.value(), y.modulus()), y.modulus());
}

ResidueVector::ResidueVector(Modulus q, std::span<const int64_t> raw)
    : modulus_(q), values_(raw.begin(), raw.end()) {
  for (auto& x : values_) x = modulus_.Center(x);
}

ResidueVector ResidueVector::Uniform(Modulus q, std::size_t n, Rng& rng) {
  ResidueVector v(q, n);
  for (std::size_t i = 0; i < n; ++i) {
    v.Set(i, rng.UniformInt(0, q.value() - 1));
  }
  return v;
}

std::string ResidueVector::ToString() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i > 0) out << ", ";
    out << values_[i];
  }
  out << ')';
  return out.str();
}

Residue InnerProductMod(const ResidueVector& a, const ResidueVector& b) {
  RequireSameShape(a, b);
  Int128 acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    acc += static_cast<Int128>(a[i]) * b[i];
  }
  return Residue(a.modulus().Center(acc), a.modulus());
}

ResidueMatrix ResidueMatrix::FromRows(
    Modulus q, const std::vector<std::vector<int64_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  ResidueMatrix m(q, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw Error(ErrorCode::kDimensionMismatch, "ragged matrix rows");
    }
    for (std::size_t j = 0; j < cols; ++j) m.Set(i, j, rows[i][j]);
  }
  return m;
}

ResidueMatrix ResidueMatrix::Identity(Modulus q, std::size_t n) {
  ResidueMatrix m(q, n, n);
  for (std::size_t i = 0; i < n; ++i) m.Set(i, i, 1);
  return m;
}

ResidueMatrix ResidueMatrix::Uniform(Modulus q, std::size_t rows,
                                     std::size_t cols, Rng& rng) {
  ResidueMatrix m(q, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      m.Set(i, j, rng.UniformInt(0, q.value() - 1));
    }
  }
  return m;
}

ResidueVector ResidueMatrix::RowVector(std::size_t i) const {
  return ResidueVector(modulus_, Row(i));
}

ResidueVector ResidueMatrix::ColumnVector(std::size_t j) const {
  ResidueVector v(modulus_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.Set(i, (*this)(i, j));
  return v;
}

void ResidueMatrix::AppendRows(const ResidueMatrix& other) {
  if (!(other.modulus_ == modulus_)) {
    throw Error(ErrorCode::kModulusMismatch, "AppendRows");
  }
  if (rows_ == 0 && data_.empty()) cols_ = other.cols_;
  if (other.cols_ != cols_) {
    throw Error(ErrorCode::kDimensionMismatch, "AppendRows column count");
  }
  data_.insert(data_.end(), other.data_.begin(), other.data_.end());
  rows_ += other.rows_;
}

ResidueMatrix ResidueMatrix::operator*(const ResidueMatrix& rhs) const {
  if (!(rhs.modulus_ == modulus_)) {
    throw Error(ErrorCode::kModulusMismatch, "matrix product");
  }
  if (cols_ != rhs.rows_) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix product");
  }
  ResidueMatrix out(modulus_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < rhs.cols_; ++j) {
      Int128 acc = 0;
      for (std::size_t k = 0; k < cols_; ++k) {
        acc += static_cast<Int128>((*this)(i, k)) * rhs(k, j);
      }
      out.data_[i * out.cols_ + j] = modulus_.Center(acc);
    }
  }
  return out;
}

ResidueVector ResidueMatrix::operator*(const ResidueVector& x) const {
  if (!(x.modulus() == modulus_)) {
    throw Error(ErrorCode::kModulusMismatch, "matrix-vector product");
  }
  if (x.size() != cols_) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix-vector product");
  }
  ResidueVector out(modulus_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Int128 acc = 0;
    for (std::size_t k = 0; k < cols_; ++k) {
      acc += static_cast<Int128>((*this)(i, k)) * x[k];
    }
    out.Set(i, modulus_.Center(acc));
  }
  return out;
}

ResidueVector RowTimesMatrix(const ResidueVector& v, const ResidueMatrix& m) {
  if (!(v.modulus() == m.modulus())) {
    throw Error(ErrorCode::kModulusMismatch, "row-vector product");
  }
  if (v.size() != m.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "row-vector product");
  }
  ResidueVector out(m.modulus(), m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Int128 acc = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      acc += static_cast<Int128>(v[i]) * m(i, j);
    }
    out.Set(j, m.modulus().Center(acc));
  }
  return out;
}

std::size_t RankMod(const ResidueMatrix& a) {
  RequirePrime(a.modulus());
  std::vector<std::vector<int64_t>> rows;
  rows.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    rows.emplace_back(a.Row(i).begin(), a.Row(i).end());
  }
  return Echelonize(a.modulus(), rows, a.cols()).size();
}

ResidueVector SolveLinearMod(const ResidueMatrix& a, const ResidueVector& rhs) {
  const Modulus& q = a.modulus();
  RequirePrime(q);
  if (!(rhs.modulus() == q)) {
    throw Error(ErrorCode::kModulusMismatch, "right-hand side modulus");
  }
  if (rhs.size() != a.rows()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "system has " + std::to_string(a.rows()) +
                    " rows but right-hand side has " +
                    std::to_string(rhs.size()));
  }
  const std::size_t n = a.cols();
  if (a.rows() < n) {
    throw Error(ErrorCode::kRankDeficient,
                std::to_string(a.rows()) + " equations for " +
                    std::to_string(n) + " unknowns");
  }

  std::vector<std::vector<int64_t>> rows;
  rows.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto& row = rows.emplace_back(a.Row(i).begin(), a.Row(i).end());
    row.push_back(rhs[i]);
  }
  const auto pivots = Echelonize(q, rows, n);
  if (pivots.size() < n) {
    throw Error(ErrorCode::kRankDeficient,
                "rank " + std::to_string(pivots.size()) + " < " +
                    std::to_string(n));
  }
  for (std::size_t i = n; i < rows.size(); ++i) {
    if (rows[i][n] != 0) {
      throw Error(ErrorCode::kInconsistentSystem,
                  "overdetermined system has no solution");
    }
  }
  ResidueVector x(q, n);
  for (std::size_t i = 0; i < n; ++i) x.Set(pivots[i], rows[i][n]);
  return x;
}

ErrorDistribution ErrorDistribution::UniformBounded(int64_t k) {
  if (k < 0) {
    throw Error(ErrorCode::kInvalidArgument, "error bound must be >= 0");
  }
  return ErrorDistribution(Kind::kUniformBounded, k, 0.0, 0.0);
}

ErrorDistribution ErrorDistribution::TruncatedGaussian(double sigma,
                                                       int64_t bound) {
  if (!(sigma > 0.0) || bound < 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "truncated gaussian needs sigma > 0 and bound >= 0");
  }
  return ErrorDistribution(Kind::kTruncatedGaussian, bound, sigma, 0.0);
}

ErrorDistribution ErrorDistribution::Bernoulli(double eta) {
  if (!(eta >= 0.0 && eta < 0.5)) {
    throw Error(ErrorCode::kInvalidArgument, "bernoulli eta must be in [0, 1/2)");
  }
  return ErrorDistribution(Kind::kBernoulli, 1, 0.0, eta);
}

int64_t ErrorDistribution::Sample(Rng& rng) const {
  switch (kind_) {
    case Kind::kUniformBounded:
      return rng.UniformInt(-bound_, bound_);
    case Kind::kTruncatedGaussian:
      // Uniform proposal on the support, accepted with the gaussian weight;
      // the accepted law is the discrete gaussian conditioned on |x| <= bound.
      for (;;) {
        const int64_t x = rng.UniformInt(-bound_, bound_);
        const double w = std::exp(-static_cast<double>(x) * x /
                                  (2.0 * sigma_ * sigma_));
        if (rng.UniformReal() < w) return x;
      }
    case Kind::kBernoulli:
      return rng.UniformReal() < eta_ ? 1 : 0;
  }
  return 0;
}

}  // namespace qsample

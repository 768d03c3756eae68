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

#include "qsample/ring.h"

#include <charconv>
#include <string>
#include <utility>

#include "qsample/error.h"

namespace qsample {
namespace {

void RequireSameRing(const RingElement& a, const RingElement& b) {
  if (!(a.modulus() == b.modulus()) || !(a.poly_modulus() == b.poly_modulus())) {
    throw Error(ErrorCode::kModulusMismatch, "ring elements from different rings");
  }
}

void RequireIndex(int j, int n) {
  if (j < 0 || j >= n) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "j = " + std::to_string(j) + " outside [0, " +
                    std::to_string(n) + ")");
  }
}

// Calls fn(digits) for every vector of Z_q^n in canonical digit order.
template <typename Fn>
void ForEachVector(const Modulus& q, int n, Fn&& fn) {
  std::vector<int64_t> digits(static_cast<std::size_t>(n), 0);
  for (;;) {
    fn(digits);
    int i = n - 1;
    while (i >= 0 && ++digits[static_cast<std::size_t>(i)] == q.value()) {
      digits[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) return;
  }
}

std::size_t CanonicalIndex(const Modulus& q, std::span<const int64_t> v) {
  std::size_t index = 0;
  for (int64_t x : v) {
    index = index * static_cast<std::size_t>(q.value()) +
            static_cast<std::size_t>(q.Canonical(x));
  }
  return index;
}

}  // namespace

PolyModulus::PolyModulus(std::vector<int64_t> tail) : tail_(std::move(tail)) {
  if (tail_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "phi must have degree >= 1");
  }
}

PolyModulus PolyModulus::Negacyclic(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "degree must be >= 1");
  std::vector<int64_t> tail(static_cast<std::size_t>(n), 0);
  tail[0] = -1;
  return PolyModulus(std::move(tail));
}

PolyModulus PolyModulus::Parse(std::string_view text) {
  std::vector<int64_t> tail;
  while (true) {
    const auto comma = text.find(',');
    std::string_view token = text.substr(0, comma);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    int64_t value = 0;
    const auto [end, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || end != token.data() + token.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "bad phi coefficient '" + std::string(token) + "'");
    }
    tail.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return PolyModulus(std::move(tail));
}

RingElement::RingElement(Modulus q, PolyModulus phi,
                         std::vector<int64_t> coefficients)
    : modulus_(q), phi_(std::move(phi)), coefficients_(std::move(coefficients)) {
  if (coefficients_.size() != static_cast<std::size_t>(phi_.degree())) {
    throw Error(ErrorCode::kDimensionMismatch,
                "ring element needs exactly " + std::to_string(phi_.degree()) +
                    " coefficients");
  }
  for (auto& c : coefficients_) c = modulus_.Center(c);
}

RingElement::RingElement(const ResidueVector& v, PolyModulus phi)
    : RingElement(v.modulus(), std::move(phi),
                  std::vector<int64_t>(v.values().begin(), v.values().end())) {}

RingElement RingElement::Zero(Modulus q, PolyModulus phi) {
  const auto n = static_cast<std::size_t>(phi.degree());
  return RingElement(q, std::move(phi), std::vector<int64_t>(n, 0));
}

RingElement RingElement::One(Modulus q, PolyModulus phi) {
  return Monomial(q, std::move(phi), 0);
}

RingElement RingElement::Monomial(Modulus q, PolyModulus phi, int power) {
  RingElement x = Zero(q, phi);
  if (phi.degree() > 1) {
    x.coefficients_[1] = 1;
  } else {
    // Degree one: X = phi_0.
    x.coefficients_[0] = q.Center(phi.tail()[0]);
  }
  RingElement out = Zero(q, phi);
  out.coefficients_[0] = 1;
  for (int i = 0; i < power; ++i) out = PolyMulMod(out, x);
  return out;
}

RingElement RingElement::Uniform(Modulus q, PolyModulus phi, Rng& rng) {
  const auto n = static_cast<std::size_t>(phi.degree());
  return RingElement(ResidueVector::Uniform(q, n, rng), std::move(phi));
}

RingElement PolyMulMod(const RingElement& a, const RingElement& b) {
  RequireSameRing(a, b);
  const Modulus& q = a.modulus();
  const auto n = static_cast<std::size_t>(a.degree());
  std::vector<Int128> product(2 * n - 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      product[i + k] += static_cast<Int128>(a.coefficient(i)) * b.coefficient(k);
    }
  }
  for (auto& c : product) c = q.Center(c);
  // X^d = X^{d-n} * X^n = X^{d-n} * sum phi_i X^i, from the top down.
  const auto& phi = a.poly_modulus().tail();
  for (std::size_t d = 2 * n - 1; d-- > n;) {
    const Int128 top = product[d];
    product[d] = 0;
    if (top == 0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      product[d - n + i] = q.Center(product[d - n + i] + top * phi[i]);
    }
  }
  std::vector<int64_t> coefficients(n);
  for (std::size_t i = 0; i < n; ++i) coefficients[i] = q.Center(product[i]);
  return RingElement(q, a.poly_modulus(), std::move(coefficients));
}

RingElement PolyAdd(const RingElement& a, const RingElement& b) {
  RequireSameRing(a, b);
  std::vector<int64_t> sum(a.coefficients());
  for (std::size_t i = 0; i < sum.size(); ++i) {
    sum[i] = a.modulus().Add(sum[i], b.coefficient(i));
  }
  return RingElement(a.modulus(), a.poly_modulus(), std::move(sum));
}

CompanionMatrix::CompanionMatrix(const PolyModulus& phi, Modulus q)
    : phi_(phi), modulus_(q) {
  const auto n = static_cast<std::size_t>(phi.degree());
  ResidueMatrix p(q, n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) p.Set(i, i + 1, 1);
  for (std::size_t k = 0; k < n; ++k) p.Set(n - 1, k, phi.tail()[k]);

  powers_.reserve(n);
  powers_.push_back(ResidueMatrix::Identity(q, n));
  for (std::size_t i = 1; i < n; ++i) powers_.push_back(powers_.back() * p);
  // Keep P itself reachable when n = 1, where P^0 is the only stored power.
  if (n == 1) powers_.push_back(p);
}

ResidueMatrix MulMatrix(const RingElement& b, const CompanionMatrix& companion) {
  if (!(b.modulus() == companion.modulus()) ||
      !(b.poly_modulus() == companion.poly_modulus())) {
    throw Error(ErrorCode::kModulusMismatch, "MulMatrix ring");
  }
  const auto n = static_cast<std::size_t>(b.degree());
  const ResidueVector vb = b.Vec();
  ResidueMatrix m(b.modulus(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const ResidueVector row =
        RowTimesMatrix(vb, companion.Power(static_cast<int>(i)));
    for (std::size_t k = 0; k < n; ++k) m.Set(i, k, row[k]);
  }
  return m;
}

ResidueMatrix ColumnMap(const CompanionMatrix& companion, int j) {
  const int n = companion.poly_modulus().degree();
  RequireIndex(j, n);
  const auto un = static_cast<std::size_t>(n);
  ResidueMatrix c(companion.modulus(), un, un);
  for (std::size_t i = 0; i < un; ++i) {
    const ResidueMatrix& power = companion.Power(static_cast<int>(i));
    for (std::size_t r = 0; r < un; ++r) {
      c.Set(r, i, power(r, static_cast<std::size_t>(j)));
    }
  }
  return c;
}

RlweOracle::RlweOracle(RingElement secret, ErrorDistribution error,
                       RngSeed seed, std::size_t state_cap)
    : secret_(std::move(secret)),
      error_(error),
      companion_(secret_.poly_modulus(), secret_.modulus()),
      state_cap_(state_cap),
      rng_(Rng(seed).Split(1)) {}

RlweOracle RlweOracle::WithRandomSecret(Modulus q, PolyModulus phi,
                                        ErrorDistribution error,
                                        RngSeed seed) {
  Rng secret_rng = Rng(seed).Split(0);
  return RlweOracle(RingElement::Uniform(q, std::move(phi), secret_rng), error,
                    seed);
}

RlweSample RlweOracle::Query() {
  ++queries_;
  RingElement a = RingElement::Uniform(modulus(), secret_.poly_modulus(), rng_);
  std::vector<int64_t> e(static_cast<std::size_t>(degree()));
  for (auto& c : e) c = error_.Sample(rng_);
  RingElement b = PolyAdd(PolyMulMod(secret_, a),
                          RingElement(modulus(), secret_.poly_modulus(), e));
  return RlweSample{std::move(a), std::move(b)};
}

LweSample RlweToLwe(const RlweSample& sample, int j,
                    const CompanionMatrix& companion) {
  const ResidueMatrix map = ColumnMap(companion, j);
  return LweSample{RowTimesMatrix(sample.a.Vec(), map),
                   Residue(sample.b.coefficient(static_cast<std::size_t>(j)),
                           sample.b.modulus())};
}

StateVector RlweToLweQuantum(RlweOracle& oracle, int j) {
  const Modulus q = oracle.modulus();
  const int n = oracle.degree();
  StateDimension(q, n + 1, oracle.state_cap_);
  const ResidueMatrix map = ColumnMap(oracle.companion_, j);
  const ResidueVector s = oracle.secret_.Vec();
  ++oracle.queries_;

  std::vector<bool> in_image(StateDimension(q, n, oracle.state_cap_), false);
  std::vector<LweSample> pairs;
  ForEachVector(q, n, [&](const std::vector<int64_t>& digits) {
    ResidueVector a_j = RowTimesMatrix(ResidueVector(q, digits), map);
    const std::size_t index = CanonicalIndex(q, a_j.values());
    if (in_image[index]) return;
    in_image[index] = true;
    const int64_t e = oracle.error_.Sample(oracle.rng_);
    const int64_t b = q.Add(InnerProductMod(s, a_j).value(), e);
    pairs.push_back(LweSample{std::move(a_j), Residue(b, q)});
  });
  return StateVector::FromSamples(q, n, pairs, oracle.state_cap_);
}

StateVector RlweColumnQuantum(RlweOracle& oracle, int j) {
  const Modulus q = oracle.modulus();
  const int n = oracle.degree();
  RequireIndex(j, n);
  StateDimension(q, n + 1, oracle.state_cap_);
  const ResidueVector s_j =
      MulMatrix(oracle.secret_, oracle.companion_).ColumnVector(
          static_cast<std::size_t>(j));
  ++oracle.queries_;

  std::vector<LweSample> pairs;
  ForEachVector(q, n, [&](const std::vector<int64_t>& digits) {
    ResidueVector a(q, digits);
    const int64_t e = oracle.error_.Sample(oracle.rng_);
    const int64_t b = q.Add(InnerProductMod(a, s_j).value(), e);
    pairs.push_back(LweSample{std::move(a), Residue(b, q)});
  });
  return StateVector::FromSamples(q, n, pairs, oracle.state_cap_);
}

std::size_t TransformImageSize(const CompanionMatrix& companion, int j) {
  const Modulus& q = companion.modulus();
  const int n = companion.poly_modulus().degree();
  const ResidueMatrix map = ColumnMap(companion, j);
  std::vector<bool> in_image(StateDimension(q, n, SIZE_MAX), false);
  std::size_t count = 0;
  ForEachVector(q, n, [&](const std::vector<int64_t>& digits) {
    const ResidueVector a_j = RowTimesMatrix(ResidueVector(q, digits), map);
    const std::size_t index = CanonicalIndex(q, a_j.values());
    if (!in_image[index]) {
      in_image[index] = true;
      ++count;
    }
  });
  return count;
}

RlweAsLweSource::RlweAsLweSource(RlweOracle& oracle, int j, Variant variant)
    : oracle_(oracle), j_(j), variant_(variant) {
  RequireIndex(j, oracle.degree());
}

LweSample RlweAsLweSource::ClassicalQuery() {
  const RlweSample sample = oracle_.Query();
  if (variant_ == Variant::kSecretVector) {
    return RlweToLwe(sample, j_, oracle_.companion());
  }
  return LweSample{sample.a.Vec(),
                   Residue(sample.b.coefficient(static_cast<std::size_t>(j_)),
                           sample.b.modulus())};
}

StateVector RlweAsLweSource::QuantumQuery() {
  return variant_ == Variant::kSecretVector ? RlweToLweQuantum(oracle_, j_)
                                            : RlweColumnQuantum(oracle_, j_);
}

std::optional<RingElement> RlweSolve(RlweOracle& oracle,
                                     const SolverParams& params, Rng& rng,
                                     int j) {
  RlweAsLweSource source(oracle, j, RlweAsLweSource::Variant::kSecretVector);
  std::optional<ResidueVector> s = QlweSolve(source, params, rng);
  if (!s) return std::nullopt;
  return RingElement(*s, oracle.secret().poly_modulus());
}

std::optional<ResidueMatrix> RlweSolveColumns(RlweOracle& oracle,
                                              const SolverParams& params,
                                              Rng& rng) {
  const auto n = static_cast<std::size_t>(oracle.degree());
  ResidueMatrix m(oracle.modulus(), n, n);
  for (std::size_t j = 0; j < n; ++j) {
    RlweAsLweSource source(oracle, static_cast<int>(j),
                           RlweAsLweSource::Variant::kSecretColumn);
    std::optional<ResidueVector> column = QlweSolve(source, params, rng);
    if (!column) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i) m.Set(i, j, (*column)[i]);
  }
  return m;
}

}  // namespace qsample

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

#include "qsample/resized.h"

#include <cmath>
#include <cstdint>
#include <set>

#include "gtest/gtest.h"
#include "qsample/error.h"
#include "test_util.h"

namespace qsample {
namespace {

using ::qsample::testing::ExpectErrorCode;
using ::qsample::testing::ThreeSigma;

TEST(ResizedOracleTest, ErrorBoundHonored) {
  const Modulus q(3329);
  ResizedOracle oracle(Residue(1234, q), 7, RngSeed{41, 0});
  std::set<int64_t> errors;
  for (int i = 0; i < 10000; ++i) {
    const ResizedSample s = oracle.Query();
    const int64_t e = q.Sub(s.b, q.Mul(s.a, 1234));
    ASSERT_LE(std::abs(e), 7);
    ASSERT_TRUE(IsInvertible(s.a, q));
    errors.insert(e);
  }
  EXPECT_EQ(errors.size(), 15u);
}

TEST(ResizedOracleTest, DegenerateCases) {
  const Modulus q(97);
  ResizedOracle exact(Residue(10, q), 0, RngSeed{41, 1});
  for (int i = 0; i < 200; ++i) {
    const ResizedSample s = exact.Query();
    EXPECT_EQ(s.b, q.Mul(s.a, 10));
  }
  ResizedOracle zero(Residue(0, q), 3, RngSeed{41, 2});
  for (int i = 0; i < 200; ++i) EXPECT_LE(std::abs(zero.Query().b), 3);
}

TEST(ResizedOracleTest, SupportKinds) {
  const Modulus q(12);
  ResizedOracle units(Residue(5, q), 1, RngSeed{41, 3});
  ResizedOracle full(Residue(5, q), 1, RngSeed{41, 3}, ResizedSupport::kFull);
  ResizedOracle listed(Residue(5, q), 1, RngSeed{41, 3}, ResizedSupport::kExplicit, {5, 7});
  bool saw_non_unit = false;
  for (int i = 0; i < 500; ++i) {
    EXPECT_TRUE(IsInvertible(units.Query().a, q));
    saw_non_unit = saw_non_unit || !IsInvertible(full.Query().a, q);
    const int64_t a = q.Canonical(listed.Query().a);
    EXPECT_TRUE(a == 5 || a == 7);
  }
  EXPECT_TRUE(saw_non_unit);
  ExpectErrorCode(
      [&] { ResizedOracle(Residue(5, q), 1, RngSeed{}, ResizedSupport::kExplicit); },
      ErrorCode::kInvalidArgument);
}

TEST(ETestTest, TrueSecretAlwaysPasses) {
  const Modulus q(3329);
  ResizedOracle oracle = ResizedOracle::WithRandomSecret(q, 20, RngSeed{42, 0});
  for (int i = 0; i < 1000; ++i) {
    ASSERT_TRUE(ETest(oracle.secret().value(), oracle, 20, 3));
  }
}

TEST(ETestTest, WrongCandidatePassRates) {
  const Modulus q(3329);
  ResizedOracle oracle = ResizedOracle::WithRandomSecret(q, 20, RngSeed{42, 1});
  Rng rng(42, 2);
  constexpr int kTrials = 100000;
  int single = 0, triple = 0;
  for (int i = 0; i < kTrials; ++i) {
    int64_t wrong = rng.UniformInt(0, 3328);
    if (q.Center(wrong) == oracle.secret().value()) wrong += 1;
    single += ETest(wrong, oracle, 20, 1);
    triple += ETest(wrong, oracle, 20, 3);
  }
  const double p1 = 41.0 / 3329.0;
  const double p3 = p1 * p1 * p1;
  EXPECT_LE(single / static_cast<double>(kTrials), p1 + ThreeSigma(p1, kTrials));
  EXPECT_GE(single / static_cast<double>(kTrials), p1 - ThreeSigma(p1, kTrials));
  EXPECT_LE(triple / static_cast<double>(kTrials), p3 + ThreeSigma(p3, kTrials));
}

TEST(DefaultTestRepetitionsTest, SmallestSufficientCount) {
  for (auto [qv, xi] : {std::pair<int64_t, int64_t>{3329, 30}, {3329, 1}, {17, 2},
                        {8380417, 1000}, {97, 0}}) {
    const Modulus q(qv);
    const int m = DefaultTestRepetitions(q, xi);
    const double ratio = static_cast<double>(2 * xi + 1) / static_cast<double>(qv);
    EXPECT_LE(std::pow(ratio, m), std::pow(2.0, -20)) << qv << " " << xi;
    if (m > 1) {
      EXPECT_GT(std::pow(ratio, m - 1), std::pow(2.0, -20)) << qv << " " << xi;
    }
  }
  EXPECT_EQ(DefaultTestRepetitions(Modulus(3329), 30), 4);
  EXPECT_EQ(DefaultTestRepetitions(Modulus(7), 3), 1);
}

TEST(SearchErrorTest, HandEnumeratedExample) {
  const Modulus q(17);
  ResizedOracle oracle(Residue(5, q), 2, RngSeed{43, 0});
  const SearchErrorResult r =
      SearchErrorFrom({3, 0}, oracle, 2, DefaultTestRepetitions(q, 2));
  ASSERT_TRUE(r.secret.has_value());
  EXPECT_EQ(*r.secret, 5);
  EXPECT_EQ(r.iterations, 5);  // candidates -5, 6, 0, -6, then 5 at e = 2
}

TEST(SearchErrorTest, NoiselessReturnsImmediately) {
  const Modulus q(97);
  ResizedOracle oracle(Residue(-20, q), 0, RngSeed{43, 1});
  const SearchErrorResult r = SearchError(oracle, 0, 1);
  ASSERT_TRUE(r.secret.has_value());
  EXPECT_EQ(*r.secret, -20);
  EXPECT_EQ(r.iterations, 1);
  EXPECT_EQ(*r.secret, q.Mul(ModInverse(r.anchor.a, q), r.anchor.b));
}

TEST(SearchErrorTest, NonUnitAnchorRejected) {
  const Modulus q(12);
  ResizedOracle oracle(Residue(5, q), 1, RngSeed{43, 2});
  ExpectErrorCode([&] { SearchErrorFrom({4, 8}, oracle, 1, 2); },
                  ErrorCode::kNotInvertible);
}

TEST(SearchErrorTest, RedrawsNonUnitAnchors) {
  const Modulus q(12);
  ResizedOracle oracle(Residue(5, q), 0, RngSeed{43, 3}, ResizedSupport::kFull);
  int redrawn = 0;
  for (int i = 0; i < 50; ++i) {
    const SearchErrorResult r = SearchError(oracle, 0, DefaultTestRepetitions(q, 0));
    EXPECT_TRUE(IsInvertible(r.anchor.a, q));
    redrawn += r.redraws;
  }
  EXPECT_GT(redrawn, 0);
}

TEST(SearchErrorTest, MonteCarloRecoveryAndLoopBound) {
  const Modulus q(3329);
  const int m = DefaultTestRepetitions(q, 30);
  for (uint64_t t = 0; t < 100; ++t) {
    ResizedOracle oracle = ResizedOracle::WithRandomSecret(q, 30, RngSeed{44, t});
    const SearchErrorResult r = SearchError(oracle, 30, m);
    ASSERT_TRUE(r.secret.has_value());
    EXPECT_EQ(*r.secret, oracle.secret().value());
    EXPECT_LE(r.iterations, 61);
    EXPECT_GE(r.iterations, 1);
  }
}

}  // namespace
}  // namespace qsample

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

#include "qsample/lattice2d.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <vector>

#include "gtest/gtest.h"
#include "qsample/error.h"
#include "test_util.h"

namespace qsample {
namespace {

using ::qsample::testing::ExpectErrorCode;

// Every point (x, y) of {v : v = t (1, r) mod q} with |x|, |y| <= bound.
std::vector<Vec2> LatticePoints(int64_t r, int64_t q, int64_t bound) {
  std::vector<Vec2> points;
  for (int64_t x = -bound; x <= bound; ++x) {
    const int64_t base = (((x * r) % q) + q) % q;
    for (int64_t y = base - ((base + bound) / q) * q; y <= bound; y += q) {
      if (y >= -bound) points.push_back({x, y});
    }
  }
  return points;
}

struct Minima {
  int64_t lambda1_sq = 0;
  int64_t lambda2_sq = 0;
};

Minima BruteForceMinima(int64_t r, int64_t q) {
  // lambda_1 lambda_2 <= (2 / sqrt 3) q and lambda_1 >= 1 bound the search.
  const auto bound = static_cast<int64_t>(1.2 * static_cast<double>(q)) + 1;
  const auto points = LatticePoints(r, q, bound);
  Vec2 shortest{};
  int64_t best = std::numeric_limits<int64_t>::max();
  for (const Vec2& v : points) {
    const int64_t n = SquaredNorm(v);
    if (n > 0 && n < best) {
      best = n;
      shortest = v;
    }
  }
  int64_t second = std::numeric_limits<int64_t>::max();
  for (const Vec2& v : points) {
    if (shortest.x * v.y - shortest.y * v.x != 0) second = std::min(second, SquaredNorm(v));
  }
  return {best, second};
}

// Exhaustive closest lattice point to t among points within the box.
Vec2 BruteForceClosest(int64_t r, int64_t q, Vec2d t, int64_t bound) {
  Vec2 best{};
  double best_d = std::numeric_limits<double>::infinity();
  for (const Vec2& v : LatticePoints(r, q, bound)) {
    const double dx = static_cast<double>(v.x) - t.x;
    const double dy = static_cast<double>(v.y) - t.y;
    const double d = dx * dx + dy * dy;
    if (d < best_d) {
      best_d = d;
      best = v;
    }
  }
  return best;
}

bool InLattice(const Basis2& basis, Vec2 v) {
  const Int128 det = static_cast<Int128>(basis.g1.x) * basis.g2.y -
                     static_cast<Int128>(basis.g1.y) * basis.g2.x;
  const Int128 c1 = static_cast<Int128>(v.x) * basis.g2.y - static_cast<Int128>(v.y) * basis.g2.x;
  const Int128 c2 = static_cast<Int128>(basis.g1.x) * v.y - static_cast<Int128>(basis.g1.y) * v.x;
  return c1 % det == 0 && c2 % det == 0;
}

int64_t RandomPrimeUpTo(int64_t max, Rng& rng) {
  for (;;) {
    const int64_t q = rng.UniformInt(3, max);
    if (Modulus(q).is_prime()) return q;
  }
}

TEST(RoundingTest, TiesGoToEven) {
  EXPECT_EQ(RoundDivHalfEven(5, 2), 2);
  EXPECT_EQ(RoundDivHalfEven(7, 2), 4);
  EXPECT_EQ(RoundDivHalfEven(-5, 2), -2);
  EXPECT_EQ(RoundDivHalfEven(-7, 2), -4);
  EXPECT_EQ(RoundDivHalfEven(1, 3), 0);
  EXPECT_EQ(RoundDivHalfEven(2, 3), 1);
  EXPECT_EQ(RoundDivHalfEven(-2, 3), -1);
  EXPECT_EQ(RoundDivHalfEven(7, -2), -4);
  EXPECT_EQ(RoundHalfEven(2.5), 2);
  EXPECT_EQ(RoundHalfEven(3.5), 4);
  EXPECT_EQ(RoundHalfEven(-2.5), -2);
  EXPECT_EQ(RoundHalfEven(-0.4), 0);
  Rng rng(51, 0);
  for (int i = 0; i < 10000; ++i) {
    const int64_t num = rng.UniformInt(-100000, 100000);
    const int64_t den = rng.UniformInt(1, 1000);
    EXPECT_EQ(RoundDivHalfEven(num, den),
              RoundHalfEven(static_cast<double>(num) / static_cast<double>(den)));
  }
}

TEST(LagrangeGaussTest, Examples) {
  const Basis2 fixed = LagrangeGauss({{1, 0}, {0, 5}});
  EXPECT_EQ(fixed.g1, (Vec2{1, 0}));
  EXPECT_EQ(fixed.g2, (Vec2{0, 5}));

  const Basis2 r = LagrangeGauss({{1, 4}, {0, 13}});
  EXPECT_EQ(SquaredNorm(r.g1), 10);
  EXPECT_EQ(SquaredNorm(r.g2), 17);
  EXPECT_TRUE(r.g1 == (Vec2{-3, 1}) || r.g1 == (Vec2{3, -1}));
  EXPECT_TRUE(r.g2 == (Vec2{1, 4}) || r.g2 == (Vec2{-1, -4}));

  const Basis2 swapped = LagrangeGauss({{0, 13}, {1, 4}});
  EXPECT_EQ(SquaredNorm(swapped.g1), 10);

  ExpectErrorCode([] { LagrangeGauss({{1, 2}, {2, 4}}); }, ErrorCode::kDegenerateBasis);
  ExpectErrorCode([] { LagrangeGauss({{0, 0}, {2, 4}}); }, ErrorCode::kDegenerateBasis);
}

TEST(LagrangeGaussTest, MatchesBruteForceMinima) {
  Rng rng(52, 0);
  for (int t = 0; t < 200; ++t) {
    const int64_t q = RandomPrimeUpTo(211, rng);
    const int64_t a1 = rng.UniformInt(1, q - 1);
    const int64_t a2 = rng.UniformInt(0, q - 1);
    const auto [lattice, target] =
        BuildSampleLattice({a1, 0}, {a2, 0}, Modulus(q));
    const Basis2 reduced = LagrangeGauss(lattice.basis);
    const Minima m = BruteForceMinima(lattice.basis.g1.y, q);
    EXPECT_EQ(SquaredNorm(reduced.g1), m.lambda1_sq) << "q=" << q;
    EXPECT_EQ(SquaredNorm(reduced.g2), m.lambda2_sq) << "q=" << q;
  }
}

TEST(LagrangeGaussTest, UnimodularAndReduced) {
  Rng rng(52, 1);
  for (int t = 0; t < 2000; ++t) {
    Basis2 in{{rng.UniformInt(-500, 500), rng.UniformInt(-500, 500)},
              {rng.UniformInt(-500, 500), rng.UniformInt(-500, 500)}};
    if (Determinant(in) == 0) continue;
    const Basis2 out = LagrangeGauss(in);
    EXPECT_EQ(std::abs(Determinant(out)), std::abs(Determinant(in)));
    EXPECT_TRUE(InLattice(in, out.g1));
    EXPECT_TRUE(InLattice(in, out.g2));
    EXPECT_LE(SquaredNorm(out.g1), SquaredNorm(out.g2));
    for (int64_t z = -3; z <= 3; ++z) {
      EXPECT_LE(SquaredNorm(out.g2), SquaredNorm(out.g2 + z * out.g1));
    }
  }
}

TEST(GramSchmidtTest, Examples) {
  const GramSchmidtPair orth = GramSchmidt2d({{2, 0}, {0, 3}});
  EXPECT_DOUBLE_EQ(orth.g2.x, 0.0);
  EXPECT_DOUBLE_EQ(orth.g2.y, 3.0);
  const GramSchmidtPair gs = GramSchmidt2d({{1, 0}, {1, 1}});
  EXPECT_DOUBLE_EQ(gs.g2.x, 0.0);
  EXPECT_DOUBLE_EQ(gs.g2.y, 1.0);
  EXPECT_DOUBLE_EQ(gs.mu, 1.0);
  ExpectErrorCode([] { GramSchmidt2d({{1, 1}, {2, 2}}); }, ErrorCode::kDegenerateBasis);
}

TEST(GramSchmidtTest, OrthogonalityAndVolume) {
  Rng rng(53, 0);
  for (int t = 0; t < 2000; ++t) {
    const Basis2 b{{rng.UniformInt(-5000, 5000), rng.UniformInt(-5000, 5000)},
                   {rng.UniformInt(-5000, 5000), rng.UniformInt(-5000, 5000)}};
    if (Determinant(b) == 0) continue;
    const GramSchmidtPair gs = GramSchmidt2d(b);
    const double n1 = std::hypot(gs.g1.x, gs.g1.y);
    const double n2 = std::hypot(gs.g2.x, gs.g2.y);
    EXPECT_NEAR((gs.g1.x * gs.g2.x + gs.g1.y * gs.g2.y) / (n1 * n2), 0.0, 1e-9);
    const double det = std::abs(static_cast<double>(Determinant(b)));
    EXPECT_NEAR(n1 * n2 / det, 1.0, 1e-9);
  }
}

TEST(NearestPlaneTest, Examples) {
  const Basis2 standard{{1, 0}, {0, 1}};
  EXPECT_EQ(NearestPlane2d(standard, Vec2d{0.4, -0.3}), (Vec2{0, 0}));
  const Basis2 b{{-3, 1}, {1, 4}};
  const Vec2 w = 2 * b.g1 + (-5) * b.g2;
  EXPECT_EQ(NearestPlane2d(b, w), w);
  EXPECT_EQ(NearestPlane2d(b, Vec2d{static_cast<double>(w.x), static_cast<double>(w.y)}), w);
  ExpectErrorCode([] { NearestPlane2d(Basis2{{1, 1}, {1, 1}}, Vec2{0, 0}); },
                  ErrorCode::kDegenerateBasis);
}

TEST(NearestPlaneTest, MatchesBruteForceNearLattice) {
  Rng rng(54, 0);
  int checked = 0;
  while (checked < 500) {
    const int64_t q = RandomPrimeUpTo(211, rng);
    const auto [lattice, unused] = BuildSampleLattice(
        {rng.UniformInt(1, q - 1), 0}, {rng.UniformInt(0, q - 1), 0}, Modulus(q));
    const Basis2 reduced = LagrangeGauss(lattice.basis);
    const GramSchmidtPair gs = GramSchmidt2d(reduced);
    const double radius =
        0.5 * std::min(std::hypot(gs.g1.x, gs.g1.y), std::hypot(gs.g2.x, gs.g2.y));
    const Vec2 w = rng.UniformInt(-3, 3) * reduced.g1 + rng.UniformInt(-3, 3) * reduced.g2;
    const double angle = 2.0 * std::numbers::pi * rng.UniformReal();
    const double len = 0.999 * radius * rng.UniformReal();
    const Vec2d t{static_cast<double>(w.x) + len * std::cos(angle),
                  static_cast<double>(w.y) + len * std::sin(angle)};
    const int64_t bound = std::max(std::abs(w.x), std::abs(w.y)) + q + 1;
    EXPECT_EQ(NearestPlane2d(reduced, t),
              BruteForceClosest(lattice.basis.g1.y, q, t, bound));
    ++checked;
  }
}

TEST(NearestPlaneTest, PromiseGuaranteesExactAnswer) {
  Rng rng(55, 0);
  int failures = 0;
  for (int t = 0; t < 10000; ++t) {
    const int64_t q = rng.UniformInt(0, 1) ? 3329 : RandomPrimeUpTo(100000, rng);
    const auto [lattice, unused] = BuildSampleLattice(
        {rng.UniformInt(1, q - 1), 0}, {rng.UniformInt(0, q - 1), 0}, Modulus(q));
    const Basis2 reduced = LagrangeGauss(lattice.basis);
    const GramSchmidtPair gs = GramSchmidt2d(reduced);
    const double half =
        0.5 * std::min(std::hypot(gs.g1.x, gs.g1.y), std::hypot(gs.g2.x, gs.g2.y));
    const Vec2 w = rng.UniformInt(-50, 50) * reduced.g1 + rng.UniformInt(-50, 50) * reduced.g2;
    const auto r = static_cast<int64_t>(std::floor(half));
    Vec2 e;
    do {
      e = {rng.UniformInt(-r, r), rng.UniformInt(-r, r)};
    } while (!(std::sqrt(static_cast<double>(SquaredNorm(e))) < half));
    failures += !(NearestPlane2d(reduced, w + e) == w);
  }
  EXPECT_EQ(failures, 0);
}

TEST(SampleLatticeTest, Construction) {
  const Modulus q13(13);
  const auto [unit, t0] = BuildSampleLattice({1, 4}, {0, 7}, q13);
  EXPECT_EQ(unit.basis.g1, (Vec2{1, 0}));
  EXPECT_EQ(unit.basis.g2, (Vec2{0, 13}));
  EXPECT_EQ(t0, (Vec2{4, 7}));

  const auto [lattice, t1] = BuildSampleLattice({3, 0}, {5, 0}, q13);
  EXPECT_EQ(lattice.basis.g1, (Vec2{1, 6}));  // 3^-1 = 9 and 9 * 5 = 45 = 6 mod 13
  EXPECT_EQ(Determinant(lattice.basis), 13);
  for (int64_t s = -6; s <= 6; ++s) {
    EXPECT_TRUE(InLattice(lattice.basis, Vec2{q13.Mul(s, 3), q13.Mul(s, 5)}));
  }
  ExpectErrorCode([] { BuildSampleLattice({4, 0}, {1, 0}, Modulus(12)); },
                  ErrorCode::kNotInvertible);
  ExpectErrorCode([] { BuildSampleLattice({0, 0}, {1, 0}, Modulus(13)); },
                  ErrorCode::kNotInvertible);
}

TEST(GaussianHeuristicTest, Formula) {
  const double c = std::sqrt(1.0 / (std::numbers::pi * std::numbers::e));
  EXPECT_NEAR(GaussianHeuristicLambda1(1.0, 2), c, 1e-12);
  EXPECT_NEAR(GaussianHeuristicLambda1(1.0, 2), 0.342, 5e-4);
  EXPECT_NEAR(GaussianHeuristicLambda1(3329.0, 2), c * std::sqrt(3329.0), 1e-9);
  ExpectErrorCode([] { GaussianHeuristicLambda1(0.0, 2); }, ErrorCode::kInvalidArgument);
}

TEST(GaussianHeuristicTest, EmpiricalMedian) {
  Rng rng(56, 0);
  const Modulus q(3329);
  std::vector<double> lambdas;
  for (int t = 0; t < 1000; ++t) {
    const auto [lattice, unused] = BuildSampleLattice(
        {rng.UniformInt(1, 3328), 0}, {rng.UniformInt(0, 3328), 0}, q);
    lambdas.push_back(std::sqrt(static_cast<double>(SquaredNorm(LagrangeGauss(lattice.basis).g1))));
  }
  std::nth_element(lambdas.begin(), lambdas.begin() + 500, lambdas.end());
  // For a random planar lattice, P(lambda_1 <= r) = 3 r^2 / (pi det) while
  // r^2 < det, so the median is sqrt(pi det / 6). That sits a factor
  // pi sqrt(e / 6) ~ 2.12 above the sqrt(n / (2 pi e)) det^{1/n} estimate.
  const double median = std::sqrt(std::numbers::pi * 3329.0 / 6.0);
  EXPECT_NEAR(lambdas[500] / median, 1.0, 0.05);
  EXPECT_NEAR(median / GaussianHeuristicLambda1(3329.0, 2),
              std::numbers::pi * std::sqrt(std::numbers::e / 6.0), 1e-12);
}

TEST(CvpRecoveryTest, PromiseImpliesRecovery) {
  Rng rng(57, 0);
  const Modulus q(3329);
  int promised = 0;
  for (int t = 0; t < 5000; ++t) {
    const int64_t xi = rng.UniformInt(0, 40);
    const int64_t s = q.Center(rng.UniformInt(0, 3328));
    const ResizedSample s1{q.Center(rng.UniformInt(1, 3328)), 0};
    const ResizedSample s2{q.Center(rng.UniformInt(0, 3328)), 0};
    const Vec2 e{rng.UniformInt(-xi, xi), rng.UniformInt(-xi, xi)};
    const ResizedSample n1{s1.a, q.Add(q.Mul(s1.a, s), e.x)};
    const ResizedSample n2{s2.a, q.Add(q.Mul(s2.a, s), e.y)};
    const PairRecovery r = RecoverFromPair(n1, n2, q);
    EXPECT_LE(std::sqrt(static_cast<double>(SquaredNorm(e))), std::sqrt(2.0) * xi + 1e-12);
    if (std::sqrt(static_cast<double>(SquaredNorm(e))) < 0.5 * r.min_gs_norm) {
      ++promised;
      EXPECT_EQ(r.candidate, s);
    }
  }
  EXPECT_GT(promised, 2500);
}

TEST(CvpRecoveryTest, NoiselessAlwaysRecovers) {
  const Modulus q(3329);
  for (uint64_t t = 0; t < 200; ++t) {
    ResizedOracle oracle = ResizedOracle::WithRandomSecret(q, 0, RngSeed{58, t});
    const CvpRecoveryResult r = RecoverComponentCvp(oracle, 0, 1);
    ASSERT_TRUE(r.secret.has_value());
    EXPECT_EQ(*r.secret, oracle.secret().value());
    EXPECT_EQ(r.attempts, 1);
  }
}

TEST(CvpRecoveryTest, SmallErrorRecoversFixedSecret) {
  const Modulus q(3329);
  int hits = 0;
  for (uint64_t t = 0; t < 100; ++t) {
    ResizedOracle oracle(Residue(1234, q), 5, RngSeed{59, t});
    const CvpRecoveryResult r = RecoverComponentCvp(oracle, 5);
    EXPECT_TRUE(r.condition_holds);
    hits += r.secret && q.Canonical(*r.secret) == 1234;
  }
  EXPECT_GE(hits, 99);
}

TEST(CvpRecoveryTest, LargeErrorMostlyFailsOnOnePair) {
  const Modulus q(3329);
  constexpr int kTrials = 1000;
  int single_failures = 0, retry_failures = 0;
  for (uint64_t t = 0; t < kTrials; ++t) {
    ResizedOracle a = ResizedOracle::WithRandomSecret(q, 40, RngSeed{60, t});
    const CvpRecoveryResult one = RecoverComponentCvp(a, 40, 1);
    EXPECT_FALSE(one.condition_holds);
    single_failures += !(one.secret && *one.secret == a.secret().value());
    if (!one.secret) {
      EXPECT_EQ(one.failed_min_gs_norms.size(), 1u);
    }

    ResizedOracle b = ResizedOracle::WithRandomSecret(q, 40, RngSeed{61, t});
    const CvpRecoveryResult five = RecoverComponentCvp(b, 40);
    retry_failures += !(five.secret && *five.secret == b.secret().value());
  }
  EXPECT_GT(single_failures, kTrials / 2);
  // Fresh pairs are the stated remedy: retries must cut the failure rate.
  EXPECT_LT(retry_failures, single_failures / 2);
}

}  // namespace
}  // namespace qsample

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

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "qsample/error.h"

namespace qsample {
namespace {

Int128 Dot128(Vec2 a, Vec2 b) {
  return static_cast<Int128>(a.x) * b.x + static_cast<Int128>(a.y) * b.y;
}

Int128 Det128(const Basis2& b) {
  return static_cast<Int128>(b.g1.x) * b.g2.y -
         static_cast<Int128>(b.g1.y) * b.g2.x;
}

void RequireIndependent(const Basis2& b) {
  if (Det128(b) == 0) {
    throw Error(ErrorCode::kDegenerateBasis, "basis vectors are dependent");
  }
}

}  // namespace

int64_t Dot(Vec2 a, Vec2 b) { return static_cast<int64_t>(Dot128(a, b)); }
int64_t SquaredNorm(Vec2 a) { return Dot(a, a); }
int64_t Determinant(const Basis2& b) { return static_cast<int64_t>(Det128(b)); }

int64_t RoundHalfEven(double x) { return static_cast<int64_t>(std::nearbyint(x)); }

int64_t RoundDivHalfEven(Int128 num, Int128 den) {
  if (den == 0) throw Error(ErrorCode::kInvalidArgument, "division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Int128 floor = num / den;
  Int128 rem = num % den;
  if (rem < 0) {
    floor -= 1;
    rem += den;
  }
  const Int128 twice = 2 * rem;
  if (twice > den || (twice == den && floor % 2 != 0)) floor += 1;
  return static_cast<int64_t>(floor);
}

Basis2 LagrangeGauss(Basis2 basis) {
  RequireIndependent(basis);
  Vec2& g1 = basis.g1;
  Vec2& g2 = basis.g2;
  if (SquaredNorm(g1) > SquaredNorm(g2)) std::swap(g1, g2);
  for (;;) {
    const int64_t z = RoundDivHalfEven(Dot128(g1, g2), Dot128(g1, g1));
    g2 = g2 - z * g1;
    if (SquaredNorm(g2) >= SquaredNorm(g1)) break;
    std::swap(g1, g2);
  }
  return basis;
}

GramSchmidtPair GramSchmidt2d(const Basis2& basis) {
  RequireIndependent(basis);
  const auto d = static_cast<double>(SquaredNorm(basis.g1));
  GramSchmidtPair gs;
  gs.g1 = {static_cast<double>(basis.g1.x), static_cast<double>(basis.g1.y)};
  gs.mu = static_cast<double>(Dot(basis.g1, basis.g2)) / d;
  gs.g2 = {static_cast<double>(basis.g2.x) - gs.mu * gs.g1.x,
           static_cast<double>(basis.g2.y) - gs.mu * gs.g1.y};
  return gs;
}

Vec2 NearestPlane2d(const Basis2& basis, Vec2d target) {
  const GramSchmidtPair gs = GramSchmidt2d(basis);
  const double n2 = gs.g2.x * gs.g2.x + gs.g2.y * gs.g2.y;
  const int64_t z2 =
      RoundHalfEven((target.x * gs.g2.x + target.y * gs.g2.y) / n2);
  const double rx = target.x - static_cast<double>(z2 * basis.g2.x);
  const double ry = target.y - static_cast<double>(z2 * basis.g2.y);
  const double n1 = gs.g1.x * gs.g1.x + gs.g1.y * gs.g1.y;
  const int64_t z1 = RoundHalfEven((rx * gs.g1.x + ry * gs.g1.y) / n1);
  return z1 * basis.g1 + z2 * basis.g2;
}

Vec2 NearestPlane2d(const Basis2& basis, Vec2 target) {
  RequireIndependent(basis);
  const Int128 d = Dot128(basis.g1, basis.g1);
  const Int128 g = Dot128(basis.g1, basis.g2);
  const Int128 det = Det128(basis);
  // <t, g2*> / ||g2*||^2 = (D <t, g2> - G <t, g1>) / det^2.
  const int64_t z2 = RoundDivHalfEven(
      d * Dot128(target, basis.g2) - g * Dot128(target, basis.g1), det * det);
  const int64_t z1 =
      RoundDivHalfEven(Dot128(target - z2 * basis.g2, basis.g1), d);
  return z1 * basis.g1 + z2 * basis.g2;
}

std::pair<SampleLattice, Vec2> BuildSampleLattice(const ResizedSample& s1,
                                                  const ResizedSample& s2,
                                                  const Modulus& q) {
  SampleLattice lattice;
  lattice.a1 = q.Center(s1.a);
  lattice.a2 = q.Center(s2.a);
  lattice.q = q.value();
  const int64_t ratio = q.Mul(ModInverse(lattice.a1, q), lattice.a2);
  lattice.basis = {{1, q.Canonical(ratio)}, {0, q.value()}};
  return {lattice, Vec2{s1.b, s2.b}};
}

double GaussianHeuristicLambda1(double det, int n) {
  if (!(det > 0.0) || n < 1) {
    throw Error(ErrorCode::kInvalidArgument, "need det > 0 and n >= 1");
  }
  return std::sqrt(n / (2.0 * std::numbers::pi * std::numbers::e)) *
         std::pow(det, 1.0 / n);
}

bool CvpConditionHolds(const Modulus& q, int64_t xi) {
  return 8 * static_cast<Int128>(xi) * xi <= q.value();
}

PairRecovery RecoverFromPair(const ResizedSample& s1, const ResizedSample& s2,
                             const Modulus& q) {
  const auto [lattice, target] = BuildSampleLattice(s1, s2, q);
  PairRecovery out;
  out.reduced = LagrangeGauss(lattice.basis);
  const GramSchmidtPair gs = GramSchmidt2d(out.reduced);
  out.min_gs_norm = std::sqrt(std::min(gs.g1.x * gs.g1.x + gs.g1.y * gs.g1.y,
                                       gs.g2.x * gs.g2.x + gs.g2.y * gs.g2.y));
  out.closest = NearestPlane2d(out.reduced, target);
  out.candidate = q.Mul(ModInverse(lattice.a1, q), q.Center(out.closest.x));
  return out;
}

CvpRecoveryResult RecoverComponentCvp(ResizedOracle& oracle, int64_t xi,
                                      int max_attempts) {
  const Modulus& q = oracle.modulus();
  const int repetitions = DefaultTestRepetitions(q, xi);
  CvpRecoveryResult result;
  result.condition_holds = CvpConditionHolds(q, xi);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    ++result.attempts;
    ResizedSample s1 = oracle.Query();
    for (int redraw = 0; !IsInvertible(s1.a, q); ++redraw) {
      if (redraw == 1000) {
        throw Error(ErrorCode::kNotInvertible, "no invertible a' found");
      }
      s1 = oracle.Query();
    }
    const ResizedSample s2 = oracle.Query();
    const PairRecovery pair = RecoverFromPair(s1, s2, q);
    if (ETest(pair.candidate, oracle, xi, repetitions)) {
      result.secret = pair.candidate;
      return result;
    }
    result.failed_min_gs_norms.push_back(pair.min_gs_norm);
  }
  return result;
}

}  // namespace qsample

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

#ifndef QSAMPLE_LATTICE2D_H_
#define QSAMPLE_LATTICE2D_H_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qsample/modnum.h"
#include "qsample/resized.h"

namespace qsample {

struct Vec2 {
  int64_t x = 0;
  int64_t y = 0;

  friend bool operator==(const Vec2&, const Vec2&) = default;
  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(int64_t k, Vec2 a) { return {k * a.x, k * a.y}; }
};

struct Vec2d {
  double x = 0.0;
  double y = 0.0;
};

struct Basis2 {
  Vec2 g1;
  Vec2 g2;
};

struct GramSchmidtPair {
  Vec2d g1;  // equals the first basis vector
  Vec2d g2;
  double mu = 0.0;  // <g2, g1*> / ||g1*||^2
};

int64_t Dot(Vec2 a, Vec2 b);
int64_t SquaredNorm(Vec2 a);
int64_t Determinant(const Basis2& b);

// Nearest integer, ties to even.
int64_t RoundHalfEven(double x);
// Nearest integer to num / den exactly, ties to even. den != 0.
int64_t RoundDivHalfEven(Int128 num, Int128 den);

// Lagrange-Gauss reduction with exact integer norms. The result spans the same
// lattice and satisfies ||g1|| = lambda_1 <= ||g2|| = lambda_2.
// Throws kDegenerateBasis for dependent input.
Basis2 LagrangeGauss(Basis2 basis);

// Throws kDegenerateBasis.
GramSchmidtPair GramSchmidt2d(const Basis2& basis);

// Babai's nearest plane in two dimensions:
//   z2 = round(<t, g2*> / ||g2*||^2), z1 = round(<t - z2 g2, g1*> / ||g1*||^2),
// returning z1 g1 + z2 g2. The integer overload evaluates both quotients
// exactly. Throws kDegenerateBasis.
Vec2 NearestPlane2d(const Basis2& basis, Vec2d target);
Vec2 NearestPlane2d(const Basis2& basis, Vec2 target);

// The lattice {v in Z^2 : v = x a mod q} of two resized samples with labels
// a = (a1, a2), spanned by (1, a1^{-1} a2 mod q) and (0, q).
struct SampleLattice {
  int64_t a1 = 0;
  int64_t a2 = 0;
  int64_t q = 0;
  Basis2 basis;
};

// Throws kNotInvertible when a1 is not a unit. The target is (b1, b2).
std::pair<SampleLattice, Vec2> BuildSampleLattice(const ResizedSample& s1,
                                                  const ResizedSample& s2,
                                                  const Modulus& q);

// sqrt(n / (2 pi e)) det^{1/n}. Throws kInvalidArgument unless det > 0.
double GaussianHeuristicLambda1(double det, int n);

// 8 xi^2 <= q: the regime where the CVP recovery is expected to work.
bool CvpConditionHolds(const Modulus& q, int64_t xi);

struct PairRecovery {
  int64_t candidate = 0;      // a1^{-1} w1 mod q for the closest point w
  Vec2 closest;               // w
  Basis2 reduced;
  double min_gs_norm = 0.0;   // min(||g1*||, ||g2*||) of the reduced basis
};

// Builds the lattice, reduces it and runs nearest plane on (b1, b2).
PairRecovery RecoverFromPair(const ResizedSample& s1, const ResizedSample& s2,
                             const Modulus& q);

struct CvpRecoveryResult {
  std::optional<int64_t> secret;
  int attempts = 0;
  bool condition_holds = true;
  // min Gram-Schmidt norm of each attempt that failed ETest.
  std::vector<double> failed_min_gs_norms;
};

inline constexpr int kDefaultCvpAttempts = 5;

// Draws a pair (redrawing the first sample until a1 is a unit), recovers a
// candidate by CVP and keeps it if it passes ETest with
// DefaultTestRepetitions(q, xi) repetitions; otherwise tries a fresh pair, up
// to max_attempts pairs.
CvpRecoveryResult RecoverComponentCvp(ResizedOracle& oracle, int64_t xi,
                                      int max_attempts = kDefaultCvpAttempts);

}  // namespace qsample

#endif  // QSAMPLE_LATTICE2D_H_

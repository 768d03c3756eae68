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

#ifndef QSAMPLE_QSIM_H_
#define QSAMPLE_QSIM_H_

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qsample/modnum.h"
#include "qsample/rng.h"

namespace qsample {

// Default ceiling on q^r, the number of amplitudes in a dense state.
inline constexpr std::size_t kDefaultStateCap = std::size_t{1} << 24;

inline constexpr double kNormTolerance = 1e-9;

// Returns q^registers, throwing kCapExceeded when it is above `cap`.
std::size_t StateDimension(const Modulus& q, int registers,
                           std::size_t cap = kDefaultStateCap);

// Pure state of `registers` qudits of dimension q, stored densely.
//
// Basis index layout is big-endian over registers: register 0 is the most
// significant digit, and the digit of a register holding residue x is the
// canonical representative x mod q in [0, q).
class StateVector {
 public:
  using Amplitude = std::complex<double>;

  static StateVector BasisState(Modulus q, int registers,
                                std::span<const int64_t> index,
                                std::size_t cap = kDefaultStateCap);

  // (1/sqrt|pairs|) sum |a>|b>. The a's must be distinct
  // (kDuplicateBasisVector) and all of length n.
  static StateVector FromSamples(Modulus q, int n,
                                 std::span<const LweSample> pairs,
                                 std::size_t cap = kDefaultStateCap);

  // Validates length q^registers and unit norm.
  static StateVector FromAmplitudes(Modulus q, int registers,
                                    std::vector<Amplitude> amplitudes);

  const Modulus& modulus() const { return modulus_; }
  int registers() const { return registers_; }
  std::size_t dimension() const { return amplitudes_.size(); }
  std::span<const Amplitude> amplitudes() const { return amplitudes_; }

  std::size_t IndexOf(std::span<const int64_t> residues) const;
  // Centered residues of the basis element at `index`.
  std::vector<int64_t> ResiduesOf(std::size_t index) const;
  Amplitude amplitude(std::span<const int64_t> residues) const {
    return amplitudes_[IndexOf(residues)];
  }

  double SquaredNorm() const;

 private:
  StateVector(Modulus q, int registers, std::vector<Amplitude> amplitudes)
      : modulus_(q), registers_(registers), amplitudes_(std::move(amplitudes)) {}

  friend StateVector QftAll(const StateVector& state);
  friend StateVector InverseQftAll(const StateVector& state);

  Modulus modulus_;
  int registers_;
  std::vector<Amplitude> amplitudes_;
};

// Applies |x> -> (1/sqrt q) sum_y exp(2 pi i x y / q) |y> to every register.
StateVector QftAll(const StateVector& state);
StateVector InverseQftAll(const StateVector& state);

// Samples a basis element with probability |amplitude|^2 by inverting the
// cumulative distribution at a single uniform draw. Returns centered residues.
ResidueVector MeasureAll(const StateVector& state, Rng& rng);

}  // namespace qsample

#endif  // QSAMPLE_QSIM_H_

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

#include "qsample/qsim.h"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

#include "qsample/error.h"

namespace qsample {
namespace {

// Applies the q x q matrix F[y][x] = scale * exp(sign 2 pi i x y / q) to each
// register in turn.
std::vector<std::complex<double>> FourierEveryRegister(
    const Modulus& q, int registers, std::vector<std::complex<double>> amps,
    double sign) {
  const std::size_t d = static_cast<std::size_t>(q.value());
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  std::vector<std::complex<double>> roots(d);
  for (std::size_t k = 0; k < d; ++k) {
    const double theta = sign * 2.0 * std::numbers::pi * static_cast<double>(k) /
                         static_cast<double>(d);
    roots[k] = std::polar(scale, theta);
  }

  std::vector<std::complex<double>> out(amps.size());
  std::vector<std::complex<double>> column(d);
  // stride of register r is d^(registers - 1 - r).
  std::size_t stride = amps.size();
  for (int r = 0; r < registers; ++r) {
    stride /= d;
    const std::size_t block = stride * d;
    for (std::size_t base = 0; base < amps.size(); base += block) {
      for (std::size_t offset = 0; offset < stride; ++offset) {
        const std::size_t start = base + offset;
        for (std::size_t x = 0; x < d; ++x) column[x] = amps[start + x * stride];
        for (std::size_t y = 0; y < d; ++y) {
          std::complex<double> acc = 0.0;
          for (std::size_t x = 0; x < d; ++x) {
            if (column[x] != 0.0) acc += roots[(x * y) % d] * column[x];
          }
          out[start + y * stride] = acc;
        }
      }
    }
    amps.swap(out);
  }
  return amps;
}

}  // namespace

std::size_t StateDimension(const Modulus& q, int registers, std::size_t cap) {
  if (registers < 1) {
    throw Error(ErrorCode::kInvalidArgument, "need at least one register");
  }
  const auto d = static_cast<std::size_t>(q.value());
  std::size_t dim = 1;
  for (int r = 0; r < registers; ++r) {
    if (dim > cap / d) {
      throw Error(ErrorCode::kCapExceeded,
                  std::to_string(q.value()) + "^" + std::to_string(registers) +
                      " amplitudes exceed the cap of " + std::to_string(cap));
    }
    dim *= d;
  }
  return dim;
}

StateVector StateVector::BasisState(Modulus q, int registers,
                                    std::span<const int64_t> index,
                                    std::size_t cap) {
  const std::size_t dim = StateDimension(q, registers, cap);
  if (index.size() != static_cast<std::size_t>(registers)) {
    throw Error(ErrorCode::kDimensionMismatch, "index tuple length");
  }
  StateVector state(q, registers, std::vector<Amplitude>(dim));
  state.amplitudes_[state.IndexOf(index)] = 1.0;
  return state;
}

StateVector StateVector::FromSamples(Modulus q, int n,
                                     std::span<const LweSample> pairs,
                                     std::size_t cap) {
  if (pairs.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty sample list");
  }
  const std::size_t dim = StateDimension(q, n + 1, cap);
  StateVector state(q, n + 1, std::vector<Amplitude>(dim));
  const double amp = 1.0 / std::sqrt(static_cast<double>(pairs.size()));
  std::vector<int64_t> label(static_cast<std::size_t>(n) + 1);
  // Labels of distinct a's land on distinct basis indices, so a repeat of
  // the a-part shows up as a nonzero slot in the a-block.
  std::vector<bool> seen(dim / static_cast<std::size_t>(q.value()), false);
  for (const auto& [a, b] : pairs) {
    if (a.size() != static_cast<std::size_t>(n)) {
      throw Error(ErrorCode::kDimensionMismatch, "sample vector length");
    }
    if (!(a.modulus() == q) || !(b.modulus() == q)) {
      throw Error(ErrorCode::kModulusMismatch, "sample modulus");
    }
    std::copy(a.values().begin(), a.values().end(), label.begin());
    label.back() = b.value();
    const std::size_t index = state.IndexOf(label);
    const std::size_t a_index = index / static_cast<std::size_t>(q.value());
    if (seen[a_index]) {
      throw Error(ErrorCode::kDuplicateBasisVector, a.ToString());
    }
    seen[a_index] = true;
    state.amplitudes_[index] = amp;
  }
  return state;
}

StateVector StateVector::FromAmplitudes(Modulus q, int registers,
                                        std::vector<Amplitude> amplitudes) {
  const std::size_t dim = StateDimension(q, registers, SIZE_MAX);
  if (dim != amplitudes.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "amplitude count");
  }
  StateVector state(q, registers, std::move(amplitudes));
  if (std::abs(state.SquaredNorm() - 1.0) > kNormTolerance) {
    throw Error(ErrorCode::kInvalidArgument, "state is not normalized");
  }
  return state;
}

std::size_t StateVector::IndexOf(std::span<const int64_t> residues) const {
  if (residues.size() != static_cast<std::size_t>(registers_)) {
    throw Error(ErrorCode::kDimensionMismatch, "index tuple length");
  }
  std::size_t index = 0;
  for (int64_t x : residues) {
    index = index * static_cast<std::size_t>(modulus_.value()) +
            static_cast<std::size_t>(modulus_.Canonical(x));
  }
  return index;
}

std::vector<int64_t> StateVector::ResiduesOf(std::size_t index) const {
  const auto d = static_cast<std::size_t>(modulus_.value());
  std::vector<int64_t> out(static_cast<std::size_t>(registers_));
  for (int r = registers_ - 1; r >= 0; --r) {
    out[static_cast<std::size_t>(r)] =
        modulus_.Center(static_cast<int64_t>(index % d));
    index /= d;
  }
  return out;
}

double StateVector::SquaredNorm() const {
  double total = 0.0;
  for (const auto& a : amplitudes_) total += std::norm(a);
  return total;
}

StateVector QftAll(const StateVector& state) {
  return StateVector(state.modulus_, state.registers_,
                     FourierEveryRegister(state.modulus_, state.registers_,
                                          state.amplitudes_, +1.0));
}

StateVector InverseQftAll(const StateVector& state) {
  return StateVector(state.modulus_, state.registers_,
                     FourierEveryRegister(state.modulus_, state.registers_,
                                          state.amplitudes_, -1.0));
}

ResidueVector MeasureAll(const StateVector& state, Rng& rng) {
  const auto amps = state.amplitudes();
  const double u = rng.UniformReal() * state.SquaredNorm();
  double cumulative = 0.0;
  std::size_t chosen = amps.size();
  std::size_t last_nonzero = 0;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const double p = std::norm(amps[i]);
    if (p == 0.0) continue;
    last_nonzero = i;
    cumulative += p;
    if (u < cumulative) {
      chosen = i;
      break;
    }
  }
  // Rounding can leave u just above the final partial sum.
  if (chosen == amps.size()) chosen = last_nonzero;
  const auto residues = state.ResiduesOf(chosen);
  return ResidueVector(state.modulus(), residues);
}

}  // namespace qsample

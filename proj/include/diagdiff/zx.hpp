// Copyright 2026 The diagdiff Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>

#include "diagdiff/diagram.hpp"
#include "diagdiff/tensor.hpp"

namespace diagdiff::zx {

// Matrix semantics -----------------------------------------------------------

/// e^{-iα/2}|0..0⟩⟨0..0| + e^{iα/2}|1..1⟩⟨1..1| on m inputs and n outputs.
template <ComplexLike T>
Tensor<T> spider_tensor(std::size_t m, std::size_t n, const T& phase) {
  const T half = T(Complex{0.5, 0.0}) * phase;
  const T minus_half = T(Complex{-0.5, 0.0}) * phase;
  auto out = Tensor<T>::zeros(Dims(m, 2), Dims(n, 2));
  const std::size_t last_row = out.cod_size() - 1, last_col = out.dom_size() - 1;
  out.at(0, 0) = out.at(0, 0) + exp_i(minus_half);
  out.at(last_row, last_col) = out.at(last_row, last_col) + exp_i(half);
  return out;
}

/// |0..0⟩⟨0..0| + a|1..1⟩⟨1..1| over any rig.
template <Rig T>
Tensor<T> green_tensor(std::size_t m, std::size_t n, const T& label) {
  auto out = Tensor<T>::zeros(Dims(m, 2), Dims(n, 2));
  const std::size_t last_row = out.cod_size() - 1, last_col = out.dom_size() - 1;
  out.at(0, 0) = out.at(0, 0) + RigTraits<T>::one();
  out.at(last_row, last_col) = out.at(last_row, last_col) + label;
  return out;
}

template <ComplexLike T>
Tensor<T> hadamard_tensor() {
  const double s = 1.0 / std::numbers::sqrt2;
  return Tensor<T>({2}, {2}, {T(Complex{s, 0}), T(Complex{s, 0}), T(Complex{s, 0}),
                              T(Complex{-s, 0})});
}

/// Σ |j,i⟩⟨i,j| between wires of dimensions a and b.
template <Rig T>
Tensor<T> swap_tensor(std::size_t a, std::size_t b) {
  auto out = Tensor<T>::zeros({a, b}, {b, a});
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < b; ++j) out.at(j * a + i, i * b + j) = RigTraits<T>::one();
  }
  return out;
}

// Diagram builders -----------------------------------------------------------

Diagram z(std::size_t m, std::size_t n, PhaseExpr phase,
          const std::string& wire = kQubitWire);
/// X spider as H^{⊗m} ⨾ Z^{m,n}(phase) ⨾ H^{⊗n}.
Diagram x_spider(std::size_t m, std::size_t n, PhaseExpr phase);
Diagram h();
Diagram swap();
Diagram green(std::size_t m, std::size_t n, Polynomial label);
Diagram scalar(Complex value);
/// H applied to each of n qubit wires.
Diagram hadamards(std::size_t n);

/// Z rotation (exactly the standard R_z gate under the spider convention).
Diagram rz(PhaseExpr phase);
/// X rotation, H ⨾ R_z ⨾ H.
Diagram rx(PhaseExpr phase);
/// CNOT with control on wire 0, built from a Z copy, an X merge and √2.
Diagram cnot();
/// |0⟩ as (1/√2)·X^{0,1}(0).
Diagram ket0();
/// (1/√2)(|00⟩ + |11⟩) from two spiders.
Diagram bell_state();
/// R_z(θ) ⊗ R_x(θ) = exp(-(iθ/2)(Z⊗I + I⊗X)).
Diagram rz_rx(PhaseExpr phase);
/// Pauli(θ, ZX) = exp(-(iθ/2) Z⊗X) as a CNOT-conjugated phase gadget.
Diagram pauli_gadget_zx(PhaseExpr phase);

// Derivatives ----------------------------------------------------------------

/// ∂_i Z^{m,n}(α) = (∂_i α / 2)·Z^{m,n}(α + π); the zero sum when ∂_i α = 0.
FormalSum spider_derivative(const Box& spider, std::size_t i);

/// ∂R_Z^{m,n}(a) given ∂a: (∂a)·(R_Z(1) - R_Z(0)) for constant ∂a,
/// R_Z(∂a) - R_Z(0) otherwise. Both interpret to (∂a)|1..1⟩⟨1..1|.
FormalSum algebraic_derivative(const Box& green, const Polynomial& d_label);
/// Same, with ∂a computed by the label rig's derivation ∂_i.
FormalSum algebraic_derivative(const Box& green, std::size_t i);

}  // namespace diagdiff::zx

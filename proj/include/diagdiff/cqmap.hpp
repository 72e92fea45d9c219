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

#include <cstddef>
#include <numbers>

#include "diagdiff/diagram.hpp"
#include "diagdiff/tensor.hpp"

namespace diagdiff::cq {

/// (classical, quantum) dimensions; tensor is pointwise multiplication.
struct CQDim {
  std::size_t classical = 1;
  std::size_t quantum = 1;

  friend CQDim operator*(CQDim a, CQDim b) {
    return {a.classical * b.classical, a.quantum * b.quantum};
  }
  friend bool operator==(CQDim, CQDim) = default;
};

/**
 * A cq-map (a, b) → (c, d): a matrix a·b² → c·d².
 *
 * The tensor always has three axes per side in the order
 * (classical, conjugate copy, plain copy), i.e. domain dims [a, b, b] and
 * codomain dims [c, d, d]. Doubling a pure f puts conj(f) on the first
 * quantum axis and f on the second.
 */
class CQMap {
 public:
  /// Accepts any tensor of the right total sizes and normalises its axes.
  CQMap(CQDim dom, CQDim cod, ComplexTensor tensor);

  static CQMap identity(CQDim dim);

  CQDim dom() const { return dom_; }
  CQDim cod() const { return cod_; }
  const ComplexTensor& tensor() const { return tensor_; }

 private:
  CQDim dom_;
  CQDim cod_;
  ComplexTensor tensor_;
};

CQMap cq_compose(const CQMap& f, const CQMap& g);
/// Kronecker product followed by regrouping the axes into
/// (classical·classical, conj·conj, plain·plain).
CQMap cq_tensor(const CQMap& f, const CQMap& g);

/// f ↦ conj(f) ⊗ f as a map (1, b) → (1, d).
CQMap doubled(const ComplexTensor& f);

/// M_a = Σ_{i<a} |i⟩⟨i,i| : (1, a) → (a, 1).
CQMap measure(std::size_t a);
/// E_a = Σ_{i<a} |i,i⟩⟨i| : (a, 1) → (1, a).
CQMap encode(std::size_t a);

/// Checks that the map is completely positive (its Choi matrix is
/// Hermitian positive semi-definite). Flags; never rejects.
bool is_completely_positive(const CQMap& f, double tol = 1e-9);

// Per-wire semantics used by the diagram interpreter -------------------------
//
// Inside a diagram every "q" wire is one axis of dimension 4 holding the pair
// (conj, plain) as conj·2 + plain, and every "c" wire one axis of dimension 2.

/// Doubling of a pure tensor on qubit axes, laid out per wire.
template <ComplexLike T>
Tensor<T> doubled_wire_tensor(const Tensor<T>& f) {
  const std::size_t a = f.dom_dims().size(), b = f.cod_dims().size();
  const auto grouped = kron(conj(f), f);
  std::vector<std::size_t> dom_perm, cod_perm;
  for (std::size_t k = 0; k < a; ++k) {
    dom_perm.push_back(k);
    dom_perm.push_back(a + k);
  }
  for (std::size_t k = 0; k < b; ++k) {
    cod_perm.push_back(k);
    cod_perm.push_back(b + k);
  }
  auto interleaved = permute_axes(grouped, dom_perm, cod_perm);
  return reshape(std::move(interleaved), Dims(a, 4), Dims(b, 4));
}

template <Rig T>
Tensor<T> measure_wire_tensor() {
  auto out = Tensor<T>::zeros({4}, {2});
  for (std::size_t i = 0; i < 2; ++i) out.at(i, i * 2 + i) = RigTraits<T>::one();
  return out;
}

template <Rig T>
Tensor<T> encode_wire_tensor() {
  auto out = Tensor<T>::zeros({2}, {4});
  for (std::size_t i = 0; i < 2; ++i) out.at(i * 2 + i, i) = RigTraits<T>::one();
  return out;
}

/// Converts the interpretation of a diagram into a cq-map, regrouping the
/// per-wire axes into (classical, conj, plain).
CQMap from_wires(const Ty& dom, const Ty& cod, const ComplexTensor& t);

// Diagram-level helpers ------------------------------------------------------

/// Replaces every pure box by its doubled version and "x" wires by "q".
Diagram doubled_circuit(const Diagram& pure);
/// |0..0⟩ prepared on n doubled qubits.
Diagram prepare_zeros(std::size_t n);
/// Measurement of n doubled qubits.
Diagram measure_all(std::size_t n);

// Parameter shift ------------------------------------------------------------

/// Gradient recipe for exp(iθH) with eigenvalues ±r: shift s = π/(4r).
class ShiftRule {
 public:
  /// Throws ValueError unless r > 0 and s = π/(4r).
  ShiftRule(double r, double s);
  static ShiftRule for_eigenvalue(double r) {
    return ShiftRule(r, std::numbers::pi / (4.0 * r));
  }
  /// r = 1/2, s = π/2: the rule for spiders under the rotation convention.
  static ShiftRule spider() { return for_eigenvalue(0.5); }

  double r() const { return r_; }
  double s() const { return s_; }

 private:
  double r_;
  double s_;
};

/**
 * ∂_i of the doubling of a spider with phase α:
 * (∂_i α)·r·[double(Z(α + s)) - double(Z(α - s))].
 * Accepts the pure box or its doubled version. Boxes that do not depend on
 * θ_i give the zero sum; other boxes that do depend on θ_i have no recipe
 * (MissingRuleError).
 */
FormalSum shift_rule_derivative(const Box& box, std::size_t i,
                                const ShiftRule& rule);

}  // namespace diagdiff::cq

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

#include <span>

#include "diagdiff/colours.hpp"
#include "diagdiff/diagram.hpp"
#include "diagdiff/tensor.hpp"

namespace diagdiff {

/// Wire dimensions of a type; throws InterpretError for objects without one.
Dims type_dims(const Ty& t);

/**
 * Tensor interpretation of a single box at parameters θ.
 *
 * Defined for T ∈ {Complex, DualComplex, F2, Boolean}. Over the two-element
 * rigs only boxes with 0/1 entries independent of θ (swaps, measurements,
 * encodings, 0/1 scalars) have an interpretation; anything else throws
 * InterpretError.
 */
template <Rig T>
Tensor<T> box_tensor(const Box& box, std::span<const T> theta,
                     const ColourRegistry& colours);

/// Layer-by-layer interpretation of a diagram.
template <Rig T>
Tensor<T> interpret_in(const Diagram& d, std::span<const T> theta,
                       const ColourRegistry& colours = ColourRegistry::standard());

/// Σ c_k ⟦d_k⟧. Over F2 and Boolean, coefficients must be natural numbers.
template <Rig T>
Tensor<T> interpret_in(const FormalSum& s, std::span<const T> theta,
                       const ColourRegistry& colours = ColourRegistry::standard());

ComplexTensor interpret(const Diagram& d, std::span<const double> theta = {},
                        const ColourRegistry& colours = ColourRegistry::standard());
ComplexTensor interpret(const FormalSum& s, std::span<const double> theta = {},
                        const ColourRegistry& colours = ColourRegistry::standard());

/// θ embedded in the duals with ε on parameter `seed` only.
std::vector<DualComplex> seed_dual(std::span<const double> theta, std::size_t seed);

}  // namespace diagdiff

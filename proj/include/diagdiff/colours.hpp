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

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "diagdiff/diagram.hpp"
#include "diagdiff/tensor.hpp"

namespace diagdiff {

enum class ColourKind {
  pointwise,  // applied entry by entry; chain rule via the spider product
  matrix,     // applied to the whole tensor; chain rule via a JVP box
};

/**
 * A bubble colour: a non-linear operator on homsets.
 *
 * Pointwise colours carry `fn` and its derivative `deriv`, plus the name of
 * the registered colour that plays the role of ∂β in the chain rule.
 * Matrix-level colours carry `apply` and its Jacobian-vector product `jvp`.
 * `dom_map`/`cod_map` transform the type of the wrapped diagram; empty maps
 * mean identity.
 */
struct BubbleColour {
  std::string name;
  ColourKind kind = ColourKind::pointwise;

  std::function<Complex(Complex)> fn;
  std::function<Complex(Complex)> deriv;
  std::string derivative_colour;

  std::function<ComplexTensor(const ComplexTensor&)> apply;
  std::function<ComplexTensor(const ComplexTensor&, const ComplexTensor&)> jvp;

  std::function<Ty(const Ty&)> dom_map;
  std::function<Ty(const Ty&)> cod_map;

  static BubbleColour pointwise(std::string name,
                                std::function<Complex(Complex)> fn,
                                std::function<Complex(Complex)> deriv,
                                std::string derivative_colour = {});

  static BubbleColour matrix_level(
      std::string name, std::function<ComplexTensor(const ComplexTensor&)> apply,
      std::function<ComplexTensor(const ComplexTensor&, const ComplexTensor&)> jvp,
      std::function<Ty(const Ty&)> dom_map = {},
      std::function<Ty(const Ty&)> cod_map = {});

  Ty map_dom(const Ty& t) const { return dom_map ? dom_map(t) : t; }
  Ty map_cod(const Ty& t) const { return cod_map ? cod_map(t) : t; }

  /// β applied to an interpreted inner tensor, reshaped to `dom` → `cod`.
  ComplexTensor evaluate(const ComplexTensor& x, const Dims& dom,
                         const Dims& cod) const;
  /// Directional derivative of β at x along dx, reshaped to `dom` → `cod`.
  ComplexTensor tangent(const ComplexTensor& x, const ComplexTensor& dx,
                        const Dims& dom, const Dims& cod) const;
};

/// Colours by name. Populate at setup, then share read-only.
class ColourRegistry {
 public:
  /// Throws ColourError if the name is taken.
  void add(BubbleColour colour);
  const BubbleColour& get(const std::string& name) const;
  bool contains(const std::string& name) const { return colours_.contains(name); }
  std::vector<std::string> names() const;

  /// id, one, zero, exp, sigmoid (and two derivatives), relu, step,
  /// softmax and matrix_exp.
  static const ColourRegistry& standard();

 private:
  std::map<std::string, BubbleColour> colours_;
};

/// The loss y ↦ Σ y_i log(y_i / target_i) as a colour with scalar output.
BubbleColour relative_entropy_colour(std::string name, std::vector<double> target);

/// β^c(inner) as a one-box diagram.
Diagram bubble_wrap(const BubbleColour& colour, FormalSum inner);
Diagram bubble_wrap(const ColourRegistry& colours, const std::string& colour,
                    FormalSum inner);

}  // namespace diagdiff

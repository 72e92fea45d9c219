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
#include <functional>
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "diagdiff/colours.hpp"
#include "diagdiff/cqmap.hpp"
#include "diagdiff/diagram.hpp"
#include "diagdiff/tensor.hpp"

namespace diagdiff {

// Gradient rules -------------------------------------------------------------

/// ∂_i Z(α) = (∂_i α)·r·Z(α + π). The correct value is r = 1/2.
struct SpiderRule {
  double r = 0.5;
};

/// ∂R_Z(a) through the label rig's derivation.
struct AlgebraicRule {};

/// Parameter shift for doubled spiders.
struct ShiftRuleEntry {
  cq::ShiftRule rule = cq::ShiftRule::spider();
};

/// The box never depends on a parameter.
struct ZeroRule {};

/// Plain boxes: the box of entry-wise partial derivatives.
struct EntriesRule {};

/// Bubbles: the chain rule.
struct ChainRule {};

/// Anything else: a user-supplied derivative.
struct CustomRule {
  std::function<FormalSum(const Box&, std::size_t)> derivative;
};

using GradientRule = std::variant<SpiderRule, AlgebraicRule, ShiftRuleEntry,
                                  ZeroRule, EntriesRule, ChainRule, CustomRule>;

/// Rule name as used in rule files ("spider", "shift", ...).
std::string rule_name(const GradientRule& rule);

/**
 * Per-kind gradient rules (keyed by Box::kind()). A derivation is fixed by
 * its value on generators, so these rules determine ∂ on every diagram.
 */
class GradientRuleSet {
 public:
  GradientRuleSet() = default;

  /// zspider → spider, green → algebraic, doubled → shift (r = 1/2),
  /// plain → entries, bubble → chain, h/swap/scalar/measure/encode → zero.
  static GradientRuleSet standard();

  GradientRuleSet& set(const std::string& kind, GradientRule rule);
  GradientRuleSet& remove(const std::string& kind);
  /// nullptr when the kind has no rule.
  const GradientRule* find(const std::string& kind) const;
  const std::map<std::string, GradientRule>& rules() const { return rules_; }

  /// Colours used to resolve bubble derivatives; standard() by default.
  const ColourRegistry& colours() const {
    return colours_ != nullptr ? *colours_ : ColourRegistry::standard();
  }
  GradientRuleSet& with_colours(const ColourRegistry& colours) {
    colours_ = &colours;
    return *this;
  }

 private:
  std::map<std::string, GradientRule> rules_;
  const ColourRegistry* colours_ = nullptr;
};

// Diagrammatic differentiation -----------------------------------------------

/// ∂_i of one box. Throws MissingRuleError if its kind has no rule.
FormalSum box_derivative(const Box& box, std::size_t i, const GradientRuleSet& rules);

/// ∂_i by the product rule: Σ over layers k of the diagram with layer k
/// replaced by the derivative of its box, extended linearly over terms.
FormalSum diagram_derivative(const FormalSum& s, std::size_t i,
                             const GradientRuleSet& rules = GradientRuleSet::standard());
FormalSum diagram_derivative(const Diagram& d, std::size_t i,
                             const GradientRuleSet& rules = GradientRuleSet::standard());

/// Entrywise product f ⊙ g built from copy spiders on the domain and merge
/// spiders on the codomain. Qubit and bit wires use Z spiders; cq wires use
/// doubled Z spiders. Throws TypeCheckError for other wires or
/// non-parallel inputs.
FormalSum hadamard_product_diagram(const FormalSum& f, const FormalSum& g);

/// Swap layers taking wires in order `types` to order types[perm[0]], ...
Diagram permutation_diagram(const Ty& types, const std::vector<std::size_t>& perm);

/// Chain rule ∂β(d) = (∂β)(d) ⊙ ∂d for pointwise colours; a single JVP box
/// for matrix-level colours.
FormalSum bubble_derivative(const Box& bubble, std::size_t i,
                            const GradientRuleSet& rules = GradientRuleSet::standard());

// Numerical oracles ----------------------------------------------------------

struct DualResult {
  ComplexTensor value;
  ComplexTensor gradient;
};

/// Forward mode: interpret over the dual numbers with ε on θ_i.
DualResult dual_eval(const FormalSum& s, std::size_t i, std::span<const double> theta,
                     const ColourRegistry& colours = ColourRegistry::standard());

/// (⟦s⟧(θ + h e_i) - ⟦s⟧(θ - h e_i)) / 2h. Throws ValueError unless h > 0.
ComplexTensor finite_difference(const FormalSum& s, std::size_t i,
                                std::span<const double> theta, double h = 1e-5,
                                const ColourRegistry& colours = ColourRegistry::standard());

// Gradient checking ----------------------------------------------------------

struct GradcheckOptions {
  double exact_tol = 1e-10;  // diagrammatic vs dual numbers
  double fd_tol = 1e-6;      // exact paths vs finite differences
  double h = 1e-5;
};

struct GradcheckEntry {
  std::size_t point = 0;
  std::vector<double> theta;
  std::size_t param = 0;
  double exact_dev = 0.0;
  double fd_dev = 0.0;
  bool pass = true;
};

struct GradcheckReport {
  GradcheckOptions options;
  std::size_t num_params = 0;
  std::vector<GradcheckEntry> entries;
  double max_exact_dev = 0.0;
  double max_fd_dev = 0.0;
  bool pass = true;
};

/// `points` parameter vectors of length n; component j of point k is
/// -π + 2π(k + 1/2)/points + 0.37·j.
std::vector<std::vector<double>> default_grid(std::size_t n, std::size_t points = 5);

/// Compares the three gradients for every parameter at every grid point.
/// A diagram without parameters passes vacuously.
GradcheckReport gradcheck(const FormalSum& s,
                          const std::vector<std::vector<double>>& grid,
                          const GradientRuleSet& rules = GradientRuleSet::standard(),
                          const GradcheckOptions& options = {});

// Neural-network layers ------------------------------------------------------

/// Plain box dom → cod whose entries are θ_first, θ_first+1, ... in
/// row-major order.
Box weight_box(const std::string& name, const Ty& dom, const Ty& cod,
               std::size_t first_param);

/// σ((input ⨾ W) + b) as a one-bubble diagram.
Diagram nn_layer(const FormalSum& input, const FormalSum& weights,
                 const FormalSum& bias, const std::string& colour,
                 const ColourRegistry& colours = ColourRegistry::standard());

}  // namespace diagdiff

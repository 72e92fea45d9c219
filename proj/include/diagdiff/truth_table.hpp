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

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "diagdiff/errors.hpp"

namespace diagdiff {

/// Which rig structure a truth table lives in: F2 (XOR, AND) or the Boolean
/// rig (OR, AND). Same carrier, different sums, different derivatives.
enum class BitRig { f2, boolean };

/**
 * A function {0,1}^n → {0,1}^m stored as its truth table.
 *
 * Row r holds the output for the input with x_j = (r >> j) & 1; output bit k
 * is bit k of the row value.
 */
class TruthTableFn {
 public:
  static constexpr unsigned kMaxArity = 20;
  static constexpr unsigned kMaxCoarity = 32;

  TruthTableFn(unsigned arity, unsigned coarity, BitRig rig,
               std::vector<std::uint32_t> rows);

  static TruthTableFn from_function(
      unsigned arity, unsigned coarity, BitRig rig,
      const std::function<std::uint32_t(std::uint32_t)>& f);
  static TruthTableFn constant(unsigned arity, unsigned coarity, BitRig rig,
                               std::uint32_t value);
  /// The single-output function x ↦ x_index.
  static TruthTableFn projection(unsigned arity, unsigned index, BitRig rig);

  unsigned arity() const { return arity_; }
  unsigned coarity() const { return coarity_; }
  BitRig rig() const { return rig_; }
  const std::vector<std::uint32_t>& rows() const { return rows_; }
  std::uint32_t at(std::uint32_t row) const { return rows_.at(row); }
  bool bit(std::uint32_t row, unsigned k) const { return (at(row) >> k) & 1U; }

  /// f[x_i ↦ value]: same arity, independent of x_i.
  TruthTableFn restricted(unsigned i, bool value) const;
  /// f[x_i ↦ ¬x_i].
  TruthTableFn negated_input(unsigned i) const;
  /// Output-wise negation.
  TruthTableFn complement() const;
  /// True iff no output depends on x_i.
  bool independent_of(unsigned i) const;

  TruthTableFn with_rig(BitRig rig) const;

  friend bool operator==(const TruthTableFn&, const TruthTableFn&) = default;

 private:
  void check_index(unsigned i) const;

  unsigned arity_;
  unsigned coarity_;
  BitRig rig_;
  std::vector<std::uint32_t> rows_;
};

/// Rig sum: XOR for F2, OR for the Boolean rig.
TruthTableFn rig_add(const TruthTableFn& a, const TruthTableFn& b);
/// Rig product: AND in both rigs.
TruthTableFn rig_mul(const TruthTableFn& a, const TruthTableFn& b);

/// ∂_i f = f[x_i ↦ 0] ⊕ f[x_i ↦ 1] for F2-tagged tables.
TruthTableFn f2_partial(const TruthTableFn& f, unsigned i);

/// ∂_i φ = ¬φ[x_i ↦ 0] ∧ φ[x_i ↦ 1] for Boolean-tagged tables.
TruthTableFn bool_partial(const TruthTableFn& f, unsigned i);

/// Propositional formula over variables x_0, x_1, ...
class BoolFormula {
 public:
  enum class Op { variable, constant, negation, conjunction, disjunction };

  static BoolFormula var(unsigned index);
  static BoolFormula constant(bool value);

  friend BoolFormula operator!(const BoolFormula& a);
  friend BoolFormula operator&&(const BoolFormula& a, const BoolFormula& b);
  friend BoolFormula operator||(const BoolFormula& a, const BoolFormula& b);

  Op op() const { return node_->op; }
  bool eval(std::uint32_t row) const;
  TruthTableFn to_table(unsigned arity) const;
  std::string to_string() const;

 private:
  struct Node {
    Op op;
    unsigned index = 0;
    bool value = false;
    std::shared_ptr<const Node> lhs, rhs;
  };
  explicit BoolFormula(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}

  friend BoolFormula bool_partial_inductive(const BoolFormula&, unsigned);

  std::shared_ptr<const Node> node_;
};

/**
 * Structural derivative of a formula: ∂x_j = δ_ij, ∂0 = ∂1 = 0,
 * ∂¬φ = ¬∂φ, ∂(φ ∨ ψ) = ∂φ ∨ ∂ψ, ∂(φ ∧ ψ) = (φ ∧ ∂ψ) ∨ (∂φ ∧ ψ).
 *
 * Kept for comparison only. It differs from bool_partial, e.g. on x0 ∨ x1.
 */
BoolFormula bool_partial_inductive(const BoolFormula& phi, unsigned i);

}  // namespace diagdiff

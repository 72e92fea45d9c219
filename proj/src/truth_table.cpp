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

#include "diagdiff/truth_table.hpp"

namespace diagdiff {

namespace {

std::uint32_t output_mask(unsigned coarity) {
  return coarity == 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << coarity) - 1);
}

void check_compatible(const TruthTableFn& a, const TruthTableFn& b) {
  if (a.arity() != b.arity() || a.coarity() != b.coarity() ||
      a.rig() != b.rig()) {
    throw ValueError("truth tables have different shapes or rigs");
  }
}

}  // namespace

TruthTableFn::TruthTableFn(unsigned arity, unsigned coarity, BitRig rig,
                           std::vector<std::uint32_t> rows)
    : arity_(arity), coarity_(coarity), rig_(rig), rows_(std::move(rows)) {
  if (arity_ > kMaxArity) throw ValueError("truth table arity too large");
  if (coarity_ > kMaxCoarity) throw ValueError("truth table coarity too large");
  if (rows_.size() != (std::size_t{1} << arity_)) {
    throw ValueError("truth table of arity " + std::to_string(arity_) +
                     " needs " + std::to_string(std::size_t{1} << arity_) +
                     " rows, got " + std::to_string(rows_.size()));
  }
  for (auto r : rows_) {
    if ((r & ~output_mask(coarity_)) != 0) {
      throw ValueError("truth table row has more than " +
                       std::to_string(coarity_) + " output bits");
    }
  }
}

TruthTableFn TruthTableFn::from_function(
    unsigned arity, unsigned coarity, BitRig rig,
    const std::function<std::uint32_t(std::uint32_t)>& f) {
  std::vector<std::uint32_t> rows(std::size_t{1} << arity);
  for (std::uint32_t r = 0; r < rows.size(); ++r) {
    rows[r] = f(r) & output_mask(coarity);
  }
  return {arity, coarity, rig, std::move(rows)};
}

TruthTableFn TruthTableFn::constant(unsigned arity, unsigned coarity,
                                    BitRig rig, std::uint32_t value) {
  return from_function(arity, coarity, rig, [=](std::uint32_t) { return value; });
}

TruthTableFn TruthTableFn::projection(unsigned arity, unsigned index,
                                      BitRig rig) {
  if (index >= arity) throw ValueError("projection index out of range");
  return from_function(arity, 1, rig,
                       [=](std::uint32_t r) { return (r >> index) & 1U; });
}

void TruthTableFn::check_index(unsigned i) const {
  if (i >= arity_) {
    throw ValueError("input index " + std::to_string(i) +
                     " out of range for arity " + std::to_string(arity_));
  }
}

TruthTableFn TruthTableFn::restricted(unsigned i, bool value) const {
  check_index(i);
  const std::uint32_t bit = std::uint32_t{1} << i;
  return from_function(arity_, coarity_, rig_, [&](std::uint32_t r) {
    return rows_[value ? (r | bit) : (r & ~bit)];
  });
}

TruthTableFn TruthTableFn::negated_input(unsigned i) const {
  check_index(i);
  const std::uint32_t bit = std::uint32_t{1} << i;
  return from_function(arity_, coarity_, rig_,
                       [&](std::uint32_t r) { return rows_[r ^ bit]; });
}

TruthTableFn TruthTableFn::complement() const {
  return from_function(arity_, coarity_, rig_,
                       [&](std::uint32_t r) { return ~rows_[r]; });
}

bool TruthTableFn::independent_of(unsigned i) const {
  check_index(i);
  const std::uint32_t bit = std::uint32_t{1} << i;
  for (std::uint32_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r] != rows_[r ^ bit]) return false;
  }
  return true;
}

TruthTableFn TruthTableFn::with_rig(BitRig rig) const {
  return {arity_, coarity_, rig, rows_};
}

TruthTableFn rig_add(const TruthTableFn& a, const TruthTableFn& b) {
  check_compatible(a, b);
  const bool xor_sum = a.rig() == BitRig::f2;
  return TruthTableFn::from_function(
      a.arity(), a.coarity(), a.rig(), [&](std::uint32_t r) {
        return xor_sum ? (a.at(r) ^ b.at(r)) : (a.at(r) | b.at(r));
      });
}

TruthTableFn rig_mul(const TruthTableFn& a, const TruthTableFn& b) {
  check_compatible(a, b);
  return TruthTableFn::from_function(
      a.arity(), a.coarity(), a.rig(),
      [&](std::uint32_t r) { return a.at(r) & b.at(r); });
}

TruthTableFn f2_partial(const TruthTableFn& f, unsigned i) {
  if (f.rig() != BitRig::f2) throw ValueError("f2_partial needs an F2 table");
  const auto lo = f.restricted(i, false);
  const auto hi = f.restricted(i, true);
  return rig_add(lo, hi);
}

TruthTableFn bool_partial(const TruthTableFn& f, unsigned i) {
  if (f.rig() != BitRig::boolean) {
    throw ValueError("bool_partial needs a Boolean table");
  }
  const auto lo = f.restricted(i, false);
  const auto hi = f.restricted(i, true);
  return rig_mul(lo.complement(), hi);
}

// Formulas -------------------------------------------------------------------

BoolFormula BoolFormula::var(unsigned index) {
  return BoolFormula(std::make_shared<const Node>(Node{Op::variable, index, false, nullptr, nullptr}));
}

BoolFormula BoolFormula::constant(bool value) {
  return BoolFormula(
      std::make_shared<const Node>(Node{Op::constant, 0, value, nullptr, nullptr}));
}

BoolFormula operator!(const BoolFormula& a) {
  if (a.op() == BoolFormula::Op::constant) {
    return BoolFormula::constant(!a.node_->value);
  }
  return BoolFormula(std::make_shared<const BoolFormula::Node>(
      BoolFormula::Node{BoolFormula::Op::negation, 0, false, a.node_, nullptr}));
}

BoolFormula operator&&(const BoolFormula& a, const BoolFormula& b) {
  return BoolFormula(std::make_shared<const BoolFormula::Node>(
      BoolFormula::Node{BoolFormula::Op::conjunction, 0, false, a.node_, b.node_}));
}

BoolFormula operator||(const BoolFormula& a, const BoolFormula& b) {
  return BoolFormula(std::make_shared<const BoolFormula::Node>(
      BoolFormula::Node{BoolFormula::Op::disjunction, 0, false, a.node_, b.node_}));
}

bool BoolFormula::eval(std::uint32_t row) const {
  switch (node_->op) {
    case Op::variable:
      return (row >> node_->index) & 1U;
    case Op::constant:
      return node_->value;
    case Op::negation:
      return !BoolFormula(node_->lhs).eval(row);
    case Op::conjunction:
      return BoolFormula(node_->lhs).eval(row) &&
             BoolFormula(node_->rhs).eval(row);
    case Op::disjunction:
      return BoolFormula(node_->lhs).eval(row) ||
             BoolFormula(node_->rhs).eval(row);
  }
  return false;
}

TruthTableFn BoolFormula::to_table(unsigned arity) const {
  return TruthTableFn::from_function(
      arity, 1, BitRig::boolean,
      [&](std::uint32_t r) { return eval(r) ? 1U : 0U; });
}

std::string BoolFormula::to_string() const {
  switch (node_->op) {
    case Op::variable:
      return "x" + std::to_string(node_->index);
    case Op::constant:
      return node_->value ? "1" : "0";
    case Op::negation:
      return "¬" + BoolFormula(node_->lhs).to_string();
    case Op::conjunction:
      return "(" + BoolFormula(node_->lhs).to_string() + " ∧ " +
             BoolFormula(node_->rhs).to_string() + ")";
    case Op::disjunction:
      return "(" + BoolFormula(node_->lhs).to_string() + " ∨ " +
             BoolFormula(node_->rhs).to_string() + ")";
  }
  return "?";
}

BoolFormula bool_partial_inductive(const BoolFormula& phi, unsigned i) {
  using Op = BoolFormula::Op;
  const auto& n = *phi.node_;
  switch (n.op) {
    case Op::variable:
      return BoolFormula::constant(n.index == i);
    case Op::constant:
      return BoolFormula::constant(false);
    case Op::negation:
      return !bool_partial_inductive(BoolFormula(n.lhs), i);
    case Op::disjunction:
      return bool_partial_inductive(BoolFormula(n.lhs), i) ||
             bool_partial_inductive(BoolFormula(n.rhs), i);
    case Op::conjunction: {
      BoolFormula lhs(n.lhs), rhs(n.rhs);
      return (lhs && bool_partial_inductive(rhs, i)) ||
             (bool_partial_inductive(lhs, i) && rhs);
    }
  }
  return BoolFormula::constant(false);
}

}  // namespace diagdiff

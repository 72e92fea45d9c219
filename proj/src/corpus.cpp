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

#include "diagdiff/corpus.hpp"

#include <numbers>

#include "diagdiff/autodiff.hpp"
#include "diagdiff/colours.hpp"
#include "diagdiff/cqmap.hpp"
#include "diagdiff/zx.hpp"

namespace diagdiff::corpus {

std::string to_string(Category c) {
  switch (c) {
    case Category::misc: return "misc";
    case Category::zx: return "zx";
    case Category::cq: return "cq";
    case Category::bubble: return "bubble";
    case Category::stone: return "stone";
  }
  return "misc";
}

Diagram on_qubits(const Diagram& d, std::size_t left, std::size_t right) {
  return Diagram::id(Ty::repeat(kQubitWire, left))
      .tensor(d)
      .tensor(Diagram::id(Ty::repeat(kQubitWire, right)));
}

Diagram measured(const Diagram& pure_circuit) {
  const auto n = pure_circuit.dom().size();
  return cq::prepare_zeros(n)
      .then(cq::doubled_circuit(pure_circuit))
      .then(cq::measure_all(n));
}

namespace {

PhaseExpr t(std::size_t i, double c = 1.0) { return PhaseExpr::parameter(i, c); }

using zx::cnot;
using zx::h;
using zx::rx;
using zx::rz;

Diagram rz_rx_cnot() { return rz(t(0)).tensor(rx(t(1))).then(cnot()); }

std::vector<Entry> build() {
  const auto& colours = ColourRegistry::standard();
  std::vector<Entry> out;
  auto add = [&](std::string name, std::string description, Category c, const Diagram& d) {
    out.push_back(Entry{std::move(name), std::move(description), c, FormalSum(d)});
  };

  add("hadamard", "a single Hadamard box", Category::misc, h());
  add("empty", "the empty diagram on the unit type", Category::misc, Diagram::id(Ty{}));
  add("identity", "the identity on one qubit", Category::misc, Diagram::id(Ty{kQubitWire}));
  add("bell", "Bell state from a cup spider and a copy spider", Category::misc,
      zx::bell_state());

  add("stone-rz-rx", "Rz(θ) ⊗ Rx(θ)", Category::stone, zx::rz_rx(t(0)));
  add("stone-pauli-zx", "phase gadget exp(-(iθ/2) Z⊗X)", Category::stone,
      zx::pauli_gadget_zx(t(0)));

  add("zx-rz-rx-rz", "Euler rotation on one qubit", Category::zx,
      rz(t(0)).then(rx(t(1))).then(rz(t(2))));
  add("zx-spider-fusion", "Z(θ0) ⨾ Z(2θ0 + θ1) with a three-legged copy", Category::zx,
      zx::z(1, 1, t(0)).then(zx::z(1, 3, t(0, 2.0) + t(1))));
  add("zx-entangler", "two rotations, CNOT and a controlled phase", Category::zx,
      rx(t(0)).tensor(rz(t(1))).then(cnot()).then(on_qubits(rz(t(0) + t(2)), 1, 0)));
  add("zx-three-qubit", "three-qubit circuit with a phase gadget", Category::zx,
      rx(t(0)).tensor(rx(t(1))).tensor(rx(t(2)))
          .then(on_qubits(cnot(), 0, 1))
          .then(on_qubits(cnot(), 1, 0))
          .then(on_qubits(rz(t(3)), 2, 0))
          .then(on_qubits(cnot(), 1, 0))
          .then(on_qubits(zx::x_spider(1, 1, t(0, -0.5)), 0, 2)));

  // Doubled circuits with measurement.
  add("rz-rx-cnot-measure", "Rz(θ0) ⊗ Rx(θ1), CNOT, measure both qubits", Category::cq,
      measured(rz_rx_cnot()));
  add("cq-rx", "Rx(θ0) then measure", Category::cq, measured(rx(t(0))));
  add("cq-h-rz-h", "H, Rz(θ0), H then measure", Category::cq,
      measured(h().then(rz(t(0))).then(h())));
  add("cq-euler", "Rx Rz Rx Euler rotation then measure", Category::cq,
      measured(rx(t(0)).then(rz(t(1))).then(rx(t(2)))));
  add("cq-affine", "Rx(2θ0 + 0.3), Rz(-θ0), H then measure", Category::cq,
      measured(rx(t(0, 2.0).shifted(0.3)).then(rz(t(0, -1.0))).then(h())));
  add("cq-bell-rx", "Rx(θ0) on the control of a CNOT", Category::cq,
      measured(rx(t(0)).tensor(Diagram::id(Ty{kQubitWire})).then(cnot())));
  add("cq-shared-param", "parameters shared across wires", Category::cq,
      measured(rx(t(0)).tensor(rx(t(1))).then(cnot()).then(
          on_qubits(rx(t(0) + t(1)), 1, 0))));
  add("cq-gadget", "Hadamards, a ZX phase gadget and Rx", Category::cq,
      measured(zx::hadamards(2).then(zx::pauli_gadget_zx(t(0))).then(
          on_qubits(rx(t(1)), 0, 1))));
  add("cq-swap", "rotations through a swap and a CNOT", Category::cq,
      measured(rx(t(0)).tensor(rx(t(1))).then(zx::swap()).then(cnot())));
  add("cq-ghz", "GHZ-style ladder with rotations on three qubits", Category::cq,
      measured(on_qubits(rx(t(0)), 0, 2)
                   .then(on_qubits(cnot(), 0, 1))
                   .then(on_qubits(cnot(), 1, 0))
                   .then(on_qubits(rx(t(1)), 2, 0))
                   .then(on_qubits(rz(t(2)), 1, 1))));
  add("cq-three-qubit-layer", "three qubits, four parameters", Category::cq,
      measured(rx(t(0)).tensor(rx(t(1))).tensor(rx(t(2)))
                   .then(on_qubits(cnot(), 0, 1))
                   .then(on_qubits(cnot(), 1, 0))
                   .then(on_qubits(rz(t(3)), 2, 0))
                   .then(zx::hadamards(3))));
  add("cq-stone", "Rz(θ) ⊗ Rx(θ) measured", Category::cq, measured(zx::rz_rx(t(0))));

  // Bubbled post-processing.
  const FormalSum probs(measured(rz_rx_cnot()));
  add("bubble-sigmoid", "sigmoid of the measured distribution", Category::bubble,
      bubble_wrap(colours, "sigmoid", probs));
  add("bubble-softmax", "softmax of the measured distribution", Category::bubble,
      bubble_wrap(colours, "softmax", probs));
  {
    const Ty cc{kBitWire, kBitWire};
    std::size_t next = 2;
    const FormalSum w1(Diagram::from_box(weight_box("W1", cc, cc, next)));
    next += 16;
    const FormalSum b1(Diagram::from_box(weight_box("b1", Ty{}, cc, next)));
    next += 4;
    const FormalSum w2(Diagram::from_box(weight_box("W2", cc, Ty{kBitWire}, next)));
    next += 8;
    const FormalSum b2(Diagram::from_box(weight_box("b2", Ty{}, Ty{kBitWire}, next)));
    const auto l1 = nn_layer(probs, w1, b1, "sigmoid", colours);
    add("nn-two-layer", "two sigmoid layers on a measured 2-qubit circuit", Category::bubble,
        nn_layer(FormalSum(l1), w2, b2, "sigmoid", colours));
  }
  return out;
}

std::vector<NamedTable> build_tables() {
  using F = std::function<std::uint32_t(std::uint32_t)>;
  return {
      {"xor2-f2", TruthTableFn::from_function(2, 1, BitRig::f2,
                                              F([](std::uint32_t x) { return (x ^ (x >> 1)) & 1U; }))},
      {"and2-f2", TruthTableFn::from_function(2, 1, BitRig::f2,
                                              F([](std::uint32_t x) { return x & (x >> 1) & 1U; }))},
      {"or2-boolean", TruthTableFn::from_function(2, 1, BitRig::boolean,
                                                  F([](std::uint32_t x) { return (x | (x >> 1)) & 1U; }))},
      {"majority3-boolean",
       TruthTableFn::from_function(3, 1, BitRig::boolean, F([](std::uint32_t x) {
                                     const auto n = (x & 1U) + ((x >> 1) & 1U) + ((x >> 2) & 1U);
                                     return n >= 2 ? 1U : 0U;
                                   }))},
      {"half-adder-f2", TruthTableFn::from_function(2, 2, BitRig::f2, F([](std::uint32_t x) {
                                                      const auto a = x & 1U, b = (x >> 1) & 1U;
                                                      return (a ^ b) | ((a & b) << 1);
                                                    }))},
  };
}

}  // namespace

const std::vector<Entry>& entries() {
  static const std::vector<Entry> all = build();
  return all;
}

const Entry& get(const std::string& name) {
  for (const auto& e : entries()) {
    if (e.name == name) return e;
  }
  throw ValueError("no corpus entry named '" + name + "'");
}

const std::vector<NamedTable>& truth_tables() {
  static const std::vector<NamedTable> all = build_tables();
  return all;
}

json::Json entry_json(const Entry& e) {
  json::Json j{{"name", e.name}, {"category", to_string(e.category)},
               {"description", e.description}};
  const auto body = json::to_json(e.diagram);
  for (const auto& [k, v] : body.items()) j[k] = v;
  return j;
}

json::Json truth_tables_json() {
  json::Json tables = json::Json::array();
  for (const auto& t : truth_tables()) {
    auto j = json::to_json(t.table);
    j["name"] = t.name;
    tables.push_back(j);
  }
  return json::Json{{"truth_tables", tables}};
}

}  // namespace diagdiff::corpus

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

#include "diagdiff/zx.hpp"

namespace diagdiff::zx {

namespace {

constexpr double kPi = std::numbers::pi;

const ZSpiderBox& expect_spider(const Box& box) {
  const auto* s = box.as<ZSpiderBox>();
  if (s == nullptr) {
    throw ValueError("expected a Z spider, got a " + box.kind() + " box");
  }
  return *s;
}

const GreenBox& expect_green(const Box& box) {
  const auto* g = box.as<GreenBox>();
  if (g == nullptr) {
    throw ValueError("expected a green box, got a " + box.kind() + " box");
  }
  return *g;
}

}  // namespace

Diagram z(std::size_t m, std::size_t n, PhaseExpr phase, const std::string& wire) {
  return Diagram::from_box(Box::zspider(m, n, std::move(phase), wire));
}

Diagram hadamards(std::size_t n) {
  std::vector<Layer> layers;
  for (std::size_t k = 0; k < n; ++k) layers.push_back(Layer{k, Box::hadamard()});
  const auto t = Ty::repeat(kQubitWire, n);
  return Diagram(t, t, std::move(layers));
}

Diagram x_spider(std::size_t m, std::size_t n, PhaseExpr phase) {
  return hadamards(m).then(z(m, n, std::move(phase))).then(hadamards(n));
}

Diagram h() { return Diagram::from_box(Box::hadamard()); }

Diagram swap() { return Diagram::from_box(Box::swap()); }

Diagram green(std::size_t m, std::size_t n, Polynomial label) {
  return Diagram::from_box(Box::green(m, n, std::move(label)));
}

Diagram scalar(Complex value) { return Diagram::from_box(Box::scalar(value)); }

Diagram rz(PhaseExpr phase) { return z(1, 1, std::move(phase)); }

Diagram rx(PhaseExpr phase) { return x_spider(1, 1, std::move(phase)); }

Diagram cnot() {
  const Ty xx = Ty::repeat(kQubitWire, 2);
  return Diagram(xx, xx,
                 {Layer{0, Box::zspider(1, 2, 0.0)},
                  Layer{1, Box::hadamard()},
                  Layer{2, Box::hadamard()},
                  Layer{1, Box::zspider(2, 1, 0.0)},
                  Layer{1, Box::hadamard()},
                  Layer{0, Box::scalar(std::numbers::sqrt2)}});
}

Diagram ket0() {
  return x_spider(0, 1, 0.0).tensor(scalar(1.0 / std::numbers::sqrt2));
}

Diagram bell_state() {
  return z(0, 1, 0.0).then(z(1, 2, 0.0)).tensor(scalar(1.0 / std::numbers::sqrt2));
}

Diagram rz_rx(PhaseExpr phase) { return rz(phase).tensor(rx(phase)); }

Diagram pauli_gadget_zx(PhaseExpr phase) {
  const auto id1 = Diagram::id(Ty{kQubitWire});
  const auto h1 = id1.tensor(h());
  return h1.then(cnot()).then(id1.tensor(rz(std::move(phase)))).then(cnot()).then(h1);
}

FormalSum spider_derivative(const Box& spider, std::size_t i) {
  const auto& s = expect_spider(spider);
  const double d = s.phase.partial(i);
  FormalSum out(spider.dom(), spider.cod());
  if (d == 0.0) return out;
  const auto& wire = spider.dom().empty()
                         ? (spider.cod().empty() ? std::string(kQubitWire)
                                                 : spider.cod()[0])
                         : spider.dom()[0];
  out.add_term(d / 2.0, Diagram::from_box(Box::zspider(
                            s.legs_in, s.legs_out, s.phase.shifted(kPi), wire)));
  return out;
}

FormalSum algebraic_derivative(const Box& green, const Polynomial& d_label) {
  const auto& g = expect_green(green);
  const auto& wire = green.dom().empty()
                         ? (green.cod().empty() ? std::string(kQubitWire)
                                                : green.cod()[0])
                         : green.dom()[0];
  auto box_with = [&](Polynomial label) {
    return Diagram::from_box(Box::green(g.legs_in, g.legs_out, std::move(label), wire));
  };
  FormalSum out(green.dom(), green.cod());
  if (d_label.is_zero()) return out;
  if (d_label.is_constant()) {
    const Complex c = d_label.constant_term();
    out.add_term(c, box_with(1.0));
    out.add_term(-c, box_with(0.0));
  } else {
    out.add_term(1.0, box_with(d_label));
    out.add_term(-1.0, box_with(0.0));
  }
  return out;
}

FormalSum algebraic_derivative(const Box& green, std::size_t i) {
  return algebraic_derivative(green, expect_green(green).label.partial(i));
}

}  // namespace diagdiff::zx

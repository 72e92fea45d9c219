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

#include "support.hpp"

#include "diagdiff/autodiff.hpp"
#include "diagdiff/corpus.hpp"
#include "diagdiff/cqmap.hpp"
#include "diagdiff/interpret.hpp"
#include "diagdiff/zx.hpp"

using namespace diagdiff;
using namespace diagdiff::testing;
using namespace diagdiff::cq;

namespace {

const Complex I{0.0, 1.0};

ComplexTensor column(std::vector<Complex> v) {
  const std::size_t n = v.size();
  return ComplexTensor({}, {n}, std::move(v));
}

/// Probability vector of a cq state with trivial quantum output.
std::vector<double> probabilities(const CQMap& state) {
  std::vector<double> p;
  for (const auto& v : state.tensor().data()) p.push_back(v.real());
  return p;
}

}  // namespace

TEST_CASE("cq-map composition and tensor", "[cq]") {
  Gen gen(3);
  const auto f = doubled(gen.tensor({2}, {2}));
  CHECK(close(cq_compose(CQMap::identity(f.dom()), f).tensor(), f.tensor(), 1e-15));
  CHECK_THROWS_AS(cq_compose(f, CQMap::identity({1, 4})), DimensionError);

  const auto a = gen.tensor({2}, {3}), b = gen.tensor({3}, {2});
  const CQMap ca({2, 1}, {3, 1}, a), cb({3, 1}, {2, 1}, b);
  const auto t = cq_tensor(ca, cb);
  CHECK(t.dom() == CQDim{6, 1});
  CHECK(t.cod() == CQDim{6, 1});
  CHECK(close(reshape(t.tensor(), {6}, {6}), reshape(kron(a, b), {6}, {6}), 1e-15));

  for (int trial = 0; trial < 30; ++trial) {
    const auto A = gen.tensor({2}, {2}), B = gen.tensor({2}, {2});
    CHECK(close(cq_tensor(doubled(A), doubled(B)).tensor(), doubled(kron(A, B)).tensor(),
                1e-13));
  }
}

TEST_CASE("Doubling", "[cq]") {
  CHECK(reshape(doubled(ComplexTensor::identity({2})).tensor(), {4}, {4}) ==
        ComplexTensor::identity({4}));
  CHECK(doubled(ComplexTensor::scalar(2.0 * I)).tensor().data()[0] == Complex(4.0));

  Gen gen(17);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = gen.tensor({2}, {2});
    const auto phase = std::exp(I * gen.uniform(-kPi, kPi));
    CHECK(close(doubled(scale(phase, f)).tensor(), doubled(f).tensor(), 1e-14));
  }
}

TEST_CASE("Doubling does not preserve sums", "[cq]") {
  // Exact on integer entries.
  const auto id2 = ComplexTensor::identity({2});
  const auto of_sum = reshape(doubled(id2 + id2).tensor(), {4}, {4});
  const auto sum_of = reshape(doubled(id2).tensor() + doubled(id2).tensor(), {4}, {4});
  CHECK(of_sum == scale(Complex{4.0}, ComplexTensor::identity({4})));
  CHECK(sum_of == scale(Complex{2.0}, ComplexTensor::identity({4})));
  CHECK(entrywise(of_sum, scale(Complex{-1.0}, sum_of), EntrywiseOp::add) ==
        scale(Complex{2.0}, ComplexTensor::identity({4})));
}

TEST_CASE("Doubling the pure derivative is not the derivative of the doubling", "[cq]") {
  const std::vector<double> theta{0.3};
  const auto rz = zx::rz(PhaseExpr::parameter(0));
  const auto pure_grad = interpret(diagram_derivative(rz, 0), theta);
  const auto lifted = doubled(pure_grad).tensor();
  const auto doubled_rz = FormalSum(doubled_circuit(rz));
  const auto true_grad = from_wires(Ty{"q"}, Ty{"q"}, finite_difference(doubled_rz, 0, theta)).tensor();
  CHECK(max_abs_diff(lifted, true_grad) > 1e-3);
  // The shift rule recovers the true gradient.
  const auto shifted = interpret(diagram_derivative(doubled_rz, 0), theta);
  CHECK(close(from_wires(Ty{"q"}, Ty{"q"}, shifted).tensor(), true_grad, 1e-9));
}

TEST_CASE("Measurement and encoding", "[cq]") {
  const double s = 1.0 / std::sqrt(2.0);
  const auto plus = doubled(column({s, s}));
  CHECK_THAT(probabilities(cq_compose(plus, measure(2))),
             Catch::Matchers::Approx(std::vector<double>{0.5, 0.5}).margin(1e-15));
  CHECK(probabilities(cq_compose(doubled(column({1, 0})), measure(2))) ==
        std::vector<double>{1.0, 0.0});
  for (std::size_t a : {1u, 2u, 3u}) {
    const auto round = cq_compose(encode(a), measure(a));
    CHECK(round.dom() == CQDim{a, 1});
    CHECK(reshape(round.tensor(), {a}, {a}) == ComplexTensor::identity({a}));
  }
  CHECK_THROWS_AS(measure(0), ValueError);
  CHECK_THROWS_AS(encode(0), ValueError);

  // The per-wire tensors agree with the grouped maps.
  CHECK(from_wires(Ty{"q"}, Ty{"c"}, measure_wire_tensor<Complex>()).tensor() ==
        measure(2).tensor());
  CHECK(from_wires(Ty{"c"}, Ty{"q"}, encode_wire_tensor<Complex>()).tensor() ==
        encode(2).tensor());
}

TEST_CASE("Per-wire doubling regroups to the cq layout", "[cq][property]") {
  Gen gen(41);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = gen.tensor({2, 2}, {2});
    const auto per_wire = doubled_wire_tensor(f);
    CHECK(per_wire.dom_dims() == Dims{4, 4});
    CHECK(close(from_wires(Ty{"q", "q"}, Ty{"q"}, per_wire).tensor(), doubled(f).tensor(),
                1e-14));
  }
}

TEST_CASE("Shift rule", "[cq][shift]") {
  CHECK(ShiftRule::spider().s() == Catch::Approx(kPi / 2));
  CHECK(ShiftRule::for_eigenvalue(1.0).s() == Catch::Approx(kPi / 4));
  CHECK_THROWS_AS(ShiftRule(1.0, kPi / 2), ValueError);
  CHECK_THROWS_AS(ShiftRule(0.0, 1.0), ValueError);

  const auto spider = Box::zspider(1, 1, PhaseExpr::parameter(0));
  const auto d = shift_rule_derivative(Box::doubled(spider), 0, ShiftRule::spider());
  const auto expected =
      0.5 * FormalSum(Diagram::from_box(Box::doubled(Box::zspider(1, 1, PhaseExpr::parameter(0).shifted(kPi / 2))))) +
      -0.5 * FormalSum(Diagram::from_box(Box::doubled(Box::zspider(1, 1, PhaseExpr::parameter(0).shifted(-kPi / 2)))));
  CHECK(d == expected);
  CHECK(shift_rule_derivative(spider, 0, ShiftRule::spider()) == expected);
  CHECK(shift_rule_derivative(Box::doubled(Box::zspider(1, 1, 0.4)), 0, ShiftRule::spider()).is_zero());
  CHECK_THROWS_AS(shift_rule_derivative(Box::plain("f", Ty{"x"}, Ty{"x"}, {PhaseExpr::parameter(0), 0.0, 0.0, 1.0}),
                                        0, ShiftRule::spider()),
                  MissingRuleError);

  // Against finite differences, including non-unit affine coefficients.
  Gen gen(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto phase = gen.phase(2, 2);
    const auto box = Box::doubled(Box::zspider(gen.between(0, 2), gen.between(0, 2), phase));
    const auto theta = gen.theta(2);
    for (std::size_t i = 0; i < 2; ++i) {
      const auto exact = interpret(shift_rule_derivative(box, i, ShiftRule::spider()), theta);
      const auto fd = finite_difference(FormalSum(Diagram::from_box(box)), i, theta);
      CHECK(close(exact, fd, 1e-8));
    }
  }
}

TEST_CASE("Shift-rule gradients of the measured corpus circuits", "[cq][shift][corpus]") {
  std::size_t circuits = 0;
  for (const auto& e : corpus::entries()) {
    if (e.category != corpus::Category::cq) continue;
    ++circuits;
    INFO(e.name);
    const auto& s = e.diagram;
    CHECK(s.num_params() <= 4);
    for (const auto& theta : default_grid(s.num_params(), 3)) {
      const auto value = interpret(s, theta);
      if (s.dom().empty() && s.cod() == Ty::repeat("c", s.cod().size())) {
        Complex total{0.0, 0.0};
        for (const auto& v : value.data()) total += v;
        CHECK(close(total, 1.0, 1e-10));
      }
      for (std::size_t i = 0; i < s.num_params(); ++i) {
        const auto exact = interpret(diagram_derivative(s, i), theta);
        CHECK(close(exact, finite_difference(s, i, theta), 1e-8));
      }
    }
  }
  CHECK(circuits >= 10);
}

TEST_CASE("Complete positivity validator", "[cq]") {
  Gen gen(12);
  CHECK(is_completely_positive(doubled(gen.tensor({2}, {2}))));
  CHECK(is_completely_positive(measure(2)));
  CHECK(is_completely_positive(encode(3)));
  // -double(I) has a negative Choi eigenvalue.
  CHECK_FALSE(is_completely_positive(
      CQMap({1, 2}, {1, 2}, scale(Complex{-1.0}, doubled(ComplexTensor::identity({2})).tensor()))));
}

TEST_CASE("Doubled circuit helpers", "[cq]") {
  const auto circuit = zx::cnot().then(zx::h().tensor(Diagram::id(Ty{"x"})));
  const auto dbl = doubled_circuit(circuit);
  CHECK(dbl.dom() == Ty{"q", "q"});
  CHECK(dbl.size() == circuit.size());
  CHECK(close(from_wires(dbl.dom(), dbl.cod(), interpret(dbl)).tensor(),
              doubled(interpret(circuit)).tensor(), 1e-14));

  const auto zeros = prepare_zeros(2);
  CHECK(zeros.dom() == Ty{});
  CHECK(zeros.cod() == Ty{"q", "q"});
  const auto p = interpret(zeros.then(measure_all(2)));
  CHECK(close(p, ComplexTensor({}, {2, 2}, {1, 0, 0, 0}), 1e-14));
}

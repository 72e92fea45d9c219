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

#include "diagdiff/colours.hpp"

using namespace diagdiff;
using namespace diagdiff::testing;

namespace {

Complex central(const std::function<Complex(Complex)>& f, Complex z, double h = 1e-5) {
  return (f(z + h) - f(z - h)) / (2.0 * h);
}

ComplexTensor central(const BubbleColour& c, const ComplexTensor& x, const ComplexTensor& dx,
                      double h = 1e-6) {
  const auto plus = c.evaluate(x + scale(Complex{h}, dx), x.dom_dims(), x.cod_dims());
  const auto minus = c.evaluate(x + scale(Complex{-h}, dx), x.dom_dims(), x.cod_dims());
  return scale(Complex{1.0 / (2.0 * h)}, plus + scale(Complex{-1.0}, minus));
}

}  // namespace

TEST_CASE("Standard colours are registered", "[colours]") {
  const auto& reg = ColourRegistry::standard();
  for (const char* name : {"id", "one", "zero", "exp", "sigmoid", "d_sigmoid", "d2_sigmoid",
                           "relu", "step", "softmax", "matrix_exp"}) {
    CHECK(reg.contains(name));
  }
  CHECK_THROWS_AS(reg.get("tanh"), ColourError);
}

TEST_CASE("Pointwise derivatives agree with finite differences", "[colours]") {
  const auto& reg = ColourRegistry::standard();
  Gen gen(7);
  for (const char* name : {"id", "exp", "sigmoid", "d_sigmoid", "d2_sigmoid"}) {
    const auto& c = reg.get(name);
    INFO(name);
    for (int k = 0; k < 50; ++k) {
      const Complex z{gen.uniform(-4, 4), 0.0};
      CHECK(close(c.deriv(z), central(c.fn, z), 1e-8));
      // The derivative colour evaluates to the derivative.
      if (!c.derivative_colour.empty()) {
        CHECK(close(reg.get(c.derivative_colour).fn(z), c.deriv(z), 1e-15));
      }
    }
  }
  const auto& sig = reg.get("sigmoid");
  CHECK(close(sig.fn(0.0), 0.5, 1e-15));
  CHECK(close(sig.deriv(0.0), 0.25, 1e-15));
}

TEST_CASE("ReLU and its step", "[colours]") {
  const auto& relu = ColourRegistry::standard().get("relu");
  CHECK(relu.fn(Complex{-2.0}) == Complex{0.0});
  CHECK(relu.fn(Complex{1.5}) == Complex{1.5});
  CHECK(relu.deriv(Complex{0.0}) == Complex{0.0});
  CHECK(relu.deriv(Complex{0.1}) == Complex{1.0});
  CHECK(relu.derivative_colour == "step");
}

TEST_CASE("Softmax and its Jacobian-vector product", "[colours]") {
  const auto& sm = ColourRegistry::standard().get("softmax");
  CHECK(sm.kind == ColourKind::matrix);
  const ComplexTensor x({}, {3}, {1.0, 2.0, 3.0});
  const auto y = sm.evaluate(x, {}, {3});
  Complex total{0.0};
  for (auto v : y.data()) total += v;
  CHECK(close(total, 1.0, 1e-15));
  const double e = std::exp(1.0);
  CHECK(close(y.data()[0], 1.0 / (1.0 + e + e * e), 1e-15));

  Gen gen(4);
  for (int k = 0; k < 20; ++k) {
    auto a = ComplexTensor::zeros({}, {4}), da = ComplexTensor::zeros({}, {4});
    for (std::size_t i = 0; i < 4; ++i) {
      a.data()[i] = gen.uniform(-2, 2);
      da.data()[i] = gen.uniform(-1, 1);
    }
    CHECK(close(sm.tangent(a, da, {}, {4}), central(sm, a, da), 1e-8));
  }
}

TEST_CASE("Matrix exponential colour and its Fréchet derivative", "[colours]") {
  const auto& me = ColourRegistry::standard().get("matrix_exp");
  Gen gen(9);
  for (int k = 0; k < 20; ++k) {
    const auto x = gen.tensor({2}, {2}), dx = gen.tensor({2}, {2});
    CHECK(close(me.evaluate(x, {2}, {2}), matrix_exp(x, 1.0), 1e-14));
    CHECK(close(me.tangent(x, dx, {2}, {2}), central(me, x, dx), 1e-8));
  }
  CHECK_THROWS_AS(me.evaluate(ComplexTensor::zeros({2}, {4}), {2}, {4}), InterpretError);
}

TEST_CASE("Relative entropy", "[colours]") {
  const std::vector<double> target{0.25, 0.75};
  const auto re = relative_entropy_colour("kl", target);
  const ComplexTensor y({}, {2}, {0.5, 0.5});
  const auto value = re.evaluate(y, {}, {});
  CHECK(close(value.data()[0], 0.5 * std::log(2.0) + 0.5 * std::log(2.0 / 3.0), 1e-15));
  // Partials are log(y/y*) + 1.
  CHECK(close(re.tangent(y, ComplexTensor({}, {2}, {1.0, 0.0}), {}, {}).data()[0],
              std::log(2.0) + 1.0, 1e-15));
  CHECK(close(re.tangent(y, ComplexTensor({}, {2}, {0.0, 1.0}), {}, {}).data()[0],
              std::log(2.0 / 3.0) + 1.0, 1e-15));
  CHECK(close(re.evaluate(ComplexTensor({}, {2}, {0.25, 0.75}), {}, {}).data()[0], 0.0, 1e-15));
  CHECK_THROWS_AS(re.evaluate(ComplexTensor({}, {3}, {0.2, 0.3, 0.5}), {}, {}), InterpretError);
  CHECK(re.map_cod(Ty{"x", "x"}) == Ty{});
}

TEST_CASE("Registry rejects malformed colours", "[colours]") {
  ColourRegistry reg;
  auto f = [](Complex z) { return z * z; };
  auto df = [](Complex z) { return 2.0 * z; };
  reg.add(BubbleColour::pointwise("square", f, df));
  CHECK_THROWS_AS(reg.add(BubbleColour::pointwise("square", f, df)), ColourError);
  CHECK_THROWS_AS(reg.add(BubbleColour::pointwise("", f, df)), ColourError);
  CHECK_THROWS_AS(reg.add(BubbleColour::pointwise("half", f, {})), ColourError);
  CHECK_THROWS_AS(reg.add(BubbleColour::matrix_level("m", {}, {})), ColourError);
  CHECK(reg.names() == std::vector<std::string>{"square"});
}

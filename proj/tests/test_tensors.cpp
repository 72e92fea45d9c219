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

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "support.hpp"

#include "diagdiff/interpret.hpp"
#include "diagdiff/zx.hpp"

using namespace diagdiff;
using namespace diagdiff::testing;

namespace {

const Complex I{0.0, 1.0};

ComplexTensor mat2(Complex a, Complex b, Complex c, Complex d) {
  return ComplexTensor({2}, {2}, {a, b, c, d});
}

Eigen::MatrixXcd to_eigen(const ComplexTensor& t) {
  Eigen::MatrixXcd m(t.cod_size(), t.dom_size());
  for (std::size_t r = 0; r < t.cod_size(); ++r)
    for (std::size_t c = 0; c < t.dom_size(); ++c) m(r, c) = t.at(r, c);
  return m;
}

}  // namespace

TEST_CASE("Composition is matrix product in diagrammatic order", "[tensor]") {
  const auto a = mat2(1, 2, 3, 4), b = mat2(0, 1, 1, 0);
  // a ⨾ b = B·A.
  CHECK(mat_compose(a, b) == mat2(3, 4, 1, 2));
  CHECK(mat_compose(b, a) == mat2(2, 1, 4, 3));
  CHECK_THROWS_AS(mat_compose(a, ComplexTensor::identity({3})), DimensionError);
}

TEST_CASE("Kronecker product", "[tensor]") {
  const auto a = mat2(1, 2, 3, 4), x = mat2(0, 1, 1, 0);
  const auto k = kron(a, x);
  CHECK(k.dom_dims() == Dims{2, 2});
  CHECK(k.at(0, 1) == Complex(1));
  CHECK(k.at(1, 2) == Complex(2));
  CHECK(k.at(3, 0) == Complex(3));
  CHECK(k.at(3, 1) == Complex(0));
  CHECK(k.at(2, 1) == Complex(3));

  Gen gen(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto A = gen.tensor({2}, {3}), B = gen.tensor({2}, {2});
    const auto C = gen.tensor({3}, {2}), D = gen.tensor({2}, {3});
    // (A⊗B)⨾(C⊗D) = (A⨾C)⊗(B⨾D).
    CHECK(close(mat_compose(kron(A, B), kron(C, D)),
                kron(mat_compose(A, C), mat_compose(B, D)), 1e-12));
  }
}

TEST_CASE("Entrywise operations, conjugation and adjoint", "[tensor]") {
  const auto a = mat2(1, I, 2, -I), b = mat2(3, 1, I, 2);
  CHECK(entrywise(a, b, EntrywiseOp::add) == mat2(4, 1.0 + I, 2.0 + I, 2.0 - I));
  CHECK(entrywise(a, b, EntrywiseOp::mul) == mat2(3, I, 2.0 * I, -2.0 * I));
  CHECK(conj(a) == mat2(1, -I, 2, I));
  CHECK(dagger(a) == mat2(1, 2, -I, I));
  CHECK_THROWS_AS(entrywise(a, ComplexTensor::identity({3}), EntrywiseOp::add),
                  DimensionError);
  CHECK_THROWS_AS(ComplexTensor({2}, {2}, {1, 2, 3}), DimensionError);
  CHECK_THROWS_AS(ComplexTensor::zeros({0}, {1}), DimensionError);
}

TEST_CASE("Matrix exponential", "[tensor]") {
  const auto z = mat2(1, 0, 0, -1), x = mat2(0, 1, 1, 0);
  const double t = 0.7;
  CHECK(close(matrix_exp(z, t), mat2(std::exp(I * t), 0, 0, std::exp(-I * t)), 1e-14));
  CHECK(close(matrix_exp(x, t),
              mat2(std::cos(t), I * std::sin(t), I * std::sin(t), std::cos(t)), 1e-14));
  CHECK(close(matrix_exp_raw(ComplexTensor::zeros({3}, {3})), ComplexTensor::identity({3}),
              0.0));
  CHECK_THROWS_AS(matrix_exp_raw(ComplexTensor::zeros({2}, {3})), DimensionError);

  Gen gen(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = gen.between(1, 8);
    auto a = gen.tensor({n}, {n});
    a = scale(Complex{gen.uniform(0.1, 6.0), 0.0}, a);
    const Eigen::MatrixXcd oracle = to_eigen(a).exp();
    const auto got = to_eigen(matrix_exp_raw(a));
    CHECK((got - oracle).cwiseAbs().maxCoeff() <= 1e-10 * std::max(1.0, oracle.cwiseAbs().maxCoeff()));

    // Hermitian generator: exp(isH)·exp(itH) = exp(i(s+t)H).
    const auto h = scale(Complex{0.5, 0.0}, a + dagger(a));
    const double s = gen.uniform(-2, 2), u = gen.uniform(-2, 2);
    CHECK(close(mat_compose(matrix_exp(h, s), matrix_exp(h, u)), matrix_exp(h, s + u), 1e-10));
  }
}

TEST_CASE("Interpretation of small diagrams", "[tensor][interpret]") {
  CHECK(interpret(Diagram::id(Ty{})) == ComplexTensor::scalar(1.0));
  CHECK(interpret(Diagram::id(Ty{"x", "x"})) == ComplexTensor::identity({2, 2}));
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(close(interpret(zx::h()), mat2(s, s, s, -s), 1e-15));
  const auto sw = interpret(zx::swap());
  CHECK(sw.at(0, 0) == Complex(1));
  CHECK(sw.at(1, 2) == Complex(1));
  CHECK(sw.at(2, 1) == Complex(1));
  CHECK(sw.at(3, 3) == Complex(1));
  CHECK(interpret(FormalSum::zero(Ty{"x"}, Ty{"x"})) == ComplexTensor::zeros({2}, {2}));
  CHECK_THROWS_AS(type_dims(Ty{"wire-of-unknown-size"}), InterpretError);
}

TEST_CASE("Interpretation is a monoidal functor", "[tensor][interpret][property]") {
  Gen gen(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t params = gen.between(0, 3);
    const auto theta = gen.theta(params);
    const auto f = gen.zx_diagram(gen.between(0, 2), gen.between(0, 4), params, 2);
    const auto g = gen.zx_diagram(f.cod().size(), gen.between(0, 4), params, 2);
    const auto h = gen.zx_diagram(gen.between(0, 1), gen.between(0, 3), params, 2);
    INFO("trial " << trial);
    CHECK(close(interpret(f.then(g), theta),
                mat_compose(interpret(f, theta), interpret(g, theta)), 1e-12));
    CHECK(close(interpret(f.tensor(h), theta),
                kron(interpret(f, theta), interpret(h, theta)), 1e-12));

    const Complex c = gen.complex();
    const auto sum = FormalSum(f) + c * FormalSum(f.then(Diagram::id(f.cod())));
    CHECK(close(interpret(sum, theta),
                interpret(f, theta) + scale(c, interpret(f, theta)), 1e-12));
  }
}

TEST_CASE("The dual interpretation projects onto the complex one", "[tensor][interpret][property]") {
  Gen gen(99);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t params = gen.between(1, 3);
    const auto theta = gen.theta(params);
    const auto d = gen.zx_diagram(gen.between(0, 3), gen.between(1, 5), params);
    const auto seeded = seed_dual(theta, gen.index(params));
    const auto dual = interpret_in<DualComplex>(d, std::span<const DualComplex>(seeded));
    CHECK(close(real_part(dual), interpret(d, theta), 1e-12));
  }
}

TEST_CASE("Interpretation over the two-element rigs", "[tensor][interpret]") {
  const auto sw = Diagram::from_box(Box::swap("c", "c"));
  const auto f2 = interpret_in<F2>(sw, std::span<const F2>{});
  CHECK(f2.at(1, 2) == F2{true});
  CHECK(f2.at(1, 1) == F2{false});
  const auto b = interpret_in<Boolean>(sw, std::span<const Boolean>{});
  CHECK(b.at(3, 3) == Boolean{true});

  // Twice the identity is zero over F2 and the identity over the Boolean rig.
  const Diagram id = Diagram::id(Ty{"c"});
  const auto twice = FormalSum(id) + FormalSum(id);
  CHECK(interpret_in<F2>(twice, std::span<const F2>{}) == Tensor<F2>::zeros({2}, {2}));
  CHECK(interpret_in<Boolean>(twice, std::span<const Boolean>{}) == Tensor<Boolean>::identity({2}));

  CHECK_THROWS_AS(interpret_in<F2>(zx::z(1, 1, 0.5), std::span<const F2>{}), InterpretError);
  CHECK_THROWS_AS(interpret_in<Boolean>(zx::h(), std::span<const Boolean>{}), InterpretError);
}

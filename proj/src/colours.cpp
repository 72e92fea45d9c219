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

#include "diagdiff/colours.hpp"

#include <cmath>

namespace diagdiff {

namespace {

Complex sigmoid(Complex z) { return 1.0 / (1.0 + std::exp(-z)); }

Complex d_sigmoid(Complex z) {
  const Complex s = sigmoid(z);
  return s * (1.0 - s);
}

Complex d2_sigmoid(Complex z) {
  const Complex s = sigmoid(z);
  return s * (1.0 - s) * (1.0 - 2.0 * s);
}

Complex d3_sigmoid(Complex z) {
  const Complex s = sigmoid(z);
  const Complex ds = s * (1.0 - s);
  return ds * (1.0 - 2.0 * s) * (1.0 - 2.0 * s) - 2.0 * ds * ds;
}

ComplexTensor map_entries(const ComplexTensor& x,
                          const std::function<Complex(Complex)>& f) {
  auto out = x;
  for (auto& v : out.data()) v = f(v);
  return out;
}

ComplexTensor softmax(const ComplexTensor& x) {
  auto out = x;
  Complex total{0.0, 0.0};
  for (auto& v : out.data()) {
    v = std::exp(v);
    total += v;
  }
  for (auto& v : out.data()) v /= total;
  return out;
}

ComplexTensor softmax_jvp(const ComplexTensor& x, const ComplexTensor& dx) {
  const auto y = softmax(x);
  Complex dot{0.0, 0.0};
  for (std::size_t i = 0; i < y.data().size(); ++i) dot += y.data()[i] * dx.data()[i];
  auto out = y;
  for (std::size_t i = 0; i < y.data().size(); ++i) {
    out.data()[i] = y.data()[i] * (dx.data()[i] - dot);
  }
  return out;
}

ComplexTensor square_matrix(const ComplexTensor& x) {
  if (x.dom_size() != x.cod_size()) {
    throw InterpretError("matrix_exp bubble needs a square inner diagram");
  }
  return ComplexTensor({x.dom_size()}, {x.cod_size()}, x.data());
}

// exp(iX) and its Fréchet derivative from the block identity
// exp([[A, E], [0, A]]) = [[exp A, L(A, E)], [0, exp A]].
ComplexTensor expi_matrix(const ComplexTensor& x) {
  auto m = square_matrix(x);
  auto e = matrix_exp(m, 1.0);
  return ComplexTensor(x.dom_dims(), x.cod_dims(), std::move(e.data()));
}

ComplexTensor expi_jvp(const ComplexTensor& x, const ComplexTensor& dx) {
  const std::size_t n = x.dom_size();
  auto block = ComplexTensor::zeros({2 * n}, {2 * n});
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      block.at(r, c) = x.at(r, c);
      block.at(n + r, n + c) = x.at(r, c);
      block.at(r, n + c) = dx.at(r, c);
    }
  }
  const auto e = matrix_exp(block, 1.0);
  auto out = ComplexTensor::zeros(x.dom_dims(), x.cod_dims());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out.at(r, c) = e.at(r, n + c);
  }
  return out;
}

ColourRegistry make_standard() {
  ColourRegistry reg;
  auto zero = [](Complex) { return Complex{0.0, 0.0}; };
  auto one = [](Complex) { return Complex{1.0, 0.0}; };
  reg.add(BubbleColour::pointwise("id", [](Complex z) { return z; }, one, "one"));
  reg.add(BubbleColour::pointwise("one", one, zero, "zero"));
  reg.add(BubbleColour::pointwise("zero", zero, zero, "zero"));
  reg.add(BubbleColour::pointwise(
      "exp", [](Complex z) { return std::exp(z); },
      [](Complex z) { return std::exp(z); }, "exp"));
  reg.add(BubbleColour::pointwise("sigmoid", sigmoid, d_sigmoid, "d_sigmoid"));
  reg.add(BubbleColour::pointwise("d_sigmoid", d_sigmoid, d2_sigmoid, "d2_sigmoid"));
  reg.add(BubbleColour::pointwise("d2_sigmoid", d2_sigmoid, d3_sigmoid));
  // ReLU acts on the real part; its derivative at 0 is taken to be 0.
  auto step = [](Complex z) { return Complex{z.real() > 0.0 ? 1.0 : 0.0, 0.0}; };
  reg.add(BubbleColour::pointwise(
      "relu", [](Complex z) { return Complex{std::max(0.0, z.real()), 0.0}; },
      step, "step"));
  reg.add(BubbleColour::pointwise("step", step, zero, "zero"));
  reg.add(BubbleColour::matrix_level("softmax", softmax, softmax_jvp));
  reg.add(BubbleColour::matrix_level("matrix_exp", expi_matrix, expi_jvp));
  return reg;
}

}  // namespace

BubbleColour BubbleColour::pointwise(std::string name,
                                     std::function<Complex(Complex)> fn,
                                     std::function<Complex(Complex)> deriv,
                                     std::string derivative_colour) {
  BubbleColour c;
  c.name = std::move(name);
  c.kind = ColourKind::pointwise;
  c.fn = std::move(fn);
  c.deriv = std::move(deriv);
  c.derivative_colour = std::move(derivative_colour);
  return c;
}

BubbleColour BubbleColour::matrix_level(
    std::string name, std::function<ComplexTensor(const ComplexTensor&)> apply,
    std::function<ComplexTensor(const ComplexTensor&, const ComplexTensor&)> jvp,
    std::function<Ty(const Ty&)> dom_map, std::function<Ty(const Ty&)> cod_map) {
  BubbleColour c;
  c.name = std::move(name);
  c.kind = ColourKind::matrix;
  c.apply = std::move(apply);
  c.jvp = std::move(jvp);
  c.dom_map = std::move(dom_map);
  c.cod_map = std::move(cod_map);
  return c;
}

ComplexTensor BubbleColour::evaluate(const ComplexTensor& x, const Dims& dom,
                                     const Dims& cod) const {
  auto y = kind == ColourKind::pointwise ? map_entries(x, fn) : apply(x);
  return reshape(std::move(y), dom, cod);
}

ComplexTensor BubbleColour::tangent(const ComplexTensor& x,
                                    const ComplexTensor& dx, const Dims& dom,
                                    const Dims& cod) const {
  if (kind == ColourKind::pointwise) {
    auto out = dx;
    for (std::size_t i = 0; i < out.data().size(); ++i) {
      out.data()[i] = deriv(x.data()[i]) * dx.data()[i];
    }
    return reshape(std::move(out), dom, cod);
  }
  if (!jvp) {
    throw InterpretError("colour '" + name +
                         "' has no Jacobian-vector product registered");
  }
  return reshape(jvp(x, dx), dom, cod);
}

void ColourRegistry::add(BubbleColour colour) {
  if (colour.name.empty()) throw ColourError("colour needs a name");
  if (colour.kind == ColourKind::pointwise && (!colour.fn || !colour.deriv)) {
    throw ColourError("pointwise colour '" + colour.name +
                      "' needs a function and its derivative");
  }
  if (colour.kind == ColourKind::matrix && !colour.apply) {
    throw ColourError("matrix colour '" + colour.name + "' needs apply");
  }
  auto name = colour.name;
  if (!colours_.emplace(name, std::move(colour)).second) {
    throw ColourError("colour '" + name + "' is already registered");
  }
}

const BubbleColour& ColourRegistry::get(const std::string& name) const {
  auto it = colours_.find(name);
  if (it == colours_.end()) {
    throw ColourError("colour '" + name + "' is not registered");
  }
  return it->second;
}

std::vector<std::string> ColourRegistry::names() const {
  std::vector<std::string> out;
  for (const auto& kv : colours_) out.push_back(kv.first);
  return out;
}

const ColourRegistry& ColourRegistry::standard() {
  static const ColourRegistry reg = make_standard();
  return reg;
}

BubbleColour relative_entropy_colour(std::string name,
                                     std::vector<double> target) {
  auto check = [target](const ComplexTensor& y) {
    if (y.data().size() != target.size()) {
      throw InterpretError("relative entropy expects " +
                           std::to_string(target.size()) + " entries, got " +
                           std::to_string(y.data().size()));
    }
  };
  auto apply = [target, check](const ComplexTensor& y) {
    check(y);
    Complex total{0.0, 0.0};
    for (std::size_t i = 0; i < target.size(); ++i) {
      total += y.data()[i] * std::log(y.data()[i] / target[i]);
    }
    return ComplexTensor::scalar(total);
  };
  // ∂l/∂y_i = log(y_i / y*_i) + 1.
  auto jvp = [target, check](const ComplexTensor& y, const ComplexTensor& dy) {
    check(y);
    Complex total{0.0, 0.0};
    for (std::size_t i = 0; i < target.size(); ++i) {
      total += (std::log(y.data()[i] / target[i]) + 1.0) * dy.data()[i];
    }
    return ComplexTensor::scalar(total);
  };
  auto to_unit = [](const Ty&) { return Ty{}; };
  return BubbleColour::matrix_level(std::move(name), apply, jvp, to_unit,
                                    to_unit);
}

Diagram bubble_wrap(const BubbleColour& colour, FormalSum inner) {
  auto dom = colour.map_dom(inner.dom());
  auto cod = colour.map_cod(inner.cod());
  return Diagram::from_box(
      Box::bubble(colour.name, std::move(dom), std::move(cod), std::move(inner)));
}

Diagram bubble_wrap(const ColourRegistry& colours, const std::string& colour,
                    FormalSum inner) {
  return bubble_wrap(colours.get(colour), std::move(inner));
}

}  // namespace diagdiff

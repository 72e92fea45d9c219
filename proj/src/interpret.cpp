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

#include "diagdiff/interpret.hpp"

#include <cmath>
#include <type_traits>

#include "diagdiff/cqmap.hpp"
#include "diagdiff/zx.hpp"

namespace diagdiff {

Dims type_dims(const Ty& t) {
  Dims out;
  out.reserve(t.size());
  for (const auto& o : t.objects()) {
    const auto d = wire_dim(o);
    if (!d) throw InterpretError("wire '" + o + "' has no dimension");
    out.push_back(*d);
  }
  return out;
}

namespace {

template <class T>
constexpr bool kIsComplexLike = std::is_same_v<T, Complex> || std::is_same_v<T, DualComplex>;

[[noreturn]] void unsupported(const Box& box, const char* rig) {
  throw InterpretError("box '" + box.name() + "' (" + box.kind() +
                       ") has no interpretation over " + rig);
}

template <Rig T>
const char* rig_name() {
  if constexpr (std::is_same_v<T, F2>) return "F2";
  else if constexpr (std::is_same_v<T, Boolean>) return "the Boolean rig";
  else return "this rig";
}

/// n·1 in a bit rig.
template <Rig T>
T natural(const Complex& c, const std::string& where) {
  const double re = c.real();
  if (c.imag() != 0.0 || re < 0.0 || re != std::floor(re)) {
    throw InterpretError(where + ": coefficient is not a natural number");
  }
  const auto n = static_cast<unsigned long long>(re);
  if constexpr (std::is_same_v<T, F2>) {
    return n % 2 == 1 ? RigTraits<T>::one() : RigTraits<T>::zero();
  } else {
    return n > 0 ? RigTraits<T>::one() : RigTraits<T>::zero();
  }
}

DualTensor bubble_dual(const BubbleColour& colour, const DualTensor& x,
                       const Dims& dom, const Dims& cod) {
  if (colour.kind == ColourKind::pointwise) {
    auto out = x;
    for (auto& v : out.data()) v = lift_smooth(colour.fn, colour.deriv, v);
    return reshape(std::move(out), dom, cod);
  }
  const auto re = real_part(x), eps = eps_part(x);
  return make_dual(colour.evaluate(re, dom, cod), colour.tangent(re, eps, dom, cod));
}

}  // namespace

template <Rig T>
Tensor<T> box_tensor(const Box& box, std::span<const T> theta,
                     const ColourRegistry& colours) {
  const Dims dom = type_dims(box.dom()), cod = type_dims(box.cod());
  const auto& payload = box.payload();

  if (const auto* p = std::get_if<SwapBox>(&payload)) {
    (void)p;
    return zx::swap_tensor<T>(dom[0], dom[1]);
  }
  if (std::holds_alternative<MeasureBox>(payload)) return cq::measure_wire_tensor<T>();
  if (std::holds_alternative<EncodeBox>(payload)) return cq::encode_wire_tensor<T>();

  if constexpr (kIsComplexLike<T>) {
    if (const auto* p = std::get_if<PlainBox>(&payload)) {
      if (p->entries.empty()) {
        throw InterpretError("box '" + box.name() + "' is opaque (no entries)");
      }
      std::vector<T> data;
      data.reserve(p->entries.size());
      for (const auto& e : p->entries) data.push_back(e.template eval_in<T>(theta));
      return Tensor<T>(dom, cod, std::move(data));
    }
    if (const auto* p = std::get_if<ZSpiderBox>(&payload)) {
      return zx::spider_tensor<T>(p->legs_in, p->legs_out,
                                  p->phase.template eval_in<T>(theta));
    }
    if (std::holds_alternative<HadamardBox>(payload)) return zx::hadamard_tensor<T>();
    if (const auto* p = std::get_if<GreenBox>(&payload)) {
      return zx::green_tensor<T>(p->legs_in, p->legs_out,
                                 p->label.template eval_in<T>(theta));
    }
    if (const auto* p = std::get_if<ScalarBox>(&payload)) return Tensor<T>::scalar(T(p->value));
    if (const auto* p = std::get_if<DoubledBox>(&payload)) {
      return cq::doubled_wire_tensor<T>(box_tensor<T>(*p->inner, theta, colours));
    }
    if (const auto* p = std::get_if<BubbleBox>(&payload)) {
      const auto& colour = colours.get(p->colour);
      const auto x = interpret_in<T>(*p->inner, theta, colours);
      if constexpr (std::is_same_v<T, Complex>) {
        return colour.evaluate(x, dom, cod);
      } else {
        return bubble_dual(colour, x, dom, cod);
      }
    }
    if (const auto* p = std::get_if<BubbleJvpBox>(&payload)) {
      if constexpr (std::is_same_v<T, Complex>) {
        const auto& colour = colours.get(p->colour);
        const auto x = interpret_in<T>(*p->inner, theta, colours);
        const auto dx = interpret_in<T>(*p->tangent, theta, colours);
        return colour.tangent(x, dx, dom, cod);
      } else {
        unsupported(box, "dual numbers");
      }
    }
    unsupported(box, "the complex numbers");
  } else {
    if (const auto* p = std::get_if<ScalarBox>(&payload)) {
      return Tensor<T>::scalar(natural<T>(p->value, "scalar box"));
    }
    unsupported(box, rig_name<T>());
  }
}

template <Rig T>
Tensor<T> interpret_in(const Diagram& d, std::span<const T> theta,
                       const ColourRegistry& colours) {
  auto state = Tensor<T>::identity(type_dims(d.dom()));
  for (const auto& layer : d.layers()) {
    state = apply_at(state, box_tensor<T>(layer.box, theta, colours), layer.offset);
  }
  return state;
}

template <Rig T>
Tensor<T> interpret_in(const FormalSum& s, std::span<const T> theta,
                       const ColourRegistry& colours) {
  auto out = Tensor<T>::zeros(type_dims(s.dom()), type_dims(s.cod()));
  for (const auto& term : s.terms()) {
    auto t = interpret_in<T>(term.diagram, theta, colours);
    if constexpr (kIsComplexLike<T>) {
      out = out + scale(T(term.coeff), std::move(t));
    } else {
      out = out + scale(natural<T>(term.coeff, "formal sum"), std::move(t));
    }
  }
  return out;
}

#define DIAGDIFF_INSTANTIATE(T)                                                 \
  template Tensor<T> box_tensor<T>(const Box&, std::span<const T>,              \
                                   const ColourRegistry&);                      \
  template Tensor<T> interpret_in<T>(const Diagram&, std::span<const T>,        \
                                     const ColourRegistry&);                    \
  template Tensor<T> interpret_in<T>(const FormalSum&, std::span<const T>,      \
                                     const ColourRegistry&);

DIAGDIFF_INSTANTIATE(Complex)
DIAGDIFF_INSTANTIATE(DualComplex)
DIAGDIFF_INSTANTIATE(F2)
DIAGDIFF_INSTANTIATE(Boolean)

#undef DIAGDIFF_INSTANTIATE

namespace {

std::vector<Complex> to_complex(std::span<const double> theta) {
  return {theta.begin(), theta.end()};
}

}  // namespace

ComplexTensor interpret(const Diagram& d, std::span<const double> theta,
                        const ColourRegistry& colours) {
  const auto c = to_complex(theta);
  return interpret_in<Complex>(d, c, colours);
}

ComplexTensor interpret(const FormalSum& s, std::span<const double> theta,
                        const ColourRegistry& colours) {
  const auto c = to_complex(theta);
  return interpret_in<Complex>(s, c, colours);
}

std::vector<DualComplex> seed_dual(std::span<const double> theta, std::size_t seed) {
  std::vector<DualComplex> out;
  out.reserve(theta.size());
  for (std::size_t k = 0; k < theta.size(); ++k) {
    out.emplace_back(Complex{theta[k], 0.0}, Complex{k == seed ? 1.0 : 0.0, 0.0});
  }
  return out;
}

}  // namespace diagdiff

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

#include "diagdiff/diagram.hpp"

#include <type_traits>

#include <algorithm>
#include <sstream>

namespace diagdiff {

std::optional<std::size_t> wire_dim(const std::string& object) {
  if (object == kQubitWire || object == kBitWire) return 2;
  if (object == kCqQubitWire) return 4;
  return std::nullopt;
}

Ty Ty::slice(std::size_t begin, std::size_t length) const {
  return Ty(std::vector<std::string>(
      objects_.begin() + static_cast<std::ptrdiff_t>(begin),
      objects_.begin() + static_cast<std::ptrdiff_t>(begin + length)));
}

std::string Ty::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < objects_.size(); ++i) {
    os << (i ? ", " : "") << objects_[i];
  }
  os << "]";
  return os.str();
}

// Payload equality -----------------------------------------------------------

bool operator==(const DoubledBox& a, const DoubledBox& b) {
  return *a.inner == *b.inner;
}

bool operator==(const BubbleBox& a, const BubbleBox& b) {
  return a.colour == b.colour && *a.inner == *b.inner;
}

bool operator==(const BubbleJvpBox& a, const BubbleJvpBox& b) {
  return a.colour == b.colour && *a.inner == *b.inner &&
         *a.tangent == *b.tangent;
}

// Box factories --------------------------------------------------------------

namespace {

void require_pure_wire(const std::string& wire, const char* what) {
  if (wire != kQubitWire && wire != kBitWire) {
    throw TypeCheckError(std::string(what) + " needs wires of type '" +
                         kQubitWire + "' or '" + kBitWire + "', got '" + wire +
                         "'");
  }
}

bool all_objects(const Ty& t, const std::string& object) {
  return std::all_of(t.objects().begin(), t.objects().end(),
                     [&](const auto& o) { return o == object; });
}

}  // namespace

Box Box::plain(std::string name, Ty dom, Ty cod,
               std::vector<PhaseExpr> entries) {
  if (!entries.empty()) {
    std::size_t size = 1;
    for (const auto* t : {&dom, &cod}) {
      for (const auto& o : t->objects()) {
        auto d = wire_dim(o);
        if (!d) {
          throw TypeCheckError("box '" + name + "' has entries but wire '" + o +
                               "' has no dimension");
        }
        size *= *d;
      }
    }
    if (entries.size() != size) {
      throw TypeCheckError("box '" + name + "' needs " + std::to_string(size) +
                           " entries, got " + std::to_string(entries.size()));
    }
  }
  return Box(std::move(name), std::move(dom), std::move(cod),
             PlainBox{std::move(entries)});
}

Box Box::zspider(std::size_t m, std::size_t n, PhaseExpr phase,
                 const std::string& wire) {
  require_pure_wire(wire, "Z spider");
  return Box("Z", Ty::repeat(wire, m), Ty::repeat(wire, n),
             ZSpiderBox{m, n, std::move(phase)});
}

Box Box::hadamard(const std::string& wire) {
  require_pure_wire(wire, "Hadamard");
  return Box("H", Ty{wire}, Ty{wire}, HadamardBox{});
}

Box Box::swap(const std::string& a, const std::string& b) {
  return Box("swap", Ty{a, b}, Ty{b, a}, SwapBox{});
}

Box Box::green(std::size_t m, std::size_t n, Polynomial label,
               const std::string& wire) {
  require_pure_wire(wire, "green box");
  return Box("R_Z", Ty::repeat(wire, m), Ty::repeat(wire, n),
             GreenBox{m, n, std::move(label)});
}

Box Box::scalar(Complex value) {
  return Box("scalar", Ty{}, Ty{}, ScalarBox{value});
}

Box Box::measure() {
  return Box("M", Ty{kCqQubitWire}, Ty{kBitWire}, MeasureBox{});
}

Box Box::encode() {
  return Box("E", Ty{kBitWire}, Ty{kCqQubitWire}, EncodeBox{});
}

Box Box::doubled(const Box& inner) {
  if (!all_objects(inner.dom(), kQubitWire) ||
      !all_objects(inner.cod(), kQubitWire)) {
    throw TypeCheckError("only boxes on '" + std::string(kQubitWire) +
                         "' wires can be doubled, got " + inner.name() + ": " +
                         inner.dom().to_string() + " → " +
                         inner.cod().to_string());
  }
  if (std::holds_alternative<DoubledBox>(inner.payload_) ||
      std::holds_alternative<BubbleBox>(inner.payload_) ||
      std::holds_alternative<BubbleJvpBox>(inner.payload_)) {
    throw TypeCheckError("cannot double a " + inner.kind() + " box");
  }
  return Box("double(" + inner.name() + ")",
             Ty::repeat(kCqQubitWire, inner.dom().size()),
             Ty::repeat(kCqQubitWire, inner.cod().size()),
             DoubledBox{std::make_shared<const Box>(inner)});
}

Box Box::bubble(std::string colour, Ty dom, Ty cod, FormalSum inner) {
  auto name = "bubble[" + colour + "]";
  return Box(std::move(name), std::move(dom), std::move(cod),
             BubbleBox{std::move(colour),
                       std::make_shared<const FormalSum>(std::move(inner))});
}

Box Box::bubble_jvp(std::string colour, Ty dom, Ty cod, FormalSum inner,
                    FormalSum tangent) {
  if (inner.dom() != tangent.dom() || inner.cod() != tangent.cod()) {
    throw TypeCheckError("bubble tangent is not parallel to its inner sum");
  }
  auto name = "jvp[" + colour + "]";
  return Box(std::move(name), std::move(dom), std::move(cod),
             BubbleJvpBox{std::move(colour),
                          std::make_shared<const FormalSum>(std::move(inner)),
                          std::make_shared<const FormalSum>(std::move(tangent))});
}

std::string Box::kind() const {
  struct Visitor {
    std::string operator()(const PlainBox&) const { return "plain"; }
    std::string operator()(const ZSpiderBox&) const { return "zspider"; }
    std::string operator()(const HadamardBox&) const { return "h"; }
    std::string operator()(const SwapBox&) const { return "swap"; }
    std::string operator()(const GreenBox&) const { return "green"; }
    std::string operator()(const ScalarBox&) const { return "scalar"; }
    std::string operator()(const MeasureBox&) const { return "measure"; }
    std::string operator()(const EncodeBox&) const { return "encode"; }
    std::string operator()(const DoubledBox&) const { return "doubled"; }
    std::string operator()(const BubbleBox&) const { return "bubble"; }
    std::string operator()(const BubbleJvpBox&) const { return "bubble_jvp"; }
  };
  return std::visit(Visitor{}, payload_);
}

std::size_t Box::depth() const {
  if (const auto* b = as<BubbleBox>()) return 1 + b->inner->depth();
  if (const auto* b = as<BubbleJvpBox>()) {
    return 1 + std::max(b->inner->depth(), b->tangent->depth());
  }
  if (const auto* d = as<DoubledBox>()) return d->inner->depth();
  return 0;
}

std::size_t Box::num_params() const {
  struct Visitor {
    std::size_t operator()(const PlainBox& p) const {
      std::size_t n = 0;
      for (const auto& e : p.entries) n = std::max(n, e.num_params());
      return n;
    }
    std::size_t operator()(const ZSpiderBox& z) const { return z.phase.num_params(); }
    std::size_t operator()(const GreenBox& g) const { return g.label.num_params(); }
    std::size_t operator()(const DoubledBox& d) const { return d.inner->num_params(); }
    std::size_t operator()(const BubbleBox& b) const { return b.inner->num_params(); }
    std::size_t operator()(const BubbleJvpBox& b) const {
      return std::max(b.inner->num_params(), b.tangent->num_params());
    }
  };
  return std::visit(
      [](const auto& p) -> std::size_t {
        if constexpr (std::is_invocable_v<Visitor, decltype(p)>) {
          return Visitor{}(p);
        } else {
          return 0;
        }
      },
      payload_);
}

// Diagrams -------------------------------------------------------------------

Diagram::Diagram(Ty dom, Ty cod, std::vector<Layer> layers)
    : dom_(std::move(dom)), cod_(std::move(cod)), layers_(std::move(layers)) {
  std::vector<std::string> wires = dom_.objects();
  for (std::size_t k = 0; k < layers_.size(); ++k) {
    const auto& [offset, box] = layers_[k];
    const auto& in = box.dom().objects();
    if (offset + in.size() > wires.size()) {
      throw TypeCheckError("layer " + std::to_string(k) + " (" + box.name() +
                           ") at offset " + std::to_string(offset) +
                           " needs " + std::to_string(in.size()) +
                           " wires but only " + std::to_string(wires.size()) +
                           " are available");
    }
    const auto first = wires.begin() + static_cast<std::ptrdiff_t>(offset);
    const auto last = first + static_cast<std::ptrdiff_t>(in.size());
    if (!std::equal(first, last, in.begin())) {
      throw TypeCheckError(
          "layer " + std::to_string(k) + " (" + box.name() + ") expects " +
          box.dom().to_string() + " but wires at offset " +
          std::to_string(offset) + " are " +
          Ty(std::vector<std::string>(first, last)).to_string());
    }
    const auto pos = wires.erase(first, last);
    wires.insert(pos, box.cod().objects().begin(), box.cod().objects().end());
  }
  if (Ty(wires) != cod_) {
    throw TypeCheckError("diagram ends with wires " + Ty(wires).to_string() +
                         " but declares codomain " + cod_.to_string());
  }
}

Diagram Diagram::from_box(Box box) {
  auto dom = box.dom();
  auto cod = box.cod();
  return Diagram(std::move(dom), std::move(cod), {Layer{0, std::move(box)}});
}

Diagram Diagram::then(const Diagram& other) const {
  if (cod_ != other.dom_) {
    throw TypeCheckError("cannot compose " + dom_.to_string() + " → " +
                         cod_.to_string() + " with " + other.dom_.to_string() +
                         " → " + other.cod_.to_string());
  }
  auto layers = layers_;
  layers.insert(layers.end(), other.layers_.begin(), other.layers_.end());
  return Diagram(dom_, other.cod_, std::move(layers));
}

Diagram Diagram::tensor(const Diagram& other) const {
  auto layers = layers_;
  for (const auto& l : other.layers_) {
    layers.push_back(Layer{l.offset + cod_.size(), l.box});
  }
  return Diagram(dom_ + other.dom_, cod_ + other.cod_, std::move(layers));
}

Diagram Diagram::replace_layer(std::size_t k, const Diagram& replacement) const {
  const auto& target = layers_.at(k);
  if (replacement.dom() != target.box.dom() ||
      replacement.cod() != target.box.cod()) {
    throw TypeCheckError("replacement for layer " + std::to_string(k) +
                         " is not parallel to " + target.box.name());
  }
  std::vector<Layer> layers(layers_.begin(),
                            layers_.begin() + static_cast<std::ptrdiff_t>(k));
  for (const auto& l : replacement.layers()) {
    layers.push_back(Layer{l.offset + target.offset, l.box});
  }
  layers.insert(layers.end(),
                layers_.begin() + static_cast<std::ptrdiff_t>(k + 1),
                layers_.end());
  return Diagram(dom_, cod_, std::move(layers));
}

std::size_t Diagram::depth() const {
  std::size_t d = 0;
  for (const auto& l : layers_) d = std::max(d, l.box.depth());
  return d;
}

std::size_t Diagram::num_params() const {
  std::size_t n = 0;
  for (const auto& l : layers_) n = std::max(n, l.box.num_params());
  return n;
}

// Formal sums ----------------------------------------------------------------

FormalSum::FormalSum(Diagram d) : FormalSum(Complex{1.0, 0.0}, std::move(d)) {}

FormalSum::FormalSum(Complex coeff, Diagram d) : dom_(d.dom()), cod_(d.cod()) {
  add_term(coeff, std::move(d));
}

void FormalSum::add_term(Complex coeff, Diagram d) {
  if (d.dom() != dom_ || d.cod() != cod_) {
    throw TypeCheckError("term " + d.dom().to_string() + " → " +
                         d.cod().to_string() + " is not parallel to sum " +
                         dom_.to_string() + " → " + cod_.to_string());
  }
  auto it = std::find_if(terms_.begin(), terms_.end(),
                         [&](const Term& t) { return t.diagram == d; });
  if (it != terms_.end()) {
    it->coeff += coeff;
    if (it->coeff == Complex{0.0, 0.0}) terms_.erase(it);
    return;
  }
  if (coeff == Complex{0.0, 0.0}) return;
  terms_.push_back(Term{coeff, std::move(d)});
}

std::size_t FormalSum::depth() const {
  std::size_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.diagram.depth());
  return d;
}

std::size_t FormalSum::num_params() const {
  std::size_t n = 0;
  for (const auto& t : terms_) n = std::max(n, t.diagram.num_params());
  return n;
}

bool operator==(const FormalSum& a, const FormalSum& b) {
  if (a.dom_ != b.dom_ || a.cod_ != b.cod_ || a.size() != b.size()) return false;
  // Terms are merged, so each diagram occurs at most once on either side.
  return std::all_of(a.terms_.begin(), a.terms_.end(), [&](const Term& t) {
    return std::find(b.terms_.begin(), b.terms_.end(), t) != b.terms_.end();
  });
}

FormalSum compose(const FormalSum& f, const FormalSum& g) {
  if (f.cod() != g.dom()) {
    throw TypeCheckError("cannot compose sums: codomain " + f.cod().to_string() +
                         " vs domain " + g.dom().to_string());
  }
  FormalSum out(f.dom(), g.cod());
  for (const auto& a : f.terms()) {
    for (const auto& b : g.terms()) {
      out.add_term(a.coeff * b.coeff, a.diagram.then(b.diagram));
    }
  }
  return out;
}

FormalSum tensor(const FormalSum& f, const FormalSum& g) {
  FormalSum out(f.dom() + g.dom(), f.cod() + g.cod());
  for (const auto& a : f.terms()) {
    for (const auto& b : g.terms()) {
      out.add_term(a.coeff * b.coeff, a.diagram.tensor(b.diagram));
    }
  }
  return out;
}

FormalSum sum_add(const FormalSum& f, const FormalSum& g) {
  if (f.dom() != g.dom() || f.cod() != g.cod()) {
    throw TypeCheckError("cannot add sums of types " + f.dom().to_string() +
                         " → " + f.cod().to_string() + " and " +
                         g.dom().to_string() + " → " + g.cod().to_string());
  }
  FormalSum out = f;
  for (const auto& t : g.terms()) out.add_term(t.coeff, t.diagram);
  return out;
}

FormalSum sum_scale(Complex c, const FormalSum& f) {
  FormalSum out(f.dom(), f.cod());
  for (const auto& t : f.terms()) out.add_term(c * t.coeff, t.diagram);
  return out;
}

}  // namespace diagdiff

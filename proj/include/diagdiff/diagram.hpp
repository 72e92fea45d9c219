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

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "diagdiff/errors.hpp"
#include "diagdiff/phase.hpp"
#include "diagdiff/polynomial.hpp"
#include "diagdiff/rigs.hpp"

namespace diagdiff {

/// Generating objects with a built-in interpretation.
inline constexpr const char* kQubitWire = "x";      // pure qubit, dimension 2
inline constexpr const char* kBitWire = "c";        // classical bit, dimension 2
inline constexpr const char* kCqQubitWire = "q";    // doubled qubit, dimension 4

/// Dimension of a generating object, if it has one.
std::optional<std::size_t> wire_dim(const std::string& object);

/// A type: an ordered list of generating objects. Tensor is concatenation.
class Ty {
 public:
  Ty() = default;
  Ty(std::initializer_list<std::string> objects) : objects_(objects) {}
  explicit Ty(std::vector<std::string> objects) : objects_(std::move(objects)) {}

  static Ty repeat(const std::string& object, std::size_t n) {
    return Ty(std::vector<std::string>(n, object));
  }

  const std::vector<std::string>& objects() const { return objects_; }
  std::size_t size() const { return objects_.size(); }
  bool empty() const { return objects_.empty(); }
  const std::string& operator[](std::size_t i) const { return objects_[i]; }

  Ty slice(std::size_t begin, std::size_t length) const;

  friend Ty operator+(Ty a, const Ty& b) {
    a.objects_.insert(a.objects_.end(), b.objects_.begin(), b.objects_.end());
    return a;
  }
  friend bool operator==(const Ty&, const Ty&) = default;

  std::string to_string() const;

 private:
  std::vector<std::string> objects_;
};

class Box;
class FormalSum;

/// A box given by a matrix of affine (real) entries in the layout of
/// Tensor; with no entries it is opaque and cannot be interpreted.
struct PlainBox {
  std::vector<PhaseExpr> entries;
  friend bool operator==(const PlainBox&, const PlainBox&) = default;
};

/// Z^{m,n}(α) with interpretation e^{-iα/2}|0..0⟩⟨0..0| + e^{iα/2}|1..1⟩⟨1..1|.
struct ZSpiderBox {
  std::size_t legs_in = 0;
  std::size_t legs_out = 0;
  PhaseExpr phase;
  friend bool operator==(const ZSpiderBox&, const ZSpiderBox&) = default;
};

struct HadamardBox {
  friend bool operator==(const HadamardBox&, const HadamardBox&) = default;
};

struct SwapBox {
  friend bool operator==(const SwapBox&, const SwapBox&) = default;
};

/// R_Z^{m,n}(a) with interpretation |0..0⟩⟨0..0| + a|1..1⟩⟨1..1|.
struct GreenBox {
  std::size_t legs_in = 0;
  std::size_t legs_out = 0;
  Polynomial label;
  friend bool operator==(const GreenBox&, const GreenBox&) = default;
};

struct ScalarBox {
  Complex value;
  friend bool operator==(const ScalarBox&, const ScalarBox&) = default;
};

struct MeasureBox {
  friend bool operator==(const MeasureBox&, const MeasureBox&) = default;
};

struct EncodeBox {
  friend bool operator==(const EncodeBox&, const EncodeBox&) = default;
};

/// conj(f) ⊗ f for a pure box f on qubit wires.
struct DoubledBox {
  std::shared_ptr<const Box> inner;
  friend bool operator==(const DoubledBox& a, const DoubledBox& b);
};

/// β^c(d): a formal sum wrapped in a coloured bubble.
struct BubbleBox {
  std::string colour;
  std::shared_ptr<const FormalSum> inner;
  friend bool operator==(const BubbleBox& a, const BubbleBox& b);
};

/// J_c(⟦inner⟧)·⟦tangent⟧ for a matrix-level colour c: the chain rule
/// for colours that are not applied pointwise.
struct BubbleJvpBox {
  std::string colour;
  std::shared_ptr<const FormalSum> inner;
  std::shared_ptr<const FormalSum> tangent;
  friend bool operator==(const BubbleJvpBox& a, const BubbleJvpBox& b);
};

using Payload =
    std::variant<PlainBox, ZSpiderBox, HadamardBox, SwapBox, GreenBox,
                 ScalarBox, MeasureBox, EncodeBox, DoubledBox, BubbleBox,
                 BubbleJvpBox>;

/// A generating box: name, type and payload. Construct through the
/// factories, which enforce the payload's arity constraints.
class Box {
 public:
  static Box plain(std::string name, Ty dom, Ty cod,
                   std::vector<PhaseExpr> entries = {});
  static Box zspider(std::size_t m, std::size_t n, PhaseExpr phase,
                     const std::string& wire = kQubitWire);
  static Box hadamard(const std::string& wire = kQubitWire);
  static Box swap(const std::string& a = kQubitWire,
                  const std::string& b = kQubitWire);
  static Box green(std::size_t m, std::size_t n, Polynomial label,
                   const std::string& wire = kQubitWire);
  static Box scalar(Complex value);
  static Box measure();
  static Box encode();
  static Box doubled(const Box& inner);
  static Box bubble(std::string colour, Ty dom, Ty cod, FormalSum inner);
  static Box bubble_jvp(std::string colour, Ty dom, Ty cod, FormalSum inner,
                        FormalSum tangent);

  const std::string& name() const { return name_; }
  const Ty& dom() const { return dom_; }
  const Ty& cod() const { return cod_; }
  const Payload& payload() const { return payload_; }

  /// The payload kind as used in the JSON format ("zspider", "h", ...).
  std::string kind() const;

  template <class P>
  const P* as() const {
    return std::get_if<P>(&payload_);
  }

  /// Bubble nesting depth (0 for boxes without bubbles).
  std::size_t depth() const;
  std::size_t num_params() const;

  friend bool operator==(const Box&, const Box&) = default;

 private:
  Box(std::string name, Ty dom, Ty cod, Payload payload)
      : name_(std::move(name)),
        dom_(std::move(dom)),
        cod_(std::move(cod)),
        payload_(std::move(payload)) {}

  std::string name_;
  Ty dom_;
  Ty cod_;
  Payload payload_;
};

struct Layer {
  std::size_t offset = 0;
  Box box;
  friend bool operator==(const Layer&, const Layer&) = default;
};

/**
 * A string diagram as a list of layers, one box per layer. Layer k acts on
 * the wires [offset, offset + |dom|) of the wires produced so far.
 */
class Diagram {
 public:
  /// Type-checks every layer; throws TypeCheckError on mismatch.
  Diagram(Ty dom, Ty cod, std::vector<Layer> layers);

  static Diagram id(Ty type) { return Diagram(type, type, {}); }
  static Diagram from_box(Box box);

  const Ty& dom() const { return dom_; }
  const Ty& cod() const { return cod_; }
  const std::vector<Layer>& layers() const { return layers_; }
  std::size_t size() const { return layers_.size(); }

  /// this ⨾ other.
  Diagram then(const Diagram& other) const;
  /// this ⊗ other: this's layers first, then other's shifted right.
  Diagram tensor(const Diagram& other) const;
  /// Layers of `this` with layer k replaced by `replacement`, whiskered by
  /// the identity on the surrounding wires.
  Diagram replace_layer(std::size_t k, const Diagram& replacement) const;

  std::size_t depth() const;
  std::size_t num_params() const;

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  Ty dom_;
  Ty cod_;
  std::vector<Layer> layers_;
};

struct Term {
  Complex coeff;
  Diagram diagram;
  friend bool operator==(const Term&, const Term&) = default;
};

/**
 * A complex-weighted sum of parallel diagrams. Structurally equal terms are
 * merged by adding their coefficients; terms whose coefficient becomes zero
 * are dropped, so the empty sum is the zero morphism.
 */
class FormalSum {
 public:
  FormalSum(Ty dom, Ty cod) : dom_(std::move(dom)), cod_(std::move(cod)) {}
  explicit FormalSum(Diagram d);
  FormalSum(Complex coeff, Diagram d);

  static FormalSum zero(Ty dom, Ty cod) { return {std::move(dom), std::move(cod)}; }

  const Ty& dom() const { return dom_; }
  const Ty& cod() const { return cod_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Adds coeff·d; throws TypeCheckError if d is not parallel to the sum.
  void add_term(Complex coeff, Diagram d);

  std::size_t depth() const;
  std::size_t num_params() const;

  /// Equality as multisets of weighted terms.
  friend bool operator==(const FormalSum& a, const FormalSum& b);

 private:
  Ty dom_;
  Ty cod_;
  std::vector<Term> terms_;
};

/// Bilinear composition of sums.
FormalSum compose(const FormalSum& f, const FormalSum& g);
/// Bilinear tensor of sums.
FormalSum tensor(const FormalSum& f, const FormalSum& g);
FormalSum sum_add(const FormalSum& f, const FormalSum& g);
FormalSum sum_scale(Complex c, const FormalSum& f);

inline FormalSum operator+(const FormalSum& f, const FormalSum& g) {
  return sum_add(f, g);
}
inline FormalSum operator*(Complex c, const FormalSum& f) {
  return sum_scale(c, f);
}

}  // namespace diagdiff

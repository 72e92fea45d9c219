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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "diagdiff/errors.hpp"
#include "diagdiff/rigs.hpp"

namespace diagdiff {

using Dims = std::vector<std::size_t>;

inline std::size_t dims_product(const Dims& dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1},
                         std::multiplies<>());
}

std::string dims_to_string(const Dims& dims);

/**
 * Dense matrix over a rig between products of dimensions.
 *
 * Layout is fixed: data[row * dom_size + col] where `row` is the flattened
 * codomain index and `col` the flattened domain index; multi-indices are
 * flattened row-major (first axis most significant). A tensor dom → cod
 * therefore acts on column vectors, and composition f ⨾ g is the matrix
 * product G·F.
 */
template <Rig T>
class Tensor {
 public:
  Tensor() : data_{RigTraits<T>::zero()} {}

  Tensor(Dims dom_dims, Dims cod_dims, std::vector<T> data)
      : dom_dims_(std::move(dom_dims)),
        cod_dims_(std::move(cod_dims)),
        data_(std::move(data)) {
    for (auto d : dom_dims_) check_dim(d);
    for (auto d : cod_dims_) check_dim(d);
    if (data_.size() != dom_size() * cod_size()) {
      throw DimensionError("tensor " + dims_to_string(dom_dims_) + " → " +
                           dims_to_string(cod_dims_) + " needs " +
                           std::to_string(dom_size() * cod_size()) +
                           " entries, got " + std::to_string(data_.size()));
    }
  }

  static Tensor zeros(Dims dom_dims, Dims cod_dims) {
    const auto n = dims_product(dom_dims) * dims_product(cod_dims);
    return Tensor(std::move(dom_dims), std::move(cod_dims),
                  std::vector<T>(n, RigTraits<T>::zero()));
  }

  static Tensor identity(const Dims& dims) {
    auto out = zeros(dims, dims);
    for (std::size_t i = 0; i < out.dom_size(); ++i) out.at(i, i) = RigTraits<T>::one();
    return out;
  }

  static Tensor scalar(T value) { return Tensor({}, {}, {std::move(value)}); }

  const Dims& dom_dims() const { return dom_dims_; }
  const Dims& cod_dims() const { return cod_dims_; }
  std::size_t dom_size() const { return dims_product(dom_dims_); }
  std::size_t cod_size() const { return dims_product(cod_dims_); }
  const std::vector<T>& data() const { return data_; }
  std::vector<T>& data() { return data_; }

  const T& at(std::size_t row, std::size_t col) const {
    return data_[row * dom_size() + col];
  }
  T& at(std::size_t row, std::size_t col) { return data_[row * dom_size() + col]; }

  friend bool operator==(const Tensor&, const Tensor&) = default;

 private:
  static void check_dim(std::size_t d) {
    if (d == 0) throw DimensionError("tensor dimensions must be at least 1");
  }

  Dims dom_dims_;
  Dims cod_dims_;
  std::vector<T> data_;
};

/// f ⨾ g: contraction of f's codomain with g's domain.
template <Rig T>
Tensor<T> mat_compose(const Tensor<T>& f, const Tensor<T>& g) {
  if (f.cod_dims() != g.dom_dims()) {
    throw DimensionError("cannot compose: codomain " +
                         dims_to_string(f.cod_dims()) + " vs domain " +
                         dims_to_string(g.dom_dims()));
  }
  auto out = Tensor<T>::zeros(f.dom_dims(), g.cod_dims());
  const std::size_t n = f.dom_size(), k = f.cod_size(), m = g.cod_size();
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t j = 0; j < k; ++j) {
      const T& gv = g.at(r, j);
      for (std::size_t c = 0; c < n; ++c) {
        out.at(r, c) = out.at(r, c) + gv * f.at(j, c);
      }
    }
  }
  return out;
}

/// Kronecker product, f-major on both sides.
template <Rig T>
Tensor<T> kron(const Tensor<T>& f, const Tensor<T>& g) {
  Dims dom = f.dom_dims();
  dom.insert(dom.end(), g.dom_dims().begin(), g.dom_dims().end());
  Dims cod = f.cod_dims();
  cod.insert(cod.end(), g.cod_dims().begin(), g.cod_dims().end());
  auto out = Tensor<T>::zeros(std::move(dom), std::move(cod));
  const std::size_t gd = g.dom_size(), gc = g.cod_size();
  for (std::size_t fr = 0; fr < f.cod_size(); ++fr) {
    for (std::size_t fc = 0; fc < f.dom_size(); ++fc) {
      const T& fv = f.at(fr, fc);
      for (std::size_t gr = 0; gr < gc; ++gr) {
        for (std::size_t gcol = 0; gcol < gd; ++gcol) {
          out.at(fr * gc + gr, fc * gd + gcol) = fv * g.at(gr, gcol);
        }
      }
    }
  }
  return out;
}

enum class EntrywiseOp { add, mul };

template <Rig T>
Tensor<T> entrywise(const Tensor<T>& f, const Tensor<T>& g, EntrywiseOp op) {
  if (f.dom_dims() != g.dom_dims() || f.cod_dims() != g.cod_dims()) {
    throw DimensionError("entrywise operation on tensors of different shapes");
  }
  auto out = f;
  for (std::size_t i = 0; i < out.data().size(); ++i) {
    out.data()[i] = op == EntrywiseOp::add ? f.data()[i] + g.data()[i]
                                           : f.data()[i] * g.data()[i];
  }
  return out;
}

template <Rig T>
Tensor<T> operator+(const Tensor<T>& f, const Tensor<T>& g) {
  return entrywise(f, g, EntrywiseOp::add);
}

template <Rig T>
Tensor<T> scale(const T& s, Tensor<T> f) {
  for (auto& v : f.data()) v = s * v;
  return f;
}

/// Entrywise conjugate; conj(f ⊗ g) = conj(f) ⊗ conj(g).
template <ConjugateRig T>
Tensor<T> conj(Tensor<T> f) {
  for (auto& v : f.data()) v = RigTraits<T>::conj(v);
  return f;
}

/// Conjugate transpose.
template <ConjugateRig T>
Tensor<T> dagger(const Tensor<T>& f) {
  auto out = Tensor<T>::zeros(f.cod_dims(), f.dom_dims());
  for (std::size_t r = 0; r < f.cod_size(); ++r) {
    for (std::size_t c = 0; c < f.dom_size(); ++c) {
      out.at(c, r) = RigTraits<T>::conj(f.at(r, c));
    }
  }
  return out;
}

/**
 * Applies `box` to the codomain axes [offset, offset + box.dom_dims().size())
 * of `state`, leaving the other axes untouched. Equivalent to
 * state ⨾ (id ⊗ box ⊗ id) without materialising the identities.
 */
template <Rig T>
Tensor<T> apply_at(const Tensor<T>& state, const Tensor<T>& box,
                   std::size_t offset) {
  const auto& wires = state.cod_dims();
  const auto width = box.dom_dims().size();
  if (offset + width > wires.size() ||
      !std::equal(box.dom_dims().begin(), box.dom_dims().end(),
                  wires.begin() + static_cast<std::ptrdiff_t>(offset))) {
    throw DimensionError("box domain " + dims_to_string(box.dom_dims()) +
                         " does not match wires " + dims_to_string(wires) +
                         " at offset " + std::to_string(offset));
  }
  Dims left(wires.begin(), wires.begin() + static_cast<std::ptrdiff_t>(offset));
  Dims right(wires.begin() + static_cast<std::ptrdiff_t>(offset + width),
             wires.end());
  Dims cod = left;
  cod.insert(cod.end(), box.cod_dims().begin(), box.cod_dims().end());
  cod.insert(cod.end(), right.begin(), right.end());

  const std::size_t nl = dims_product(left), nr = dims_product(right);
  const std::size_t ni = box.dom_size(), no = box.cod_size();
  const std::size_t nd = state.dom_size();
  auto out = Tensor<T>::zeros(state.dom_dims(), std::move(cod));
  for (std::size_t l = 0; l < nl; ++l) {
    for (std::size_t o = 0; o < no; ++o) {
      for (std::size_t i = 0; i < ni; ++i) {
        const T& b = box.at(o, i);
        if (b == RigTraits<T>::zero()) continue;
        for (std::size_t r = 0; r < nr; ++r) {
          const std::size_t src = (l * ni + i) * nr + r;
          const std::size_t dst = (l * no + o) * nr + r;
          for (std::size_t d = 0; d < nd; ++d) {
            out.at(dst, d) = out.at(dst, d) + b * state.at(src, d);
          }
        }
      }
    }
  }
  return out;
}

/// Reinterprets the axes without moving data; sizes must agree.
template <Rig T>
Tensor<T> reshape(Tensor<T> f, Dims dom_dims, Dims cod_dims) {
  if (dims_product(dom_dims) != f.dom_size() ||
      dims_product(cod_dims) != f.cod_size()) {
    throw DimensionError("reshape changes tensor size");
  }
  return Tensor<T>(std::move(dom_dims), std::move(cod_dims),
                   std::move(f.data()));
}

namespace detail {

/// Flat-index map for an axis permutation: new axis k is old axis perm[k].
std::vector<std::size_t> permutation_map(const Dims& dims,
                                         const std::vector<std::size_t>& perm);

}  // namespace detail

/// Permutes domain and codomain axes independently.
template <Rig T>
Tensor<T> permute_axes(const Tensor<T>& f, const std::vector<std::size_t>& dom_perm,
                       const std::vector<std::size_t>& cod_perm) {
  const auto dmap = detail::permutation_map(f.dom_dims(), dom_perm);
  const auto cmap = detail::permutation_map(f.cod_dims(), cod_perm);
  Dims dom(dom_perm.size()), cod(cod_perm.size());
  for (std::size_t k = 0; k < dom_perm.size(); ++k) dom[k] = f.dom_dims()[dom_perm[k]];
  for (std::size_t k = 0; k < cod_perm.size(); ++k) cod[k] = f.cod_dims()[cod_perm[k]];
  auto out = Tensor<T>::zeros(std::move(dom), std::move(cod));
  for (std::size_t r = 0; r < cmap.size(); ++r) {
    for (std::size_t c = 0; c < dmap.size(); ++c) {
      out.at(r, c) = f.at(cmap[r], dmap[c]);
    }
  }
  return out;
}

// Complex tensors ------------------------------------------------------------

using ComplexTensor = Tensor<Complex>;
using DualTensor = Tensor<DualComplex>;

/// Max-norm distance between two tensors of identical shape.
double max_abs_diff(const ComplexTensor& f, const ComplexTensor& g);
double max_abs(const ComplexTensor& f);

ComplexTensor real_part(const DualTensor& f);
ComplexTensor eps_part(const DualTensor& f);
DualTensor make_dual(const ComplexTensor& re, const ComplexTensor& eps);

/// exp(i·t·H) for square H by scaling and squaring with a Taylor kernel.
ComplexTensor matrix_exp(const ComplexTensor& h, double t);

/// exp(A) for square A (no implicit factor of i).
ComplexTensor matrix_exp_raw(const ComplexTensor& a);

}  // namespace diagdiff

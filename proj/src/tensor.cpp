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

#include "diagdiff/tensor.hpp"

#include <sstream>

namespace diagdiff {

std::string dims_to_string(const Dims& dims) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < dims.size(); ++i) os << (i ? "," : "") << dims[i];
  os << "]";
  return os.str();
}

namespace detail {

std::vector<std::size_t> permutation_map(const Dims& dims,
                                         const std::vector<std::size_t>& perm) {
  const std::size_t n = dims.size();
  if (perm.size() != n) throw DimensionError("axis permutation has wrong length");
  std::vector<bool> seen(n, false);
  for (auto p : perm) {
    if (p >= n || seen[p]) throw DimensionError("invalid axis permutation");
    seen[p] = true;
  }
  // Strides of the old layout.
  std::vector<std::size_t> stride(n, 1);
  for (std::size_t k = n; k-- > 1;) stride[k - 1] = stride[k] * dims[k];
  Dims new_dims(n);
  for (std::size_t k = 0; k < n; ++k) new_dims[k] = dims[perm[k]];

  const std::size_t total = dims_product(dims);
  std::vector<std::size_t> map(total);
  std::vector<std::size_t> idx(n, 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t old_flat = 0;
    for (std::size_t k = 0; k < n; ++k) old_flat += idx[k] * stride[perm[k]];
    map[flat] = old_flat;
    for (std::size_t k = n; k-- > 0;) {
      if (++idx[k] < new_dims[k]) break;
      idx[k] = 0;
    }
  }
  return map;
}

}  // namespace detail

double max_abs_diff(const ComplexTensor& f, const ComplexTensor& g) {
  if (f.dom_dims() != g.dom_dims() || f.cod_dims() != g.cod_dims()) {
    throw DimensionError("cannot compare tensors " +
                         dims_to_string(f.dom_dims()) + "→" +
                         dims_to_string(f.cod_dims()) + " and " +
                         dims_to_string(g.dom_dims()) + "→" +
                         dims_to_string(g.cod_dims()));
  }
  double m = 0.0;
  for (std::size_t i = 0; i < f.data().size(); ++i) {
    m = std::max(m, std::abs(f.data()[i] - g.data()[i]));
  }
  return m;
}

double max_abs(const ComplexTensor& f) {
  double m = 0.0;
  for (const auto& v : f.data()) m = std::max(m, std::abs(v));
  return m;
}

ComplexTensor real_part(const DualTensor& f) {
  std::vector<Complex> data;
  data.reserve(f.data().size());
  for (const auto& v : f.data()) data.push_back(v.re);
  return {f.dom_dims(), f.cod_dims(), std::move(data)};
}

ComplexTensor eps_part(const DualTensor& f) {
  std::vector<Complex> data;
  data.reserve(f.data().size());
  for (const auto& v : f.data()) data.push_back(v.eps);
  return {f.dom_dims(), f.cod_dims(), std::move(data)};
}

DualTensor make_dual(const ComplexTensor& re, const ComplexTensor& eps) {
  if (re.dom_dims() != eps.dom_dims() || re.cod_dims() != eps.cod_dims()) {
    throw DimensionError("dual parts have different shapes");
  }
  std::vector<DualComplex> data;
  data.reserve(re.data().size());
  for (std::size_t i = 0; i < re.data().size(); ++i) {
    data.emplace_back(re.data()[i], eps.data()[i]);
  }
  return {re.dom_dims(), re.cod_dims(), std::move(data)};
}

namespace {

double norm1(const ComplexTensor& a) {
  double best = 0.0;
  for (std::size_t c = 0; c < a.dom_size(); ++c) {
    double col = 0.0;
    for (std::size_t r = 0; r < a.cod_size(); ++r) col += std::abs(a.at(r, c));
    best = std::max(best, col);
  }
  return best;
}

}  // namespace

ComplexTensor matrix_exp_raw(const ComplexTensor& a) {
  if (a.dom_size() != a.cod_size()) {
    throw DimensionError("matrix exponential of a non-square tensor " +
                         dims_to_string(a.dom_dims()) + " → " +
                         dims_to_string(a.cod_dims()));
  }
  // Scale so that ‖A/2^s‖₁ ≤ 1/2, sum the Taylor series to machine
  // precision, then square s times.
  const double nrm = norm1(a);
  int squarings = 0;
  if (nrm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(nrm / 0.5)));
  const Complex factor{std::ldexp(1.0, -squarings), 0.0};
  const auto scaled = scale(factor, a);

  // Work on plain square matrices; mat_compose(x, y) = y·x.
  const Dims dims{a.dom_size()};
  const ComplexTensor m(dims, dims, scaled.data());
  auto result = ComplexTensor::identity(dims);
  auto term = ComplexTensor::identity(dims);
  for (int k = 1; k <= 40; ++k) {
    term = scale(Complex{1.0 / k, 0.0}, mat_compose(term, m));
    result = result + term;
    if (max_abs(term) < 1e-18) break;
  }
  for (int s = 0; s < squarings; ++s) result = mat_compose(result, result);
  return ComplexTensor(a.dom_dims(), a.cod_dims(), std::move(result.data()));
}

ComplexTensor matrix_exp(const ComplexTensor& h, double t) {
  return matrix_exp_raw(scale(Complex{0.0, t}, h));
}

}  // namespace diagdiff

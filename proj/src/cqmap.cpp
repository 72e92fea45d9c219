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

#include "diagdiff/cqmap.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace diagdiff::cq {

namespace {

Dims axes(CQDim d) { return {d.classical, d.quantum, d.quantum}; }

std::string to_string(CQDim d) {
  return "(" + std::to_string(d.classical) + "," + std::to_string(d.quantum) + ")";
}

}  // namespace

CQMap::CQMap(CQDim dom, CQDim cod, ComplexTensor tensor)
    : dom_(dom), cod_(cod), tensor_(reshape(std::move(tensor), axes(dom), axes(cod))) {}

CQMap CQMap::identity(CQDim dim) {
  return CQMap(dim, dim, ComplexTensor::identity(axes(dim)));
}

CQMap cq_compose(const CQMap& f, const CQMap& g) {
  if (f.cod() != g.dom()) {
    throw DimensionError("cannot compose cq-maps: codomain " + to_string(f.cod()) +
                         " vs domain " + to_string(g.dom()));
  }
  return CQMap(f.dom(), g.cod(), mat_compose(f.tensor(), g.tensor()));
}

CQMap cq_tensor(const CQMap& f, const CQMap& g) {
  const auto k = kron(f.tensor(), g.tensor());
  const std::vector<std::size_t> regroup{0, 3, 1, 4, 2, 5};
  return CQMap(f.dom() * g.dom(), f.cod() * g.cod(),
               permute_axes(k, regroup, regroup));
}

CQMap doubled(const ComplexTensor& f) {
  const auto b = f.dom_size(), d = f.cod_size();
  const ComplexTensor flat({b}, {d}, f.data());
  return CQMap({1, b}, {1, d}, kron(conj(flat), flat));
}

CQMap measure(std::size_t a) {
  if (a == 0) throw ValueError("measurement needs a positive dimension");
  auto t = ComplexTensor::zeros({1, a, a}, {a, 1, 1});
  for (std::size_t i = 0; i < a; ++i) t.at(i, i * a + i) = 1.0;
  return CQMap({1, a}, {a, 1}, std::move(t));
}

CQMap encode(std::size_t a) {
  if (a == 0) throw ValueError("encoding needs a positive dimension");
  auto t = ComplexTensor::zeros({a, 1, 1}, {1, a, a});
  for (std::size_t i = 0; i < a; ++i) t.at(i * a + i, i) = 1.0;
  return CQMap({a, 1}, {1, a}, std::move(t));
}

bool is_completely_positive(const CQMap& f, double tol) {
  // Embed classical indices as diagonal density-matrix indices and build the
  // Choi matrix C[(out_plain, in_plain), (out_conj, in_conj)].
  const auto [a, b] = f.dom();
  const auto [c, d] = f.cod();
  const std::size_t in = a * b, out = c * d, n = in * out;
  Eigen::MatrixXcd choi = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n),
                                                 static_cast<Eigen::Index>(n));
  const auto& t = f.tensor();
  for (std::size_t oc = 0; oc < c; ++oc) {
    for (std::size_t o1 = 0; o1 < d; ++o1) {
      for (std::size_t o2 = 0; o2 < d; ++o2) {
        const std::size_t row = (oc * d + o1) * d + o2;
        for (std::size_t ic = 0; ic < a; ++ic) {
          for (std::size_t i1 = 0; i1 < b; ++i1) {
            for (std::size_t i2 = 0; i2 < b; ++i2) {
              const std::size_t col = (ic * b + i1) * b + i2;
              const auto r = (oc * d + o2) * in + (ic * b + i2);
              const auto s = (oc * d + o1) * in + (ic * b + i1);
              choi(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(s)) =
                  t.at(row, col);
            }
          }
        }
      }
    }
  }
  if ((choi - choi.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(choi, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff() >= -tol;
}

CQMap from_wires(const Ty& dom, const Ty& cod, const ComplexTensor& t) {
  // Per-wire axes: "c" → one axis of size 2; "q" → split 4 into (conj, plain).
  auto plan = [](const Ty& ty, Dims& split, std::vector<std::size_t>& perm,
                 CQDim& dim) {
    std::vector<std::size_t> classical, conj_axes, plain_axes;
    for (const auto& o : ty.objects()) {
      if (o == kBitWire) {
        classical.push_back(split.size());
        split.push_back(2);
        dim.classical *= 2;
      } else if (o == kCqQubitWire) {
        conj_axes.push_back(split.size());
        split.push_back(2);
        plain_axes.push_back(split.size());
        split.push_back(2);
        dim.quantum *= 2;
      } else {
        throw TypeCheckError("wire '" + o + "' is not a cq wire");
      }
    }
    perm = classical;
    perm.insert(perm.end(), conj_axes.begin(), conj_axes.end());
    perm.insert(perm.end(), plain_axes.begin(), plain_axes.end());
  };
  Dims dom_split, cod_split;
  std::vector<std::size_t> dom_perm, cod_perm;
  CQDim dom_dim, cod_dim;
  plan(dom, dom_split, dom_perm, dom_dim);
  plan(cod, cod_split, cod_perm, cod_dim);
  auto split = reshape(t, dom_split, cod_split);
  return CQMap(dom_dim, cod_dim, permute_axes(split, dom_perm, cod_perm));
}

Diagram doubled_circuit(const Diagram& pure) {
  auto convert = [](const Ty& t) {
    for (const auto& o : t.objects()) {
      if (o != kQubitWire) {
        throw TypeCheckError("doubled_circuit needs a pure qubit diagram, got " +
                             t.to_string());
      }
    }
    return Ty::repeat(kCqQubitWire, t.size());
  };
  std::vector<Layer> layers;
  layers.reserve(pure.size());
  for (const auto& l : pure.layers()) {
    layers.push_back(Layer{l.offset, Box::doubled(l.box)});
  }
  return Diagram(convert(pure.dom()), convert(pure.cod()), std::move(layers));
}

Diagram prepare_zeros(std::size_t n) {
  const double s = 1.0 / std::numbers::sqrt2;
  std::vector<Layer> layers;
  for (std::size_t k = 0; k < n; ++k) {
    layers.push_back(Layer{k, Box::doubled(Box::zspider(0, 1, 0.0))});
    layers.push_back(Layer{k, Box::doubled(Box::hadamard())});
    layers.push_back(Layer{0, Box::doubled(Box::scalar(s))});
  }
  return Diagram(Ty{}, Ty::repeat(kCqQubitWire, n), std::move(layers));
}

Diagram measure_all(std::size_t n) {
  std::vector<Layer> layers;
  for (std::size_t k = 0; k < n; ++k) layers.push_back(Layer{k, Box::measure()});
  return Diagram(Ty::repeat(kCqQubitWire, n), Ty::repeat(kBitWire, n),
                 std::move(layers));
}

ShiftRule::ShiftRule(double r, double s) : r_(r), s_(s) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw ValueError("shift rule needs a positive eigenvalue magnitude");
  }
  const double expected = std::numbers::pi / (4.0 * r);
  if (std::abs(s - expected) > 1e-12 * std::max(1.0, expected)) {
    throw ValueError("shift s = " + std::to_string(s) +
                     " is inconsistent with r = " + std::to_string(r) +
                     " (expected π/(4r) = " + std::to_string(expected) + ")");
  }
}

FormalSum shift_rule_derivative(const Box& box, std::size_t i,
                                const ShiftRule& rule) {
  const auto* d = box.as<DoubledBox>();
  const Box& inner = d != nullptr ? *d->inner : box;
  const Box doubled_box = d != nullptr ? box : Box::doubled(box);
  FormalSum out(doubled_box.dom(), doubled_box.cod());
  const auto* spider = inner.as<ZSpiderBox>();
  if (spider == nullptr) {
    if (inner.num_params() > i) {
      bool depends = false;
      if (const auto* g = inner.as<GreenBox>()) depends = g->label.depends_on(i);
      if (const auto* p = inner.as<PlainBox>()) {
        for (const auto& e : p->entries) depends = depends || e.depends_on(i);
      }
      if (depends) {
        throw MissingRuleError("no parameter-shift recipe for doubled " +
                               inner.kind() + " boxes");
      }
    }
    return out;
  }
  const double coeff = spider->phase.partial(i);
  if (coeff == 0.0) return out;
  auto shifted = [&](double delta) {
    return Diagram::from_box(Box::doubled(Box::zspider(
        spider->legs_in, spider->legs_out, spider->phase.shifted(delta))));
  };
  out.add_term(coeff * rule.r(), shifted(rule.s()));
  out.add_term(-coeff * rule.r(), shifted(-rule.s()));
  return out;
}

}  // namespace diagdiff::cq

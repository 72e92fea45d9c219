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

#include "diagdiff/autodiff.hpp"

#include <algorithm>
#include <numbers>

#include "diagdiff/interpret.hpp"
#include "diagdiff/zx.hpp"

namespace diagdiff {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};

}  // namespace

std::string rule_name(const GradientRule& rule) {
  return std::visit(
      Overloaded{[](const SpiderRule&) { return std::string("spider"); },
                 [](const AlgebraicRule&) { return std::string("algebraic"); },
                 [](const ShiftRuleEntry&) { return std::string("shift"); },
                 [](const ZeroRule&) { return std::string("zero"); },
                 [](const EntriesRule&) { return std::string("entries"); },
                 [](const ChainRule&) { return std::string("chain"); },
                 [](const CustomRule&) { return std::string("custom"); }},
      rule);
}

GradientRuleSet GradientRuleSet::standard() {
  GradientRuleSet out;
  out.set("zspider", SpiderRule{})
      .set("green", AlgebraicRule{})
      .set("doubled", ShiftRuleEntry{})
      .set("plain", EntriesRule{})
      .set("bubble", ChainRule{});
  for (const char* kind : {"h", "swap", "scalar", "measure", "encode"}) {
    out.set(kind, ZeroRule{});
  }
  return out;
}

GradientRuleSet& GradientRuleSet::set(const std::string& kind, GradientRule rule) {
  rules_.insert_or_assign(kind, std::move(rule));
  return *this;
}

GradientRuleSet& GradientRuleSet::remove(const std::string& kind) {
  rules_.erase(kind);
  return *this;
}

const GradientRule* GradientRuleSet::find(const std::string& kind) const {
  const auto it = rules_.find(kind);
  return it == rules_.end() ? nullptr : &it->second;
}

// Derivatives ----------------------------------------------------------------

namespace {

[[noreturn]] void wrong_kind(const GradientRule& rule, const Box& box) {
  throw ValueError("the " + rule_name(rule) + " rule does not apply to " +
                   box.kind() + " boxes");
}

FormalSum entries_derivative(const Box& box, std::size_t i) {
  const auto* p = box.as<PlainBox>();
  FormalSum out(box.dom(), box.cod());
  if (p == nullptr) return out;
  std::vector<PhaseExpr> d;
  d.reserve(p->entries.size());
  bool any = false;
  for (const auto& e : p->entries) {
    const double c = e.partial(i);
    any = any || c != 0.0;
    d.emplace_back(c);
  }
  if (!any) return out;
  out.add_term(1.0, Diagram::from_box(Box::plain("d" + box.name() + "/d" +
                                                      std::to_string(i),
                                                  box.dom(), box.cod(), std::move(d))));
  return out;
}

}  // namespace

FormalSum box_derivative(const Box& box, std::size_t i, const GradientRuleSet& rules) {
  const auto* rule = rules.find(box.kind());
  if (rule == nullptr) {
    throw MissingRuleError("no gradient rule for " + box.kind() + " box '" +
                           box.name() + "'");
  }
  return std::visit(
      Overloaded{
          [&](const SpiderRule& r) {
            if (box.as<ZSpiderBox>() == nullptr) wrong_kind(*rule, box);
            return sum_scale(2.0 * r.r, zx::spider_derivative(box, i));
          },
          [&](const AlgebraicRule&) {
            const auto* g = box.as<GreenBox>();
            if (g == nullptr) wrong_kind(*rule, box);
            if (!g->label.depends_on(i)) return FormalSum(box.dom(), box.cod());
            return zx::algebraic_derivative(box, i);
          },
          [&](const ShiftRuleEntry& r) {
            if (box.as<DoubledBox>() == nullptr) wrong_kind(*rule, box);
            return cq::shift_rule_derivative(box, i, r.rule);
          },
          [&](const ZeroRule&) { return FormalSum(box.dom(), box.cod()); },
          [&](const EntriesRule&) {
            if (box.as<PlainBox>() == nullptr) wrong_kind(*rule, box);
            return entries_derivative(box, i);
          },
          [&](const ChainRule&) { return bubble_derivative(box, i, rules); },
          [&](const CustomRule& r) {
            if (!r.derivative) {
              throw MissingRuleError("custom rule for " + box.kind() + " is empty");
            }
            return r.derivative(box, i);
          }},
      *rule);
}

FormalSum diagram_derivative(const FormalSum& s, std::size_t i,
                             const GradientRuleSet& rules) {
  FormalSum out(s.dom(), s.cod());
  for (const auto& term : s.terms()) {
    const auto& layers = term.diagram.layers();
    for (std::size_t k = 0; k < layers.size(); ++k) {
      const auto db = box_derivative(layers[k].box, i, rules);
      for (const auto& t : db.terms()) {
        out.add_term(term.coeff * t.coeff, term.diagram.replace_layer(k, t.diagram));
      }
    }
  }
  return out;
}

FormalSum diagram_derivative(const Diagram& d, std::size_t i,
                             const GradientRuleSet& rules) {
  return diagram_derivative(FormalSum(d), i, rules);
}

// Entrywise products ---------------------------------------------------------

namespace {

Box copy_box(const std::string& wire, bool merge) {
  const std::size_t m = merge ? 2 : 1, n = merge ? 1 : 2;
  if (wire == kQubitWire || wire == kBitWire) return Box::zspider(m, n, 0.0, wire);
  if (wire == kCqQubitWire) return Box::doubled(Box::zspider(m, n, 0.0));
  throw TypeCheckError("wire '" + wire + "' has no spiders to copy or merge with");
}

}  // namespace

Diagram permutation_diagram(const Ty& types, const std::vector<std::size_t>& perm) {
  const std::size_t n = types.size();
  if (perm.size() != n) throw ValueError("permutation has the wrong length");
  std::vector<std::size_t> rank(n, n);
  for (std::size_t p = 0; p < n; ++p) {
    if (perm[p] >= n || rank[perm[p]] != n) throw ValueError("not a permutation");
    rank[perm[p]] = p;
  }
  std::vector<std::size_t> cur(n);
  for (std::size_t k = 0; k < n; ++k) cur[k] = k;
  std::vector<Layer> layers;
  for (std::size_t pass = 0; pass < n; ++pass) {
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (rank[cur[k]] > rank[cur[k + 1]]) {
        layers.push_back(Layer{k, Box::swap(types[cur[k]], types[cur[k + 1]])});
        std::swap(cur[k], cur[k + 1]);
      }
    }
  }
  std::vector<std::string> out;
  out.reserve(n);
  for (auto p : perm) out.push_back(types[p]);
  return Diagram(types, Ty(std::move(out)), std::move(layers));
}

FormalSum hadamard_product_diagram(const FormalSum& f, const FormalSum& g) {
  if (f.dom() != g.dom() || f.cod() != g.cod()) {
    throw TypeCheckError("entrywise product of non-parallel sums: " +
                         f.dom().to_string() + " → " + f.cod().to_string() + " vs " +
                         g.dom().to_string() + " → " + g.cod().to_string());
  }
  const Ty& dom = f.dom();
  const Ty& cod = f.cod();
  const std::size_t n = dom.size(), m = cod.size();

  std::vector<Layer> copies;
  std::vector<std::string> doubled_dom;
  for (std::size_t k = 0; k < n; ++k) {
    copies.push_back(Layer{2 * k, copy_box(dom[k], false)});
    doubled_dom.push_back(dom[k]);
    doubled_dom.push_back(dom[k]);
  }
  std::vector<std::size_t> split;
  for (std::size_t k = 0; k < n; ++k) split.push_back(2 * k);
  for (std::size_t k = 0; k < n; ++k) split.push_back(2 * k + 1);
  const auto pre = Diagram(dom, Ty(doubled_dom), std::move(copies))
                       .then(permutation_diagram(Ty(doubled_dom), split));

  std::vector<Layer> merges;
  for (std::size_t k = 0; k < m; ++k) merges.push_back(Layer{k, copy_box(cod[k], true)});
  std::vector<std::size_t> zip;
  for (std::size_t k = 0; k < m; ++k) {
    zip.push_back(k);
    zip.push_back(m + k);
  }
  const auto post = permutation_diagram(cod + cod, zip);
  const auto merged = Diagram(post.cod(), cod, std::move(merges));

  FormalSum out(dom, cod);
  for (const auto& tf : f.terms()) {
    for (const auto& tg : g.terms()) {
      out.add_term(tf.coeff * tg.coeff,
                   pre.then(tf.diagram.tensor(tg.diagram)).then(post).then(merged));
    }
  }
  return out;
}

FormalSum bubble_derivative(const Box& bubble, std::size_t i,
                            const GradientRuleSet& rules) {
  const auto* b = bubble.as<BubbleBox>();
  if (b == nullptr) {
    throw ValueError("chain rule applies to bubbles, got " + bubble.kind());
  }
  const auto& colour = rules.colours().get(b->colour);
  const auto inner_derivative = diagram_derivative(*b->inner, i, rules);
  if (inner_derivative.is_zero()) return FormalSum(bubble.dom(), bubble.cod());
  if (colour.kind == ColourKind::matrix) {
    return FormalSum(Diagram::from_box(Box::bubble_jvp(
        colour.name, bubble.dom(), bubble.cod(), *b->inner, inner_derivative)));
  }
  if (colour.derivative_colour.empty()) {
    throw ColourError("colour '" + colour.name + "' has no derivative colour");
  }
  const FormalSum outer(bubble_wrap(rules.colours(), colour.derivative_colour, *b->inner));
  return hadamard_product_diagram(outer, inner_derivative);
}

// Oracles --------------------------------------------------------------------

DualResult dual_eval(const FormalSum& s, std::size_t i, std::span<const double> theta,
                     const ColourRegistry& colours) {
  const auto seeded = seed_dual(theta, i);
  const auto t = interpret_in<DualComplex>(s, seeded, colours);
  return {real_part(t), eps_part(t)};
}

ComplexTensor finite_difference(const FormalSum& s, std::size_t i,
                                std::span<const double> theta, double h,
                                const ColourRegistry& colours) {
  if (!(h > 0.0)) throw ValueError("finite-difference step must be positive");
  std::vector<double> plus(theta.begin(), theta.end());
  if (plus.size() <= i) plus.resize(i + 1, 0.0);
  auto minus = plus;
  plus[i] += h;
  minus[i] -= h;
  const auto fp = interpret(s, plus, colours);
  const auto fm = interpret(s, minus, colours);
  auto out = fp;
  for (std::size_t k = 0; k < out.data().size(); ++k) {
    out.data()[k] = (fp.data()[k] - fm.data()[k]) / (2.0 * h);
  }
  return out;
}

std::vector<std::vector<double>> default_grid(std::size_t n, std::size_t points) {
  std::vector<std::vector<double>> grid(points, std::vector<double>(n));
  const double pi = std::numbers::pi;
  for (std::size_t k = 0; k < points; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      grid[k][j] = -pi + 2.0 * pi * (static_cast<double>(k) + 0.5) /
                             static_cast<double>(points) +
                   0.37 * static_cast<double>(j);
    }
  }
  return grid;
}

GradcheckReport gradcheck(const FormalSum& s,
                          const std::vector<std::vector<double>>& grid,
                          const GradientRuleSet& rules,
                          const GradcheckOptions& options) {
  GradcheckReport report;
  report.options = options;
  report.num_params = s.num_params();
  const auto& colours = rules.colours();
  for (std::size_t i = 0; i < report.num_params; ++i) {
    const auto ds = diagram_derivative(s, i, rules);
    for (std::size_t p = 0; p < grid.size(); ++p) {
      const auto& theta = grid[p];
      if (theta.size() < report.num_params) {
        throw ValueError("grid point " + std::to_string(p) + " has " +
                         std::to_string(theta.size()) + " parameters, need " +
                         std::to_string(report.num_params));
      }
      const auto diag = interpret(ds, theta, colours);
      const auto dual = dual_eval(s, i, theta, colours).gradient;
      const auto fd = finite_difference(s, i, theta, options.h, colours);
      GradcheckEntry e;
      e.point = p;
      e.theta = theta;
      e.param = i;
      e.exact_dev = max_abs_diff(diag, dual);
      e.fd_dev = std::max(max_abs_diff(diag, fd), max_abs_diff(dual, fd));
      e.pass = e.exact_dev <= options.exact_tol && e.fd_dev <= options.fd_tol;
      report.max_exact_dev = std::max(report.max_exact_dev, e.exact_dev);
      report.max_fd_dev = std::max(report.max_fd_dev, e.fd_dev);
      report.pass = report.pass && e.pass;
      report.entries.push_back(std::move(e));
    }
  }
  return report;
}

// Neural networks ------------------------------------------------------------

Box weight_box(const std::string& name, const Ty& dom, const Ty& cod,
               std::size_t first_param) {
  const auto n = dims_product(type_dims(dom)) * dims_product(type_dims(cod));
  std::vector<PhaseExpr> entries;
  entries.reserve(n);
  for (std::size_t k = 0; k < n; ++k) entries.push_back(PhaseExpr::parameter(first_param + k));
  return Box::plain(name, dom, cod, std::move(entries));
}

Diagram nn_layer(const FormalSum& input, const FormalSum& weights,
                 const FormalSum& bias, const std::string& colour,
                 const ColourRegistry& colours) {
  return bubble_wrap(colours, colour, compose(input, weights) + bias);
}

}  // namespace diagdiff

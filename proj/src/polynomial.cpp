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

#include "diagdiff/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace diagdiff {

namespace {

void trim(Polynomial::Exponents& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

}  // namespace

Polynomial::Polynomial(Complex constant) { add_monomial({}, constant); }

Polynomial Polynomial::variable(std::size_t index) {
  Polynomial p;
  Exponents e(index + 1, 0);
  e[index] = 1;
  p.add_monomial(std::move(e), 1.0);
  return p;
}

void Polynomial::add_monomial(Exponents exponents, Complex coeff) {
  trim(exponents);
  auto [it, inserted] = monomials_.try_emplace(std::move(exponents), coeff);
  if (!inserted) it->second += coeff;
  if (it->second == Complex{0.0, 0.0}) monomials_.erase(it);
}

bool Polynomial::is_constant() const {
  return std::all_of(monomials_.begin(), monomials_.end(),
                     [](const auto& kv) { return kv.first.empty(); });
}

Complex Polynomial::constant_term() const {
  auto it = monomials_.find({});
  return it == monomials_.end() ? Complex{} : it->second;
}

std::size_t Polynomial::num_params() const {
  std::size_t n = 0;
  for (const auto& kv : monomials_) n = std::max(n, kv.first.size());
  return n;
}

bool Polynomial::depends_on(std::size_t index) const {
  return std::any_of(monomials_.begin(), monomials_.end(), [&](const auto& kv) {
    return index < kv.first.size() && kv.first[index] > 0;
  });
}

Polynomial Polynomial::partial(std::size_t index) const {
  Polynomial out;
  for (const auto& [exps, coeff] : monomials_) {
    if (index >= exps.size() || exps[index] == 0) continue;
    Exponents e = exps;
    const double power = e[index];
    e[index] -= 1;
    out.add_monomial(std::move(e), coeff * power);
  }
  return out;
}

Complex Polynomial::eval(std::span<const double> theta) const {
  std::vector<Complex> values(theta.begin(), theta.end());
  return eval_in<Complex>(values);
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial out = a;
  for (const auto& [exps, coeff] : b.monomials_) out.add_monomial(exps, coeff);
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ea, ca] : a.monomials_) {
    for (const auto& [eb, cb] : b.monomials_) {
      Polynomial::Exponents e(std::max(ea.size(), eb.size()), 0);
      for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
      for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      out.add_monomial(std::move(e), ca * cb);
    }
  }
  return out;
}

Polynomial operator-(const Polynomial& a) {
  Polynomial out;
  for (const auto& [exps, coeff] : a.monomials_) out.add_monomial(exps, -coeff);
  return out;
}

std::string Polynomial::to_string() const {
  if (monomials_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [exps, coeff] : monomials_) {
    if (!first) os << " + ";
    first = false;
    os << coeff;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      os << "·θ" << i;
      if (exps[i] > 1) os << "^" << exps[i];
    }
  }
  return os.str();
}

}  // namespace diagdiff

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
#include <map>
#include <span>
#include <string>
#include <vector>

#include "diagdiff/errors.hpp"
#include "diagdiff/rigs.hpp"

namespace diagdiff {

/**
 * Multivariate polynomial with complex coefficients in the parameters θ.
 *
 * This is the label rig of the algebraic green boxes: a commutative ring
 * with one derivation ∂_i per parameter. Monomials are keyed by exponent
 * vectors without trailing zeros; zero coefficients are never stored.
 */
class Polynomial {
 public:
  using Exponents = std::vector<unsigned>;

  Polynomial() = default;
  Polynomial(Complex constant);  // NOLINT
  Polynomial(double constant) : Polynomial(Complex{constant, 0.0}) {}  // NOLINT

  /// The monomial θ[index].
  static Polynomial variable(std::size_t index);

  const std::map<Exponents, Complex>& monomials() const { return monomials_; }

  void add_monomial(Exponents exponents, Complex coeff);

  bool is_zero() const { return monomials_.empty(); }
  bool is_constant() const;
  /// Constant coefficient (the value at θ = 0).
  Complex constant_term() const;
  std::size_t num_params() const;
  bool depends_on(std::size_t index) const;

  Polynomial partial(std::size_t index) const;

  template <class T>
  T eval_in(std::span<const T> theta) const {
    if (num_params() > theta.size()) {
      throw InterpretError("polynomial label " + to_string() +
                           " needs " + std::to_string(num_params()) +
                           " parameters, got " + std::to_string(theta.size()));
    }
    T acc = T(Complex{0.0, 0.0});
    for (const auto& [exps, coeff] : monomials_) {
      T term = T(coeff);
      for (std::size_t i = 0; i < exps.size(); ++i) {
        for (unsigned k = 0; k < exps[i]; ++k) term = term * theta[i];
      }
      acc = acc + term;
    }
    return acc;
  }

  Complex eval(std::span<const double> theta) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + (-b);
  }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string to_string() const;

 private:
  std::map<Exponents, Complex> monomials_;
};

template <>
struct RigTraits<Polynomial> {
  static Polynomial zero() { return {}; }
  static Polynomial one() { return Polynomial(1.0); }
  static Polynomial neg(const Polynomial& a) { return -a; }
  static Polynomial partial(const Polynomial& a, std::size_t i) {
    return a.partial(i);
  }
};

}  // namespace diagdiff

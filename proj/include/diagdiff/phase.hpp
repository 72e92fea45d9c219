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
#include <optional>
#include <span>
#include <string>

#include "diagdiff/errors.hpp"
#include "diagdiff/rigs.hpp"

namespace diagdiff {

/**
 * An affine phase `constant + Σ coeffs[i]·θ[i]` over real parameters θ.
 *
 * Zero coefficients are never stored, so two expressions compare equal iff
 * they denote the same affine function with the same floating-point values.
 */
class PhaseExpr {
 public:
  PhaseExpr() = default;
  PhaseExpr(double constant) : constant_(constant) {}  // NOLINT
  PhaseExpr(double constant, std::map<std::size_t, double> coeffs);

  /// The expression `coeff·θ[index]`.
  static PhaseExpr parameter(std::size_t index, double coeff = 1.0);

  double constant() const { return constant_; }
  const std::map<std::size_t, double>& coeffs() const { return coeffs_; }

  /// Coefficient of θ[index]; zero when the parameter does not occur.
  double partial(std::size_t index) const;

  bool is_constant() const { return coeffs_.empty(); }
  bool depends_on(std::size_t index) const { return coeffs_.contains(index); }

  /// One past the largest parameter index, or 0 for constants.
  std::size_t num_params() const;

  double eval(std::span<const double> theta) const;

  /// Evaluation over any rig that embeds the reals (used with dual numbers
  /// to seed a parameter with ε).
  template <class T>
  T eval_in(std::span<const T> theta) const {
    check_range(theta.size());
    T acc = T(Complex{constant_, 0.0});
    for (const auto& [index, coeff] : coeffs_) {
      acc = acc + T(Complex{coeff, 0.0}) * theta[index];
    }
    return acc;
  }

  PhaseExpr shifted(double delta) const;
  PhaseExpr scaled(double factor) const;

  friend PhaseExpr operator+(const PhaseExpr& a, const PhaseExpr& b);
  friend bool operator==(const PhaseExpr&, const PhaseExpr&) = default;

  std::string to_string() const;

 private:
  void check_range(std::size_t n) const;

  double constant_ = 0.0;
  std::map<std::size_t, double> coeffs_;
};

/// phase_eval: constant + Σ coeffs[i]·θ[i].
inline double phase_eval(const PhaseExpr& e, std::span<const double> theta) {
  return e.eval(theta);
}

/// phase_partial: coefficient of θ[i].
inline double phase_partial(const PhaseExpr& e, std::size_t i) {
  return e.partial(i);
}

}  // namespace diagdiff

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

#include "diagdiff/phase.hpp"

#include <sstream>

namespace diagdiff {

PhaseExpr::PhaseExpr(double constant, std::map<std::size_t, double> coeffs)
    : constant_(constant), coeffs_(std::move(coeffs)) {
  std::erase_if(coeffs_, [](const auto& kv) { return kv.second == 0.0; });
}

PhaseExpr PhaseExpr::parameter(std::size_t index, double coeff) {
  return PhaseExpr(0.0, {{index, coeff}});
}

double PhaseExpr::partial(std::size_t index) const {
  auto it = coeffs_.find(index);
  return it == coeffs_.end() ? 0.0 : it->second;
}

std::size_t PhaseExpr::num_params() const {
  return coeffs_.empty() ? 0 : coeffs_.rbegin()->first + 1;
}

void PhaseExpr::check_range(std::size_t n) const {
  if (num_params() > n) {
    throw InterpretError("phase " + to_string() + " uses parameter " +
                         std::to_string(num_params() - 1) + " but only " +
                         std::to_string(n) + " parameter values were given");
  }
}

double PhaseExpr::eval(std::span<const double> theta) const {
  check_range(theta.size());
  double acc = constant_;
  for (const auto& [index, coeff] : coeffs_) acc += coeff * theta[index];
  return acc;
}

PhaseExpr PhaseExpr::shifted(double delta) const {
  return PhaseExpr(constant_ + delta, coeffs_);
}

PhaseExpr PhaseExpr::scaled(double factor) const {
  auto coeffs = coeffs_;
  for (auto& kv : coeffs) kv.second *= factor;
  return PhaseExpr(constant_ * factor, std::move(coeffs));
}

PhaseExpr operator+(const PhaseExpr& a, const PhaseExpr& b) {
  auto coeffs = a.coeffs_;
  for (const auto& [index, coeff] : b.coeffs_) coeffs[index] += coeff;
  return PhaseExpr(a.constant_ + b.constant_, std::move(coeffs));
}

std::string PhaseExpr::to_string() const {
  std::ostringstream os;
  os << constant_;
  for (const auto& [index, coeff] : coeffs_) {
    os << (coeff < 0 ? " - " : " + ") << std::abs(coeff) << "·θ" << index;
  }
  return os.str();
}

}  // namespace diagdiff

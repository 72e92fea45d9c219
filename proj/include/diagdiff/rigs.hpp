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

#include <complex>
#include <concepts>
#include <cstddef>
#include <ostream>

namespace diagdiff {

using Complex = std::complex<double>;

/**
 * Scalar structure of a commutative rig.
 *
 * Every specialisation provides `zero()` and `one()`; the element type
 * itself supplies `+` and `*`. Optional members advertise extra structure:
 * `conj(a)` for an involution, `neg(a)` for additive inverses and
 * `partial(a, i)` for a family of derivations.
 */
template <class T>
struct RigTraits;

template <class T>
concept Rig = requires(const T& a, const T& b) {
  { a + b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { RigTraits<T>::zero() } -> std::convertible_to<T>;
  { RigTraits<T>::one() } -> std::convertible_to<T>;
};

template <class T>
concept ConjugateRig = Rig<T> && requires(const T& a) {
  { RigTraits<T>::conj(a) } -> std::convertible_to<T>;
};

template <class T>
concept Ring = Rig<T> && requires(const T& a) {
  { RigTraits<T>::neg(a) } -> std::convertible_to<T>;
};

template <class T>
concept DifferentialRig = Rig<T> && requires(const T& a, std::size_t i) {
  { RigTraits<T>::partial(a, i) } -> std::convertible_to<T>;
};

template <>
struct RigTraits<double> {
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static double conj(double a) { return a; }
  static double neg(double a) { return -a; }
};

template <>
struct RigTraits<Complex> {
  static Complex zero() { return {0.0, 0.0}; }
  static Complex one() { return {1.0, 0.0}; }
  static Complex conj(const Complex& a) { return std::conj(a); }
  static Complex neg(const Complex& a) { return -a; }
};

// Dual numbers ---------------------------------------------------------------

/// A formal sum `re + eps·ε` with `ε² = 0`, over any commutative rig.
template <Rig S>
struct Dual {
  S re = RigTraits<S>::zero();
  S eps = RigTraits<S>::zero();

  Dual() = default;
  Dual(S r) : re(std::move(r)) {}  // NOLINT: implicit embedding s ↦ s + 0ε
  Dual(S r, S e) : re(std::move(r)), eps(std::move(e)) {}

  friend bool operator==(const Dual&, const Dual&) = default;
};

template <Rig S>
Dual<S> dual_add(const Dual<S>& a, const Dual<S>& b) {
  return {a.re + b.re, a.eps + b.eps};
}

template <Rig S>
Dual<S> dual_mul(const Dual<S>& a, const Dual<S>& b) {
  // ε² is never formed: only the two cross terms reach the ε component.
  return {a.re * b.re, a.re * b.eps + a.eps * b.re};
}

template <Rig S>
Dual<S> operator+(const Dual<S>& a, const Dual<S>& b) {
  return dual_add(a, b);
}

template <Rig S>
Dual<S> operator*(const Dual<S>& a, const Dual<S>& b) {
  return dual_mul(a, b);
}

template <Rig S>
  requires Ring<S>
Dual<S> operator-(const Dual<S>& a) {
  return {RigTraits<S>::neg(a.re), RigTraits<S>::neg(a.eps)};
}

template <Rig S>
  requires Ring<S>
Dual<S> operator-(const Dual<S>& a, const Dual<S>& b) {
  return a + (-b);
}

/// π0: projection on the real component (a rig homomorphism).
template <Rig S>
const S& real_part(const Dual<S>& a) {
  return a.re;
}

/// π1: projection on the ε component.
template <Rig S>
const S& eps_part(const Dual<S>& a) {
  return a.eps;
}

/// Extends a smooth `f` with known derivative `df` to dual numbers:
/// f(a + a'ε) = f(a) + a'·f'(a)ε.
template <Rig S, class F, class DF>
Dual<S> lift_smooth(F&& f, DF&& df, const Dual<S>& x) {
  return {f(x.re), x.eps * df(x.re)};
}

/// The embedding a ↦ a + (∂_i a)ε of a differential rig into its duals.
template <DifferentialRig S>
Dual<S> dual_embed(const S& a, std::size_t i) {
  return {a, RigTraits<S>::partial(a, i)};
}

template <Rig S>
struct RigTraits<Dual<S>> {
  static Dual<S> zero() { return {}; }
  static Dual<S> one() { return {RigTraits<S>::one(), RigTraits<S>::zero()}; }
  static Dual<S> conj(const Dual<S>& a)
    requires ConjugateRig<S>
  {
    return {RigTraits<S>::conj(a.re), RigTraits<S>::conj(a.eps)};
  }
  static Dual<S> neg(const Dual<S>& a)
    requires Ring<S>
  {
    return -a;
  }
};

using DualComplex = Dual<Complex>;

template <Rig S>
std::ostream& operator<<(std::ostream& os, const Dual<S>& a) {
  return os << a.re << " + " << a.eps << "ε";
}

// Two-element rigs -----------------------------------------------------------

/// The field with two elements: XOR as sum, AND as product.
struct F2 {
  bool value = false;
  friend bool operator==(F2, F2) = default;
};

inline F2 operator+(F2 a, F2 b) { return {a.value != b.value}; }
inline F2 operator*(F2 a, F2 b) { return {a.value && b.value}; }

template <>
struct RigTraits<F2> {
  static F2 zero() { return {false}; }
  static F2 one() { return {true}; }
  static F2 conj(F2 a) { return a; }
  static F2 neg(F2 a) { return a; }
};

/// The Boolean rig: OR as sum, AND as product. Not a ring.
struct Boolean {
  bool value = false;
  friend bool operator==(Boolean, Boolean) = default;
};

inline Boolean operator+(Boolean a, Boolean b) { return {a.value || b.value}; }
inline Boolean operator*(Boolean a, Boolean b) { return {a.value && b.value}; }

template <>
struct RigTraits<Boolean> {
  static Boolean zero() { return {false}; }
  static Boolean one() { return {true}; }
  static Boolean conj(Boolean a) { return a; }
};

inline std::ostream& operator<<(std::ostream& os, F2 a) {
  return os << (a.value ? 1 : 0);
}
inline std::ostream& operator<<(std::ostream& os, Boolean a) {
  return os << (a.value ? "true" : "false");
}

// Complex-like scalars -------------------------------------------------------

/// Scalars that can carry the ZX interpretation: complex numbers and dual
/// complex numbers (the forward-mode carrier).
template <class T>
concept ComplexLike = std::same_as<T, Complex> || std::same_as<T, DualComplex>;

/// e^{ix} for a (possibly dual) real-valued x.
inline Complex exp_i(const Complex& x) {
  return std::exp(Complex{0.0, 1.0} * x);
}

inline DualComplex exp_i(const DualComplex& x) {
  const Complex i{0.0, 1.0};
  return lift_smooth([&](Complex a) { return std::exp(i * a); },
                     [&](Complex a) { return i * std::exp(i * a); }, x);
}

template <ComplexLike T>
T from_complex(const Complex& c) {
  return T(c);
}

/// Default absolute tolerance for comparisons of real and complex values.
inline constexpr double kDefaultTolerance = 1e-9;

}  // namespace diagdiff

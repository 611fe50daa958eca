// Copyright 2026 The spinqec Authors
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

// Exact spin quantum numbers and codeword amplitudes.

#ifndef SPINQEC_SPIN_CORE_H_
#define SPINQEC_SPIN_CORE_H_

#include <compare>
#include <cstdlib>
#include <string>

#include "spinqec/rational.h"

namespace spinqec {

/// A half-integer stored as twice its value, so m = -S, ..., +S is exact.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  static constexpr HalfInt from_twice(int twice) { return HalfInt(twice); }
  static constexpr HalfInt from_int(int value) { return HalfInt(2 * value); }

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr HalfInt abs() const { return HalfInt(twice_ < 0 ? -twice_ : twice_); }
  double to_double() const { return twice_ / 2.0; }
  Rational to_rational() const { return make_rational(twice_, 2); }

  /// "5/2", "-3/2", "0", "2".
  std::string str() const;
  /// Like str() but with an explicit '+' on positive values.
  std::string signed_str() const;

  constexpr HalfInt operator-() const { return HalfInt(-twice_); }
  constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return HalfInt(twice_ - o.twice_); }
  constexpr HalfInt operator*(int k) const { return HalfInt(twice_ * k); }
  constexpr auto operator<=>(const HalfInt&) const = default;

 private:
  constexpr explicit HalfInt(int twice) : twice_(twice) {}
  int twice_ = 0;
};

/// m^n as an exact rational.
Rational power(HalfInt m, int n);

/// Orders levels by |m|, negative before positive on ties.
struct ByMagnitude {
  bool operator()(HalfInt a, HalfInt b) const {
    if (a.abs() != b.abs()) return a.abs() < b.abs();
    return a < b;
  }
};

/// The (2S+1)-dimensional space of a spin S. Basis index i <-> m = -S + i.
class SpinSpace {
 public:
  explicit SpinSpace(int two_s);
  static SpinSpace from_spin(HalfInt s) { return SpinSpace(s.twice()); }

  int two_s() const { return two_s_; }
  HalfInt spin() const { return HalfInt::from_twice(two_s_); }
  int dimension() const { return two_s_ + 1; }
  Rational casimir() const;  // S(S+1)

  bool contains(HalfInt m) const;
  /// Throws std::out_of_range for levels outside the space or of wrong parity.
  int index_of(HalfInt m) const;
  HalfInt level(int index) const;

  bool operator==(const SpinSpace&) const = default;

 private:
  int two_s_;
};

/// A signed square root of a non-negative rational: sign * sqrt(radicand).
class Amplitude {
 public:
  Amplitude() = default;  // zero
  /// sign must be -1, 0 or +1; radicand must be >= 0.
  Amplitude(int sign, Rational radicand);
  static Amplitude sqrt(Rational radicand) { return Amplitude(1, std::move(radicand)); }
  static Amplitude one() { return Amplitude(1, Rational(1)); }

  int sign() const { return sign_; }
  const Rational& radicand() const { return radicand_; }
  bool is_zero() const { return sign_ == 0; }

  /// Exact square (signed amplitudes square to their radicand).
  const Rational& square() const { return radicand_; }
  double to_double() const;
  Quad to_quad() const;

  Amplitude operator-() const { return Amplitude(-sign_, radicand_); }
  Amplitude operator*(const Amplitude& o) const;
  Amplitude operator/(const Amplitude& o) const;
  bool operator==(const Amplitude& o) const = default;

  /// "sqrt(3/10)", "-sqrt(1/5)", "0".
  std::string str() const;

 private:
  int sign_ = 0;
  Rational radicand_ = 0;
};

}  // namespace spinqec

#endif  // SPINQEC_SPIN_CORE_H_

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

#include "spinqec/spin_core.h"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace spinqec {

std::string to_string(const Rational& r) {
  std::ostringstream out;
  out << numerator(r);
  if (denominator(r) != 1) out << "/" << denominator(r);
  return out.str();
}

std::string HalfInt::str() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

std::string HalfInt::signed_str() const {
  return twice_ > 0 ? "+" + str() : str();
}

Rational power(HalfInt m, int n) {
  if (n < 0) throw std::domain_error("power: negative exponent");
  Rational base = m.to_rational();
  Rational result = 1;
  for (int k = 0; k < n; ++k) result *= base;
  return result;
}

SpinSpace::SpinSpace(int two_s) : two_s_(two_s) {
  if (two_s < 1) {
    throw std::invalid_argument("SpinSpace: 2S must be >= 1, got " +
                                std::to_string(two_s));
  }
}

Rational SpinSpace::casimir() const {
  Rational s = make_rational(two_s_, 2);
  return s * (s + 1);
}

bool SpinSpace::contains(HalfInt m) const {
  int t = m.twice();
  return t >= -two_s_ && t <= two_s_ && (t + two_s_) % 2 == 0;
}

int SpinSpace::index_of(HalfInt m) const {
  if (!contains(m)) {
    throw std::out_of_range("level " + m.str() + " is not in spin " +
                            spin().str());
  }
  return (m.twice() + two_s_) / 2;
}

HalfInt SpinSpace::level(int index) const {
  if (index < 0 || index >= dimension()) {
    throw std::out_of_range("basis index " + std::to_string(index) +
                            " out of range");
  }
  return HalfInt::from_twice(2 * index - two_s_);
}

Amplitude::Amplitude(int sign, Rational radicand)
    : sign_(sign), radicand_(std::move(radicand)) {
  if (sign_ < -1 || sign_ > 1) throw std::invalid_argument("Amplitude: bad sign");
  if (radicand_ < 0) throw std::invalid_argument("Amplitude: negative radicand");
  if (sign_ == 0 || radicand_ == 0) {
    sign_ = 0;
    radicand_ = 0;
  }
}

double Amplitude::to_double() const {
  return sign_ * std::sqrt(spinqec::to_double(radicand_));
}

Quad Amplitude::to_quad() const {
  return Quad(sign_) * boost::multiprecision::sqrt(spinqec::to_quad(radicand_));
}

Amplitude Amplitude::operator*(const Amplitude& o) const {
  return Amplitude(sign_ * o.sign_, radicand_ * o.radicand_);
}

Amplitude Amplitude::operator/(const Amplitude& o) const {
  if (o.is_zero()) throw std::domain_error("Amplitude: division by zero");
  return Amplitude(sign_ * o.sign_, radicand_ / o.radicand_);
}

std::string Amplitude::str() const {
  if (is_zero()) return "0";
  std::string body = "sqrt(" + to_string(radicand_) + ")";
  return sign_ < 0 ? "-" + body : body;
}

}  // namespace spinqec

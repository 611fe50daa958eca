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

#ifndef SPINQEC_RATIONAL_H_
#define SPINQEC_RATIONAL_H_

#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace spinqec {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// 113-bit mantissa float used where absolute residuals must reach 1e-12 on
// quantities of order S^4 ~ 1e8.
using Quad = boost::multiprecision::cpp_bin_float_quad;

inline Rational make_rational(long long p, long long q = 1) {
  return Rational(BigInt(p), BigInt(q));
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline Quad to_quad(const Rational& r) {
  return Quad(numerator(r)) / Quad(denominator(r));
}

std::string to_string(const Rational& r);

}  // namespace spinqec

#endif  // SPINQEC_RATIONAL_H_

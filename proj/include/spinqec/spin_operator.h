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

#ifndef SPINQEC_SPIN_OPERATOR_H_
#define SPINQEC_SPIN_OPERATOR_H_

#include <cmath>
#include <complex>
#include <string>
#include <type_traits>

#include <Eigen/Dense>

#include "spinqec/spin_core.h"

namespace spinqec {

using Complex = std::complex<double>;

/// A dense operator on a single spin, tagged with its operator word.
struct SpinOperator {
  SpinSpace space;
  Eigen::MatrixXcd matrix;
  std::string label;

  SpinOperator adjoint() const;
  bool is_hermitian(double tol = 1e-12) const;
};

SpinOperator operator*(const SpinOperator& a, const SpinOperator& b);
SpinOperator operator+(const SpinOperator& a, const SpinOperator& b);
SpinOperator operator-(const SpinOperator& a, const SpinOperator& b);
SpinOperator operator*(Complex k, const SpinOperator& a);

SpinOperator make_identity(const SpinSpace& space);
SpinOperator make_sz(const SpinSpace& space);
SpinOperator make_splus(const SpinSpace& space);
SpinOperator make_sminus(const SpinSpace& space);
SpinOperator make_sx(const SpinSpace& space);
SpinOperator make_sy(const SpinSpace& space);

/// <m+1|S_+|m> = sqrt(S(S+1) - m(m+1)), exactly.
Amplitude raising_element(const SpinSpace& space, HalfInt m);

/// Real ladder and S_Z matrices in an arbitrary scalar type. S_Y is not
/// real; callers use S_Y = -i * (S_+ - S_-)/2 and track the phase.
template <typename Real>
Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic> real_splus(const SpinSpace& space) {
  const int n = space.dimension();
  Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic> out =
      Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) {
    const Rational r = raising_element(space, space.level(i)).square();
    if constexpr (std::is_same_v<Real, Quad>) {
      out(i + 1, i) = boost::multiprecision::sqrt(to_quad(r));
    } else {
      out(i + 1, i) = static_cast<Real>(std::sqrt(to_double(r)));
    }
  }
  return out;
}

template <typename Real>
Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic> real_sz(const SpinSpace& space) {
  const int n = space.dimension();
  Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic> out =
      Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>::Zero(n, n);
  for (int i = 0; i < n; ++i) out(i, i) = Real(space.level(i).twice()) / Real(2);
  return out;
}

}  // namespace spinqec

#endif  // SPINQEC_SPIN_OPERATOR_H_

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

#include "spinqec/spin_operator.h"

#include <stdexcept>

namespace spinqec {
namespace {

void require_same_space(const SpinOperator& a, const SpinOperator& b) {
  if (a.space != b.space) {
    throw std::invalid_argument("operators act on different spin spaces");
  }
}

}  // namespace

SpinOperator SpinOperator::adjoint() const {
  return {space, matrix.adjoint(), "(" + label + ")^dag"};
}

bool SpinOperator::is_hermitian(double tol) const {
  return (matrix - matrix.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

SpinOperator operator*(const SpinOperator& a, const SpinOperator& b) {
  require_same_space(a, b);
  return {a.space, a.matrix * b.matrix, a.label + " " + b.label};
}

SpinOperator operator+(const SpinOperator& a, const SpinOperator& b) {
  require_same_space(a, b);
  return {a.space, a.matrix + b.matrix, "(" + a.label + " + " + b.label + ")"};
}

SpinOperator operator-(const SpinOperator& a, const SpinOperator& b) {
  require_same_space(a, b);
  return {a.space, a.matrix - b.matrix, "(" + a.label + " - " + b.label + ")"};
}

SpinOperator operator*(Complex k, const SpinOperator& a) {
  return {a.space, k * a.matrix, a.label};
}

Amplitude raising_element(const SpinSpace& space, HalfInt m) {
  const Rational mr = m.to_rational();
  return Amplitude::sqrt(space.casimir() - mr * (mr + 1));
}

SpinOperator make_identity(const SpinSpace& space) {
  const int n = space.dimension();
  return {space, Eigen::MatrixXcd::Identity(n, n), "I"};
}

SpinOperator make_sz(const SpinSpace& space) {
  return {space, real_sz<double>(space).cast<Complex>(), "SZ"};
}

SpinOperator make_splus(const SpinSpace& space) {
  return {space, real_splus<double>(space).cast<Complex>(), "S+"};
}

SpinOperator make_sminus(const SpinSpace& space) {
  return {space, real_splus<double>(space).transpose().cast<Complex>(), "S-"};
}

SpinOperator make_sx(const SpinSpace& space) {
  const Eigen::MatrixXd up = real_splus<double>(space);
  return {space, (0.5 * (up + up.transpose())).cast<Complex>(), "SX"};
}

SpinOperator make_sy(const SpinSpace& space) {
  const Eigen::MatrixXd up = real_splus<double>(space);
  // (S_+ - S_-) / (2i)
  return {space, Complex(0, -0.5) * (up - up.transpose()).cast<Complex>(), "SY"};
}

}  // namespace spinqec

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

#include <gtest/gtest.h>

#include <cmath>

#include "spinqec/spin_operator.h"

namespace spinqec {
namespace {

TEST(HalfInt, ArithmeticAndFormatting) {
  const HalfInt a = HalfInt::from_twice(5);
  EXPECT_EQ(a.str(), "5/2");
  EXPECT_EQ((-a).str(), "-5/2");
  EXPECT_EQ(a.signed_str(), "+5/2");
  EXPECT_EQ(HalfInt::from_int(2).str(), "2");
  EXPECT_EQ(HalfInt().str(), "0");
  EXPECT_EQ((a + HalfInt::from_twice(1)).twice(), 6);
  EXPECT_EQ((a * 3).twice(), 15);
  EXPECT_TRUE(HalfInt::from_int(-3).is_integer());
  EXPECT_FALSE(a.is_integer());
  EXPECT_EQ((-a).abs(), a);
  EXPECT_LT(-a, a);
}

TEST(HalfInt, PowerIsExact) {
  EXPECT_EQ(power(HalfInt::from_twice(5), 2), make_rational(25, 4));
  EXPECT_EQ(power(HalfInt::from_twice(-3), 3), make_rational(-27, 8));
  EXPECT_EQ(power(HalfInt::from_twice(7), 0), Rational(1));
}

TEST(HalfInt, ByMagnitudeOrdersNegativeFirst) {
  ByMagnitude less;
  EXPECT_TRUE(less(HalfInt::from_twice(1), HalfInt::from_twice(-3)));
  EXPECT_TRUE(less(HalfInt::from_twice(-3), HalfInt::from_twice(3)));
  EXPECT_FALSE(less(HalfInt::from_twice(3), HalfInt::from_twice(-3)));
}

TEST(SpinSpace, LevelsAndIndices) {
  const SpinSpace s(9);
  EXPECT_EQ(s.dimension(), 10);
  EXPECT_EQ(s.level(0).twice(), -9);
  EXPECT_EQ(s.level(9).twice(), 9);
  EXPECT_EQ(s.index_of(HalfInt::from_twice(-5)), 2);
  EXPECT_EQ(s.casimir(), make_rational(99, 4));
  EXPECT_TRUE(s.contains(HalfInt::from_twice(7)));
  EXPECT_FALSE(s.contains(HalfInt::from_twice(11)));
  EXPECT_FALSE(s.contains(HalfInt::from_twice(2)));  // wrong parity
  EXPECT_THROW(s.index_of(HalfInt::from_twice(11)), std::out_of_range);
  EXPECT_THROW(s.index_of(HalfInt::from_twice(4)), std::out_of_range);
  EXPECT_THROW(SpinSpace(0), std::invalid_argument);
}

TEST(Amplitude, ExactOperations) {
  const Amplitude a = Amplitude::sqrt(make_rational(3, 10));
  const Amplitude b(-1, make_rational(2, 5));
  EXPECT_EQ(a.str(), "sqrt(3/10)");
  EXPECT_EQ(b.str(), "-sqrt(2/5)");
  EXPECT_EQ((a * b).radicand(), make_rational(3, 25));
  EXPECT_EQ((a * b).sign(), -1);
  EXPECT_EQ((a / b).radicand(), make_rational(3, 4));
  EXPECT_EQ(a.square(), make_rational(3, 10));
  EXPECT_NEAR(a.to_double(), std::sqrt(0.3), 1e-16);
  EXPECT_TRUE(Amplitude(1, Rational(0)).is_zero());
  EXPECT_EQ(Amplitude(1, Rational(0)), Amplitude());
  EXPECT_THROW(Amplitude(1, Rational(-1)), std::invalid_argument);
  EXPECT_THROW(a / Amplitude(), std::domain_error);
}

TEST(SpinOperator, SpinHalfLadderIsSingleEntry) {
  const SpinSpace s(1);
  const SpinOperator up = make_splus(s);
  EXPECT_EQ(up.matrix(1, 0), Complex(1, 0));
  EXPECT_EQ(up.matrix.cwiseAbs().sum(), 1.0);
}

TEST(SpinOperator, RaisingTopLevelVanishes) {
  const SpinSpace s(9);
  Eigen::VectorXcd top = Eigen::VectorXcd::Zero(10);
  top(9) = 1;
  EXPECT_EQ((make_splus(s).matrix * top).norm(), 0.0);
  EXPECT_TRUE(raising_element(s, HalfInt::from_twice(9)).is_zero());
  // <m+1|S_+|m> = sqrt(S(S+1) - m(m+1)); m = -9/2 gives sqrt(99/4 - 63/4) = 3.
  EXPECT_EQ(raising_element(s, HalfInt::from_twice(-9)).radicand(), Rational(9));
}

class SpinAlgebra : public ::testing::TestWithParam<int> {};

TEST_P(SpinAlgebra, CommutatorsCasimirAndHermiticity) {
  const SpinSpace s(GetParam());
  const Eigen::MatrixXcd x = make_sx(s).matrix;
  const Eigen::MatrixXcd y = make_sy(s).matrix;
  const Eigen::MatrixXcd z = make_sz(s).matrix;
  const double scale = to_double(s.casimir());
  const double tol = 1e-14 * std::max(1.0, scale);
  const Complex i(0, 1);
  EXPECT_LE((x * y - y * x - i * z).cwiseAbs().maxCoeff(), tol);
  EXPECT_LE((y * z - z * y - i * x).cwiseAbs().maxCoeff(), tol);
  EXPECT_LE((z * x - x * z - i * y).cwiseAbs().maxCoeff(), tol);
  const Eigen::MatrixXcd cas = x * x + y * y + z * z;
  const Eigen::MatrixXcd want =
      scale * Eigen::MatrixXcd::Identity(s.dimension(), s.dimension());
  EXPECT_LE((cas - want).cwiseAbs().maxCoeff(), tol);
  EXPECT_TRUE(make_sx(s).is_hermitian());
  EXPECT_TRUE(make_sy(s).is_hermitian());
  EXPECT_TRUE(make_sz(s).is_hermitian());
  EXPECT_EQ((make_splus(s).adjoint().matrix - make_sminus(s).matrix).cwiseAbs().maxCoeff(), 0.0);
  EXPECT_EQ(make_splus(s).matrix.imag().cwiseAbs().maxCoeff(), 0.0);
}

// 1/2, 1, 9/2, 19/2, 29/2, 99/2.
INSTANTIATE_TEST_SUITE_P(Spins, SpinAlgebra, ::testing::Values(1, 2, 9, 19, 29, 99));

TEST(SpinOperator, QuadLadderMatchesDouble) {
  const SpinSpace s(29);
  const auto quad = real_splus<Quad>(s);
  const Eigen::MatrixXcd dbl = make_splus(s).matrix;
  for (int k = 0; k + 1 < s.dimension(); ++k) {
    EXPECT_NEAR(quad(k + 1, k).convert_to<double>(), dbl(k + 1, k).real(), 1e-13);
  }
}

TEST(SpinOperator, MismatchedSpacesThrow) {
  EXPECT_THROW(make_sx(SpinSpace(3)) * make_sx(SpinSpace(5)), std::invalid_argument);
}

}  // namespace
}  // namespace spinqec

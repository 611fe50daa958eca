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

// Knill-Laflamme certification.
//
// Two tiers. For S_Z-only error sets the conditions reduce to equality of
// the rational moments <k|S_Z^n|k>, n = 0..2t, plus disjoint supports, and
// are checked exactly. General operator words (S_X, S_Y, S_+, S_-) are
// checked numerically in 113-bit floating point so that absolute residuals
// stay far below 1e-12 even for spin 99/2 and fourth-order words.

#ifndef SPINQEC_KL_VERIFIER_H_
#define SPINQEC_KL_VERIFIER_H_

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "spinqec/code_builder.h"

namespace spinqec {

enum class SpinOp { kI, kZ, kPlus, kMinus, kX, kY };

std::string to_string(SpinOp op);

struct ErrorFactor {
  int qudit = 0;
  SpinOp op = SpinOp::kI;
  bool operator==(const ErrorFactor&) const = default;
};

/// Ordered product; factors[0] acts last (leftmost). Empty = identity.
using ErrorWord = std::vector<ErrorFactor>;

std::string to_string(const ErrorWord& word);

struct ErrorSet {
  std::vector<ErrorWord> words;

  /// Every word of length 0..max_length over `ops`, each factor on any of
  /// the n_qudits qudits. The identity is always first.
  static ErrorSet all_words(int max_length, const std::vector<SpinOp>& ops,
                            int n_qudits = 1);
};

struct KLViolation {
  std::string condition;  // "normalization", "moment", "off_diagonal", "diagonal", "support"
  int i = 0;
  int j = 0;
  int order = -1;         // moment order n, or -1
  std::string word_a;
  std::string word_b;
  std::string lhs;
  std::string rhs;
};

struct KLReport {
  std::string code_name;
  bool exact = true;
  /// moments[k][n] = <k_L| S_Z^n |k_L>, n = 0..2t.
  std::vector<std::vector<Rational>> moments;
  double max_off_diagonal = 0;
  double max_diagonal_mismatch = 0;
  double tolerance = 0;
  int words_checked = 0;
  bool pass = false;
  std::vector<KLViolation> violations;
};

nlohmann::json report_to_json(const KLReport& report);

/// Thrown when a dense single-spin representation would exceed the cap.
class DimensionOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr double kDefaultKLTolerance = 1e-12;
constexpr int kDefaultDenseDimensionCap = 512;

/// sum over the support of amplitude^2 * m^n, m the level of `qudit`.
Rational moment_exact(const Codeword& codeword, int n, int qudit = 0);

/// Exact S_Z-only certification up to moment order 2t.
KLReport verify_z_kl(const CodeFamily& code, int t);

/// Numeric certification over every ordered pair of words in error_set.
KLReport verify_full_kl(const CodeFamily& code, const ErrorSet& error_set,
                        double tol = kDefaultKLTolerance,
                        int dimension_cap = kDefaultDenseDimensionCap);

struct B6Entry {
  int label = 0;
  double lhs = 0;  // <S_+S_- + S_-S_+> by matrix action
  double rhs = 0;  // 2S(S+1) - 2<S_Z^2>
  double residual = 0;
};

struct B6Report {
  std::vector<B6Entry> entries;
  double max_residual = 0;
  bool pass = false;
};

/// Checks <S_+S_- + S_-S_+> = 2S(S+1) - 2<S_Z^2> for each codeword.
B6Report verify_b6_identity(const CodeFamily& code, double tol = kDefaultKLTolerance);

/// |<psi|S_+S_- + S_-S_+|psi> - (2S(S+1) - 2<psi|S_Z^2|psi>)| for a normalized
/// state given in the ascending-m basis.
double b6_residual(const SpinSpace& space, const std::vector<std::complex<double>>& state);

}  // namespace spinqec

#endif  // SPINQEC_KL_VERIFIER_H_

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

// Logical-qudit codewords on one or several spins.
//
// Every family is built from closed-form coefficients and stored exactly:
// each codeword is a sparse map from level tuples to signed square roots of
// rationals. Single-spin codes use 1-tuples; the multi-spin codes place the
// same amplitudes on diagonal tuples (m, m, ..., m).

#ifndef SPINQEC_CODE_BUILDER_H_
#define SPINQEC_CODE_BUILDER_H_

#include <map>
#include <set>
#include <string>
#include <vector>

#include "spinqec/spin_core.h"

namespace spinqec {

enum class ErrorModel { kZOnly, kXYZ };

std::string to_string(ErrorModel model);
ErrorModel parse_error_model(const std::string& text);

struct CodeSpec {
  int d = 3;         // logical dimension
  int t = 1;         // corrects order-t errors; distance 2t+1
  ErrorModel error_model = ErrorModel::kZOnly;
  int n_qudits = 1;  // 1, or 2t+1 for the multi-spin variants

  int distance() const { return 2 * t + 1; }
  /// Throws std::invalid_argument on out-of-range fields.
  void validate() const;
  bool operator==(const CodeSpec&) const = default;
};

using LevelTuple = std::vector<HalfInt>;

struct Codeword {
  int label = 0;
  std::map<LevelTuple, Amplitude> terms;

  Rational norm_squared() const;
  /// amplitude(m...) == amplitude(-m...) for every term.
  bool is_mirror_symmetric() const;
  /// Every tuple has all components equal.
  bool is_diagonal() const;
  /// Distinct values taken by the component on `qudit`.
  std::set<HalfInt> levels(int qudit = 0) const;
};

struct CodeFamily {
  std::string name;
  CodeSpec spec;
  SpinSpace spin{1};  // per qudit
  std::vector<Codeword> codewords;

  int n_qudits() const { return spec.n_qudits; }
  bool supports_disjoint() const;
  /// Smallest |m - m'| between distinct occupied levels of qudit 0 across
  /// all codewords.
  int min_level_gap_twice() const;
  HalfInt max_occupied_level() const;
  /// Single-spin view: amplitude of codeword k on level m (zero if absent).
  Amplitude amplitude(int k, HalfInt m) const;
};

struct Distance3Coefficients {
  Amplitude a, b;
};

struct Distance5Coefficients {
  Amplitude a, b, c, d;
};

/// a_i = sqrt((2d-1+i)/(8d-4)), b_i = sqrt((2d-1-i)/(8d-4)).
/// Throws std::domain_error unless d >= 2 and 1 <= i <= d-1.
Distance3Coefficients coeff_distance3(int d, int i);

/// Distance-5 coefficients for levels 2d-1/2-i (a), 2d-3/2+i (b),
/// i-1/2 (c) and 4d-3/2-i (d). Each is a product of two square roots stored
/// as one radicand.
Distance5Coefficients coeff_distance5(int d, int i);

/// Spin of the single-spin Z code: 2d-3/2 (t=1) or 4d-5/2 (t=2).
HalfInt z_code_spin(int d, int t);
/// (2t+1) * S_z + t.
HalfInt xyz_code_spin(int d, int t);

CodeFamily build_z_code(int d, int t);
CodeFamily build_xyz_code(int d, int t);
CodeFamily build_multiqudit_code(int d, int t);

/// Alternative distance-5 qutrit on spin 19/2 with a different coefficient set.
CodeFamily alt_qutrit_distance5();

/// Dispatches on spec (n_qudits > 1 selects the multi-spin construction).
CodeFamily build_code(const CodeSpec& spec);

/// Swaps the amplitudes of the two innermost mirror pairs of codeword
/// `label` (a_1 <-> b_1 for the distance-3 family). Used to build codes that
/// must fail certification.
CodeFamily swap_inner_pairs(const CodeFamily& code, int label = 1);

}  // namespace spinqec

#endif  // SPINQEC_CODE_BUILDER_H_

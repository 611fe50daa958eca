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

// Encoding and decoding as chains of two-level y rotations.
//
// A step (m1, m2, c, s) is the real rotation
//   |m1> -> c|m1> + s|m2>,   |m2> -> -s|m1> + c|m2>,
// with theta = atan2(s, c); every other level is left alone.
//
// The decoder maps the error-extended code space, spanned by
// S_Z^n |k_L> for n <= t, onto single levels. The component reached by an
// n-th order error lands in branch n; measuring which branch is occupied
// (the ancilla readout) and undoing a signed permutation restores the
// logical state.

#ifndef SPINQEC_PULSE_SYNTH_H_
#define SPINQEC_PULSE_SYNTH_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "json.hpp"
#include "spinqec/code_builder.h"

namespace spinqec {

class SynthesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PulseStep {
  HalfInt m1;
  HalfInt m2;
  double cos_theta = 1;
  double sin_theta = 0;
  std::optional<Amplitude> exact_cos;  // set when the cosine is sign*sqrt(rational)
  std::optional<Amplitude> exact_sin;

  double theta() const;
  /// The same step with angle theta + delta.
  PulseStep rotated(double delta) const;
};

/// Decode branch n: logical k sits on level targets[k] with sign signs[k].
struct DecodeBranch {
  int order = 0;
  std::vector<HalfInt> targets;
  std::vector<int> signs;
};

struct PulseSequence {
  SpinSpace space{1};
  std::vector<PulseStep> steps;
  /// Decoders only: the branch readout follows step ancilla_step - 1.
  std::optional<size_t> ancilla_step;
  std::vector<DecodeBranch> branches;

  Eigen::MatrixXd composed_unitary() const;
  bool is_unitary(double tol = 1e-12) const;
};

/// The d lowest levels, -S .. -S + d - 1.
std::vector<HalfInt> default_input_levels(const CodeFamily& code);

/// Maps |input_levels[k]> to |k_L>. Empty input_levels means the default.
PulseSequence synthesize_encoder(const CodeFamily& code,
                                 std::vector<HalfInt> input_levels = {});

/// Separates the S_Z-error orders 0..t of a mirror-symmetric, disjoint code
/// with matching moments into t+1 branches of single levels.
PulseSequence synthesize_decoder(const CodeFamily& code);

/// Applies one step in place.
void apply_step(const PulseStep& step, const SpinSpace& space, Eigen::VectorXcd& state);
void apply_step(const PulseStep& step, const SpinSpace& space, Eigen::MatrixXcd& rho);

Eigen::VectorXcd apply_sequence(const PulseSequence& seq, const Eigen::VectorXcd& state);
Eigen::MatrixXcd apply_sequence(const PulseSequence& seq, const Eigen::MatrixXcd& rho);

/// Per-branch logical amplitudes after decoding, sign-corrected.
std::vector<Eigen::VectorXcd> project_branches(const PulseSequence& decoder,
                                               const Eigen::VectorXcd& decoded);

/// Probability of each branch in a decoded density matrix.
std::vector<double> branch_probabilities(const PulseSequence& decoder,
                                         const Eigen::MatrixXcd& decoded);

/// Branch readout followed by the branch's recovery, summed over outcomes.
/// Returns the d x d logical density matrix; weight outside every branch is
/// discarded.
Eigen::MatrixXcd recover_logical(const PulseSequence& decoder, const Eigen::MatrixXcd& decoded);

nlohmann::json sequence_to_json(const PulseSequence& seq);

}  // namespace spinqec

#endif  // SPINQEC_PULSE_SYNTH_H_

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

// Density-matrix simulation of one correction cycle under pure dephasing.
//
// Time is measured in units of T2 = 1/gamma, so with the default gamma = 1
// a cycle_time of 1e-3 is t/T2 = 1e-3.

#ifndef SPINQEC_QEC_SIM_H_
#define SPINQEC_QEC_SIM_H_

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "spinqec/code_builder.h"
#include "spinqec/pulse_synth.h"

namespace spinqec {

using DensityMatrix = Eigen::MatrixXcd;

struct NoiseParams {
  double gamma = 1;            // dephasing rate 1/T2
  double cycle_time = 0;       // idle time between encode and decode
  double gate_time_ratio = 0;  // t_gate / T2, per pulse
  double gate_infidelity = 0;  // 1 - single-gate state fidelity
};

struct CycleOptions {
  bool corrected = true;
  bool imperfect_gates = false;
};

struct CycleResult {
  double fidelity = 1;  // sqrt(<psi|rho_out|psi>)
  double error = 0;     // 1 - fidelity^2
  std::vector<double> branch_probabilities;
  double captured_weight = 1;
  bool corrected = true;
  bool imperfect_gates = false;
};

/// rho_mn * exp(-gamma (m - n)^2 t / 2).
DensityMatrix dephasing_channel(const DensityMatrix& rho, const SpinSpace& space, double gamma,
                                double t);

/// Fixed-step RK4 for d rho/dt = -i[H, rho] + sum_L (L rho L^+ - {L^+ L, rho}/2).
/// Throws std::runtime_error if the trace drifts by more than 1e-6, and
/// std::invalid_argument for dt outside (0, t] or more than 10^7 steps.
DensityMatrix lindblad_rk4(const DensityMatrix& rho, const std::vector<Eigen::MatrixXcd>& collapse,
                           const Eigen::MatrixXcd& hamiltonian, double t, double dt);

/// exp(i eps S_Z) |state>.
Eigen::VectorXcd coherent_z_error(const SpinSpace& space, const Eigen::VectorXcd& state,
                                  double eps);

/// Extra rotation angle per step for a given gate infidelity: the rotated
/// state overlaps the ideal one with cos^2(delta) = 1 - infidelity.
double over_rotation_angle(double gate_infidelity);

/// A code with its synthesized encoder and decoder.
class QecCycle {
 public:
  explicit QecCycle(CodeFamily code);

  const CodeFamily& code() const { return code_; }
  const PulseSequence& encoder() const { return encoder_; }
  const PulseSequence& decoder() const { return decoder_; }

  /// `logical` has d entries and unit norm.
  CycleResult run(const Eigen::VectorXcd& logical, const NoiseParams& noise,
                  const CycleOptions& options = {}) const;

 private:
  DensityMatrix run_sequence(const PulseSequence& seq, DensityMatrix rho, const NoiseParams& noise,
                             bool imperfect) const;

  CodeFamily code_;
  PulseSequence encoder_;
  PulseSequence decoder_;
};

CycleResult run_cycle(const CodeFamily& code, const Eigen::VectorXcd& logical,
                      const NoiseParams& noise, const CycleOptions& options = {});

/// (1, 1, ..., 1) / sqrt(d).
Eigen::VectorXcd uniform_superposition(int d);

struct GainRow {
  double t_over_t2 = 0;
  double error_uncorrected = 0;
  double error_corrected = 0;
  double gain = 0;
};

/// Ideal-gate sweep; grid must be ascending.
std::vector<GainRow> sweep_gain(const QecCycle& cycle, const std::vector<double>& t_over_t2,
                                const Eigen::VectorXcd& logical);

/// n points log-spaced over [lo, hi].
std::vector<double> log_grid(double lo, double hi, int n);

/// Least-squares slope of log(y) against log(x).
double log_log_slope(const std::vector<double>& x, const std::vector<double>& y);

/// Grid points where the corrected error is below the uncorrected one.
struct AdvantageWindow {
  int points = 0;
  double lo = 0;
  double hi = 0;
};

AdvantageWindow advantage_window(const std::vector<double>& x,
                                 const std::vector<double>& error_uncorrected,
                                 const std::vector<double>& error_corrected);

/// Columns t_over_T2, E_uncorrected, E_corr_d3, E_corr_d5, gain_d3, gain_d5.
std::string gain_table_csv(const std::vector<GainRow>& distance3,
                           const std::vector<GainRow>& distance5);

/// Gate-imperfection sweep for one code.
struct GateSweepRow {
  double t_over_t2 = 0;
  double error_uncorrected = 0;
  double error_ideal = 0;
  double error_gate_time_only = 0;
  double error_f999 = 0;
  double error_f995 = 0;
};

struct GateSweepConfig {
  double gate_time_ratio = 1e-4;
  double infidelity_high = 1e-3;  // 99.9 %
  double infidelity_low = 5e-3;   // 99.5 %
};

std::vector<GateSweepRow> sweep_gate_imperfections(const QecCycle& cycle,
                                                   const std::vector<double>& t_over_t2,
                                                   const Eigen::VectorXcd& logical,
                                                   const GateSweepConfig& config = {});

std::string gate_table_csv(const std::vector<GateSweepRow>& rows);

}  // namespace spinqec

#endif  // SPINQEC_QEC_SIM_H_

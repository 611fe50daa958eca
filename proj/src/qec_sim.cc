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

#include "spinqec/qec_sim.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "spinqec/csv.h"
#include "spinqec/spin_operator.h"

namespace spinqec {
namespace {

constexpr double kCaptureSlack = 1e-9;
constexpr double kRk4TraceDrift = 1e-6;
constexpr long long kRk4MaxSteps = 10'000'000;

Eigen::MatrixXcd lindblad_rhs(const Eigen::MatrixXcd& rho,
                              const std::vector<Eigen::MatrixXcd>& collapse,
                              const std::vector<Eigen::MatrixXcd>& collapse_sq,
                              const Eigen::MatrixXcd& hamiltonian) {
  const Complex i(0, 1);
  Eigen::MatrixXcd out = -i * (hamiltonian * rho - rho * hamiltonian);
  for (size_t k = 0; k < collapse.size(); ++k) {
    out += collapse[k] * rho * collapse[k].adjoint() -
           0.5 * (collapse_sq[k] * rho + rho * collapse_sq[k]);
  }
  return out;
}

void check_logical(const Eigen::VectorXcd& logical, int d) {
  if (logical.size() != d) throw std::invalid_argument("logical state must have d entries");
  if (std::abs(logical.squaredNorm() - 1) > 1e-9) {
    throw std::invalid_argument("logical state must have unit norm");
  }
}

double overlap_error(const Eigen::VectorXcd& logical, const Eigen::MatrixXcd& rho_logical) {
  const double f2 = (logical.adjoint() * rho_logical * logical)(0, 0).real();
  return 1 - f2;
}

}  // namespace

DensityMatrix dephasing_channel(const DensityMatrix& rho, const SpinSpace& space, double gamma,
                                double t) {
  if (rho.rows() != space.dimension() || rho.cols() != space.dimension()) {
    throw std::invalid_argument("density matrix does not match spin space");
  }
  DensityMatrix out = rho;
  if (gamma * t == 0) return out;
  const int dim = space.dimension();
  for (int a = 0; a < dim; ++a) {
    for (int b = 0; b < dim; ++b) {
      const double dm = (a - b);  // level spacing is 1
      out(a, b) *= std::exp(-gamma * dm * dm * t / 2);
    }
  }
  return out;
}

DensityMatrix lindblad_rk4(const DensityMatrix& rho, const std::vector<Eigen::MatrixXcd>& collapse,
                           const Eigen::MatrixXcd& hamiltonian, double t, double dt) {
  if (t == 0) return rho;
  if (!(dt > 0) || dt > t) throw std::invalid_argument("need 0 < dt <= t");
  const long long steps = static_cast<long long>(std::ceil(t / dt - 1e-9));
  if (steps > kRk4MaxSteps) throw std::invalid_argument("too many RK4 steps");
  const double h = t / static_cast<double>(steps);
  std::vector<Eigen::MatrixXcd> collapse_sq;
  for (const auto& l : collapse) collapse_sq.push_back(l.adjoint() * l);
  const Complex trace0 = rho.trace();
  DensityMatrix r = rho;
  for (long long s = 0; s < steps; ++s) {
    const Eigen::MatrixXcd k1 = lindblad_rhs(r, collapse, collapse_sq, hamiltonian);
    const Eigen::MatrixXcd k2 = lindblad_rhs(r + 0.5 * h * k1, collapse, collapse_sq, hamiltonian);
    const Eigen::MatrixXcd k3 = lindblad_rhs(r + 0.5 * h * k2, collapse, collapse_sq, hamiltonian);
    const Eigen::MatrixXcd k4 = lindblad_rhs(r + h * k3, collapse, collapse_sq, hamiltonian);
    r += (h / 6) * (k1 + 2 * k2 + 2 * k3 + k4);
    if (std::abs(r.trace() - trace0) > kRk4TraceDrift) {
      throw std::runtime_error("RK4 step rejected: trace drift above 1e-6");
    }
  }
  return r;
}

Eigen::VectorXcd coherent_z_error(const SpinSpace& space, const Eigen::VectorXcd& state,
                                  double eps) {
  if (state.size() != space.dimension()) {
    throw std::invalid_argument("state does not match spin space");
  }
  Eigen::VectorXcd out = state;
  for (int i = 0; i < space.dimension(); ++i) {
    out(i) *= std::exp(Complex(0, eps * space.level(i).to_double()));
  }
  return out;
}

double over_rotation_angle(double gate_infidelity) {
  if (gate_infidelity < 0 || gate_infidelity > 1) {
    throw std::invalid_argument("gate infidelity must lie in [0, 1]");
  }
  return std::acos(std::sqrt(1 - gate_infidelity));
}

QecCycle::QecCycle(CodeFamily code)
    : code_(std::move(code)),
      encoder_(synthesize_encoder(code_)),
      decoder_(synthesize_decoder(code_)) {}

DensityMatrix QecCycle::run_sequence(const PulseSequence& seq, DensityMatrix rho,
                                     const NoiseParams& noise, bool imperfect) const {
  const double delta = imperfect ? over_rotation_angle(noise.gate_infidelity) : 0;
  const double t_gate = imperfect ? noise.gate_time_ratio / noise.gamma : 0;
  for (const PulseStep& step : seq.steps) {
    if (delta == 0) {
      apply_step(step, seq.space, rho);
    } else {
      apply_step(step.rotated(step.theta() < 0 ? -delta : delta), seq.space, rho);
    }
    if (t_gate > 0) rho = dephasing_channel(rho, seq.space, noise.gamma, t_gate);
  }
  return rho;
}

CycleResult QecCycle::run(const Eigen::VectorXcd& logical, const NoiseParams& noise,
                          const CycleOptions& options) const {
  const int d = code_.spec.d;
  check_logical(logical, d);
  if (noise.gamma <= 0 || noise.cycle_time < 0 || noise.gate_time_ratio < 0 ||
      noise.gate_infidelity < 0) {
    throw std::invalid_argument("noise parameters must be non-negative (gamma positive)");
  }
  const int dim = code_.spin.dimension();
  CycleResult result;
  result.corrected = options.corrected;
  result.imperfect_gates = options.imperfect_gates;

  const std::vector<HalfInt> inputs = default_input_levels(code_);
  Eigen::VectorXcd bare = Eigen::VectorXcd::Zero(dim);
  for (int k = 0; k < d; ++k) bare(code_.spin.index_of(inputs[k])) = logical(k);
  DensityMatrix rho = bare * bare.adjoint();

  if (!options.corrected) {
    rho = dephasing_channel(rho, code_.spin, noise.gamma, noise.cycle_time);
    Eigen::MatrixXcd out(d, d);
    for (int k = 0; k < d; ++k) {
      for (int l = 0; l < d; ++l) {
        out(k, l) = rho(code_.spin.index_of(inputs[k]), code_.spin.index_of(inputs[l]));
      }
    }
    result.error = overlap_error(logical, out);
    result.fidelity = std::sqrt(std::max(0.0, 1 - result.error));
    return result;
  }

  rho = run_sequence(encoder_, rho, noise, options.imperfect_gates);
  rho = dephasing_channel(rho, code_.spin, noise.gamma, noise.cycle_time);
  rho = run_sequence(decoder_, rho, noise, options.imperfect_gates);
  result.branch_probabilities = branch_probabilities(decoder_, rho);
  result.captured_weight = 0;
  for (double p : result.branch_probabilities) result.captured_weight += p;
  if (result.captured_weight > 1 + kCaptureSlack) {
    throw std::runtime_error("branch decomposition captured more than unit weight");
  }
  const Eigen::MatrixXcd out = recover_logical(decoder_, rho);
  result.error = std::clamp(overlap_error(logical, out), 0.0, 1.0);
  result.fidelity = std::sqrt(1 - result.error);
  return result;
}

CycleResult run_cycle(const CodeFamily& code, const Eigen::VectorXcd& logical,
                      const NoiseParams& noise, const CycleOptions& options) {
  return QecCycle(code).run(logical, noise, options);
}

Eigen::VectorXcd uniform_superposition(int d) {
  return Eigen::VectorXcd::Constant(d, Complex(1 / std::sqrt(static_cast<double>(d)), 0));
}

std::vector<GainRow> sweep_gain(const QecCycle& cycle, const std::vector<double>& t_over_t2,
                                const Eigen::VectorXcd& logical) {
  if (!std::is_sorted(t_over_t2.begin(), t_over_t2.end())) {
    throw std::invalid_argument("sweep grid must be ascending");
  }
  std::vector<GainRow> rows;
  for (double x : t_over_t2) {
    NoiseParams noise;
    noise.cycle_time = x;
    GainRow row;
    row.t_over_t2 = x;
    row.error_uncorrected = cycle.run(logical, noise, {false, false}).error;
    row.error_corrected = cycle.run(logical, noise, {true, false}).error;
    row.gain = row.error_uncorrected / row.error_corrected;
    rows.push_back(row);
  }
  return rows;
}

std::vector<double> log_grid(double lo, double hi, int n) {
  if (!(lo > 0) || !(hi >= lo) || n < 1) throw std::invalid_argument("bad log grid");
  std::vector<double> out;
  if (n == 1) return {lo};
  const double a = std::log10(lo);
  const double b = std::log10(hi);
  for (int i = 0; i < n; ++i) out.push_back(std::pow(10.0, a + (b - a) * i / (n - 1)));
  return out;
}

double log_log_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("need matching points");
  const int n = static_cast<int>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < n; ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

AdvantageWindow advantage_window(const std::vector<double>& x,
                                 const std::vector<double>& error_uncorrected,
                                 const std::vector<double>& error_corrected) {
  if (x.size() != error_uncorrected.size() || x.size() != error_corrected.size()) {
    throw std::invalid_argument("sweep columns differ in length");
  }
  AdvantageWindow w;
  for (size_t i = 0; i < x.size(); ++i) {
    if (error_corrected[i] >= error_uncorrected[i]) continue;
    if (w.points == 0) w.lo = x[i];
    w.hi = x[i];
    ++w.points;
  }
  return w;
}

std::string gain_table_csv(const std::vector<GainRow>& distance3,
                           const std::vector<GainRow>& distance5) {
  if (distance3.size() != distance5.size()) throw std::invalid_argument("grids differ");
  std::ostringstream out;
  out << "t_over_T2,E_uncorrected,E_corr_d3,E_corr_d5,gain_d3,gain_d5\n";
  for (size_t i = 0; i < distance3.size(); ++i) {
    const GainRow& a = distance3[i];
    const GainRow& b = distance5[i];
    out << csv_number(a.t_over_t2) << "," << csv_number(a.error_uncorrected) << ","
        << csv_number(a.error_corrected) << "," << csv_number(b.error_corrected) << ","
        << csv_number(a.gain) << "," << csv_number(b.gain) << "\n";
  }
  return out.str();
}

std::vector<GateSweepRow> sweep_gate_imperfections(const QecCycle& cycle,
                                                   const std::vector<double>& t_over_t2,
                                                   const Eigen::VectorXcd& logical,
                                                   const GateSweepConfig& config) {
  std::vector<GateSweepRow> rows;
  for (double x : t_over_t2) {
    NoiseParams noise;
    noise.cycle_time = x;
    GateSweepRow row;
    row.t_over_t2 = x;
    row.error_uncorrected = cycle.run(logical, noise, {false, false}).error;
    row.error_ideal = cycle.run(logical, noise, {true, false}).error;
    noise.gate_time_ratio = config.gate_time_ratio;
    row.error_gate_time_only = cycle.run(logical, noise, {true, true}).error;
    noise.gate_infidelity = config.infidelity_high;
    row.error_f999 = cycle.run(logical, noise, {true, true}).error;
    noise.gate_infidelity = config.infidelity_low;
    row.error_f995 = cycle.run(logical, noise, {true, true}).error;
    rows.push_back(row);
  }
  return rows;
}

std::string gate_table_csv(const std::vector<GateSweepRow>& rows) {
  std::ostringstream out;
  out << "t_over_T2,E_uncorrected,E_corr_ideal,E_corr_gate_time,E_corr_f999,E_corr_f995\n";
  for (const GateSweepRow& r : rows) {
    out << csv_number(r.t_over_t2) << "," << csv_number(r.error_uncorrected) << ","
        << csv_number(r.error_ideal) << "," << csv_number(r.error_gate_time_only) << ","
        << csv_number(r.error_f999) << "," << csv_number(r.error_f995) << "\n";
  }
  return out.str();
}

}  // namespace spinqec

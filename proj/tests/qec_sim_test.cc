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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "spinqec/spin_operator.h"

namespace spinqec {
namespace {

DensityMatrix RandomDensity(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> g;
  Eigen::MatrixXcd a(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) a(i, j) = Complex(g(rng), g(rng));
  }
  DensityMatrix rho = a * a.adjoint();
  return rho / rho.trace().real();
}

class CodeCycles : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    d3_ = new QecCycle(build_z_code(3, 1));
    d5_ = new QecCycle(build_z_code(3, 2));
  }
  static void TearDownTestSuite() {
    delete d3_;
    delete d5_;
  }
  static QecCycle* d3_;
  static QecCycle* d5_;
};

QecCycle* CodeCycles::d3_ = nullptr;
QecCycle* CodeCycles::d5_ = nullptr;

TEST(Dephasing, ZeroTimeIsIdentity) {
  std::mt19937_64 rng(1);
  const SpinSpace s(9);
  const DensityMatrix rho = RandomDensity(rng, 10);
  EXPECT_EQ(dephasing_channel(rho, s, 1.0, 0.0), rho);
}

TEST(Dephasing, DiagonalStatesAreFixed) {
  const SpinSpace s(9);
  DensityMatrix rho = DensityMatrix::Zero(10, 10);
  for (int i = 0; i < 10; ++i) rho(i, i) = 0.1;
  EXPECT_LE((dephasing_channel(rho, s, 1.0, 3.0) - rho).cwiseAbs().maxCoeff(), 0.0);
}

TEST(Dephasing, CoherenceDecaysWithLevelSeparation) {
  const SpinSpace s(3);
  DensityMatrix rho = DensityMatrix::Constant(4, 4, 0.25);
  const DensityMatrix out = dephasing_channel(rho, s, 2.0, 0.5);
  EXPECT_NEAR(out(0, 3).real(), 0.25 * std::exp(-4.5), 1e-16);
  EXPECT_NEAR(out(1, 2).real(), 0.25 * std::exp(-0.5), 1e-16);
  EXPECT_THROW(dephasing_channel(rho, SpinSpace(5), 1.0, 1.0), std::invalid_argument);
}

TEST(Dephasing, AgreesWithLindbladIntegration) {
  std::mt19937_64 rng(2);
  const SpinSpace s(9);
  const std::vector<Eigen::MatrixXcd> collapse = {make_sz(s).matrix};
  const Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(10, 10);
  for (double t : {0.01, 0.1}) {
    for (int trial = 0; trial < 5; ++trial) {
      const DensityMatrix rho = RandomDensity(rng, 10);
      const DensityMatrix exact = dephasing_channel(rho, s, 1.0, t);
      const DensityMatrix rk4 = lindblad_rk4(rho, collapse, h, t, 1e-4);
      EXPECT_LE((exact - rk4).cwiseAbs().maxCoeff(), 1e-8);
    }
  }
}

TEST(Lindblad, TraceSurvivesManySteps) {
  std::mt19937_64 rng(3);
  const SpinSpace s(3);
  const DensityMatrix rho = RandomDensity(rng, 4);
  const Eigen::MatrixXcd h = make_sx(s).matrix;
  const DensityMatrix out = lindblad_rk4(rho, {make_sz(s).matrix}, h, 1.0, 1e-4);
  EXPECT_NEAR(out.trace().real(), 1.0, 1e-10);
  EXPECT_LE((out - out.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_THROW(lindblad_rk4(rho, {}, h, 1.0, 2.0), std::invalid_argument);
}

TEST(CoherentError, SmallAngleFidelityLoss) {
  // 1 - |<psi|e^{i eps S_Z}|psi>|^2 = eps^2 Var(S_Z) + O(eps^4).
  const CodeFamily code = build_z_code(3, 1);
  const SpinSpace& s = code.spin;
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(10);
  for (const auto& [levels, amp] : code.codewords[0].terms) {
    psi(s.index_of(levels[0])) = amp.to_double();
  }
  for (double eps : {1e-3, 1e-4}) {
    const double overlap = std::norm(psi.dot(coherent_z_error(s, psi, eps)));
    EXPECT_NEAR((1 - overlap) / (eps * eps), 6.25, 1e-3);
  }
}

TEST(OverRotation, MatchesSmallInfidelity) {
  EXPECT_EQ(over_rotation_angle(0), 0.0);
  EXPECT_NEAR(over_rotation_angle(1e-3), std::sqrt(1e-3), 1e-5);
  EXPECT_NEAR(std::pow(std::cos(over_rotation_angle(5e-3)), 2), 1 - 5e-3, 1e-15);
  EXPECT_THROW(over_rotation_angle(-0.1), std::invalid_argument);
}

TEST_F(CodeCycles, IdealCycleIsPerfect) {
  std::mt19937_64 rng(4);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 10; ++trial) {
    Eigen::VectorXcd psi(3);
    for (int k = 0; k < 3; ++k) psi(k) = Complex(g(rng), g(rng));
    psi.normalize();
    for (const QecCycle* c : {d3_, d5_}) {
      const CycleResult r = c->run(psi, {});
      EXPECT_NEAR(r.error, 0.0, 1e-12);
      EXPECT_NEAR(r.fidelity, 1.0, 1e-12);
    }
  }
}

TEST_F(CodeCycles, CorrectionHelpsAtShortTimes) {
  const Eigen::VectorXcd psi = uniform_superposition(3);
  NoiseParams noise;
  noise.cycle_time = 1e-2;
  const CycleResult bare = d3_->run(psi, noise, {.corrected = false});
  const CycleResult fixed = d3_->run(psi, noise);
  EXPECT_LT(fixed.error, bare.error);
  EXPECT_FALSE(bare.corrected);
  ASSERT_EQ(fixed.branch_probabilities.size(), 2u);
  EXPECT_LE(fixed.captured_weight, 1 + 1e-9);
  EXPECT_GT(fixed.branch_probabilities[1], 0.0);
  EXPECT_LT(fixed.branch_probabilities[1], fixed.branch_probabilities[0]);
}

TEST_F(CodeCycles, ErrorBranchWeightIsFirstOrder) {
  // p_1 ~ (gamma t / 2) * 2 <S_Z^2> = gamma t * 25/4 for small t.
  const Eigen::VectorXcd psi = uniform_superposition(3);
  NoiseParams noise;
  noise.cycle_time = 1e-5;
  const CycleResult r = d3_->run(psi, noise);
  EXPECT_NEAR(r.branch_probabilities[1] / noise.cycle_time, 6.25, 1e-2);
}

TEST_F(CodeCycles, ScalingExponents) {
  const std::vector<double> grid = log_grid(1e-4, 1e-2, 10);
  const Eigen::VectorXcd psi = uniform_superposition(3);
  const auto r3 = sweep_gain(*d3_, grid, psi);
  const auto r5 = sweep_gain(*d5_, grid, psi);
  std::vector<double> eu, e3, e5;
  for (size_t i = 0; i < grid.size(); ++i) {
    eu.push_back(r3[i].error_uncorrected);
    e3.push_back(r3[i].error_corrected);
    e5.push_back(r5[i].error_corrected);
    EXPECT_DOUBLE_EQ(r3[i].error_uncorrected, r5[i].error_uncorrected);
  }
  EXPECT_NEAR(log_log_slope(grid, eu), 1.0, 0.15);
  EXPECT_NEAR(log_log_slope(grid, e3), 2.0, 0.15);
  EXPECT_NEAR(log_log_slope(grid, e5), 3.0, 0.15);
  for (size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] <= 1e-3) EXPECT_GT(r5[i].gain, r3[i].gain);
  }
}

TEST_F(CodeCycles, GainFadesAtLongTimes) {
  const auto rows = sweep_gain(*d3_, {1e-3, 1e-1, 10.0}, uniform_superposition(3));
  EXPECT_GT(rows[0].gain, rows[1].gain);
  EXPECT_LT(rows[2].gain, 2.0);
  EXPECT_THROW(sweep_gain(*d3_, {1e-2, 1e-3}, uniform_superposition(3)), std::invalid_argument);
}

TEST_F(CodeCycles, UncorrectedErrorGrowsMonotonically) {
  const auto rows = sweep_gain(*d3_, log_grid(1e-5, 1, 21), uniform_superposition(3));
  for (size_t i = 1; i < rows.size(); ++i) {
    EXPECT_GT(rows[i].error_uncorrected, rows[i - 1].error_uncorrected);
  }
}

TEST_F(CodeCycles, GateErrorScalesWithInfidelity) {
  // With no idle time and no gate duration, E comes only from over-rotation.
  const Eigen::VectorXcd psi = uniform_superposition(3);
  std::vector<double> ratio;
  for (double eps : {1e-6, 1e-5, 1e-4}) {
    NoiseParams noise;
    noise.gate_infidelity = eps;
    const CycleResult r = d3_->run(psi, noise, {.corrected = true, .imperfect_gates = true});
    EXPECT_GT(r.error, 0.0);
    ratio.push_back(r.error / eps);
  }
  EXPECT_NEAR(ratio[1] / ratio[0], 1.0, 0.05);
  EXPECT_NEAR(ratio[2] / ratio[0], 1.0, 0.05);
}

TEST_F(CodeCycles, GateImperfectionWindows) {
  const std::vector<double> grid = log_grid(1e-5, 1, 41);
  const auto rows = sweep_gate_imperfections(*d3_, grid, uniform_superposition(3));
  std::vector<double> eu, ideal, tg, hi, lo;
  for (const auto& r : rows) {
    eu.push_back(r.error_uncorrected);
    ideal.push_back(r.error_ideal);
    tg.push_back(r.error_gate_time_only);
    hi.push_back(r.error_f999);
    lo.push_back(r.error_f995);
    EXPECT_LE(r.error_ideal, r.error_gate_time_only + 1e-15);
  }
  const AdvantageWindow w_ideal = advantage_window(grid, eu, ideal);
  const AdvantageWindow w_tg = advantage_window(grid, eu, tg);
  const AdvantageWindow w_hi = advantage_window(grid, eu, hi);
  const AdvantageWindow w_lo = advantage_window(grid, eu, lo);
  EXPECT_GE(w_ideal.points, w_tg.points);
  EXPECT_GE(w_tg.points, w_hi.points);
  EXPECT_GT(w_hi.points, 0);
  EXPECT_LT(w_lo.points, w_hi.points);
}

TEST(Sweeps, LogGridAndSlope) {
  const auto g = log_grid(1e-4, 1e-2, 3);
  ASSERT_EQ(g.size(), 3u);
  EXPECT_NEAR(g[1], 1e-3, 1e-18);
  EXPECT_NEAR(log_log_slope({1, 10, 100}, {2, 200, 20000}), 2.0, 1e-12);
  EXPECT_THROW(log_grid(0, 1, 3), std::invalid_argument);
  EXPECT_THROW(log_log_slope({1}, {1}), std::invalid_argument);
}

TEST(Sweeps, AdvantageWindowBounds) {
  const AdvantageWindow w = advantage_window({1, 2, 3, 4}, {1, 1, 1, 1}, {2, 0.5, 0.5, 2});
  EXPECT_EQ(w.points, 2);
  EXPECT_EQ(w.lo, 2);
  EXPECT_EQ(w.hi, 3);
  EXPECT_EQ(advantage_window({1}, {1}, {1}).points, 0);
}

TEST(Sweeps, CsvHeaders) {
  GainRow row{1e-3, 2e-3, 1e-5, 200};
  const std::string gain = gain_table_csv({row}, {row});
  EXPECT_EQ(gain.substr(0, gain.find('\n')),
            "t_over_T2,E_uncorrected,E_corr_d3,E_corr_d5,gain_d3,gain_d5");
  const std::string gates = gate_table_csv({GateSweepRow{}});
  EXPECT_EQ(gates.substr(0, gates.find('\n')),
            "t_over_T2,E_uncorrected,E_corr_ideal,E_corr_gate_time,E_corr_f999,E_corr_f995");
}

TEST(Cycle, RejectsBadLogicalStates) {
  const QecCycle c(build_z_code(2, 1));
  EXPECT_THROW(c.run(Eigen::VectorXcd::Ones(3), {}), std::invalid_argument);
  EXPECT_THROW(run_cycle(build_multiqudit_code(3, 1), uniform_superposition(3), {}),
               SynthesisError);
}

}  // namespace
}  // namespace spinqec

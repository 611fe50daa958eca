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

#include "commands.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace spinqec {
namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult Cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path TempFile(const std::string& name) {
  return std::filesystem::temp_directory_path() /
         (name + "." + std::to_string(::testing::UnitTest::GetInstance()->random_seed()));
}

TEST(Cli, CodesEmitsJson) {
  const CliResult r = Cli({"codes", "--d", "3", "--t", "1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["codewords"].size(), 3u);
}

TEST(Cli, CodesPrettyPrint) {
  const CliResult r = Cli({"codes", "--d", "3", "--t", "1", "--print"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("sqrt"), std::string::npos);
}

TEST(Cli, VerifyAllPasses) {
  const CliResult r = Cli({"verify", "--all", "--format", "pretty"});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  size_t lines = 0;
  for (char c : r.out) lines += c == '\n';
  EXPECT_EQ(lines, 11u);
}

TEST(Cli, PerturbedCodeFailsWithMomentLine) {
  const CliResult r = Cli({"verify", "--d", "3", "--t", "1", "--perturb", "swap-a1-b1", "--format",
                     "pretty"});
  EXPECT_EQ(r.code, kExitFail);
  EXPECT_NE(r.out.find("FAIL: <1_L|S_Z^2|1_L> = 33/4 != 25/4 = <0_L|S_Z^2|0_L>"),
            std::string::npos)
      << r.out;
}

TEST(Cli, GlobalFlagsAfterSubcommand) {
  const CliResult a = Cli({"--format", "pretty", "verify", "--d", "4"});
  const CliResult b = Cli({"verify", "--d", "4", "--format", "pretty"});
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(Cli({}).code, kExitUsage);
  EXPECT_EQ(Cli({"bogus"}).code, kExitUsage);
  EXPECT_EQ(Cli({"codes", "--d", "1"}).code, kExitUsage);
  EXPECT_EQ(Cli({"codes", "--t", "3"}).code, kExitUsage);
  EXPECT_EQ(Cli({"codes", "--qudits", "4"}).code, kExitUsage);
  EXPECT_EQ(Cli({"verify", "--perturb", "nonsense"}).code, kExitUsage);
  EXPECT_EQ(Cli({"pulses", "--qudits", "3"}).code, kExitUsage);
  EXPECT_EQ(Cli({"simulate", "--min", "1", "--max", "0.1"}).code, kExitUsage);
  EXPECT_EQ(Cli({"resources", "--distances", "4"}).code, kExitUsage);
  EXPECT_EQ(Cli({"codes", "--code-file", "x"}).code, kExitUsage);
  EXPECT_EQ(Cli({"verify", "--code-file", "/nonexistent/code.json"}).code, kExitUsage);
}

TEST(Cli, HelpExitsCleanly) {
  const CliResult r = Cli({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
}

TEST(Cli, CodeFileRoundTrip) {
  const std::filesystem::path path = TempFile("spinqec_code.json");
  ASSERT_EQ(Cli({"codes", "--d", "3", "--t", "2", "--out", path.string()}).code, kExitOk);
  const CliResult r = Cli({"verify", "--code-file", path.string()});
  EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["verdict"], "PASS");
  std::filesystem::remove(path);
}

TEST(Cli, OutFileReceivesOutput) {
  const std::filesystem::path path = TempFile("spinqec_res.csv");
  const CliResult r = Cli({"resources", "--out", path.string()});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header,
            "d,distance,qudit_dim,logical_qubits,physical_qubits,log2_qubit_dim,"
            "beyond_constructions");
  std::filesystem::remove(path);
}

TEST(Cli, ResourcesJsonCarriesExactMappingDim) {
  const CliResult r = Cli({"resources", "--d-min", "3", "--d-max", "3", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(nlohmann::json::parse(r.out)[0]["qubit_mapping_dim"], "17179869184");
}

TEST(Cli, PulsesBothSequences) {
  const CliResult r = Cli({"pulses", "--which", "both"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j.contains("encoder"));
  EXPECT_EQ(j["decoder"]["branches"].size(), 2u);
}

TEST(Cli, SimulateIsDeterministic) {
  const std::vector<std::string> args = {"simulate", "--sweep", "gates",  "--min",
                                         "1e-3",     "--max",    "1e-1",   "--points",
                                         "4"};
  const CliResult a = Cli(args);
  const CliResult b = Cli(args);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.substr(0, a.out.find('\n')),
            "t_over_T2,E_uncorrected,E_corr_ideal,E_corr_gate_time,E_corr_f999,E_corr_f995");
}

TEST(Cli, SimulateJson) {
  const CliResult r = Cli({"simulate", "--points", "2", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_GT(j[0]["gain_d3"].get<double>(), 1.0);
}

}  // namespace
}  // namespace spinqec

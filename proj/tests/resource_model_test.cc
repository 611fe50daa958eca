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

#include "spinqec/resource_model.h"

#include <gtest/gtest.h>

#include <cmath>

#include "spinqec/code_builder.h"

namespace spinqec {
namespace {

// log2 of an exact power of two.
int ExactLog2(const BigInt& v) {
  int n = 0;
  BigInt x = v;
  while (x > 1) {
    EXPECT_EQ(x % 2, 0);
    x /= 2;
    ++n;
  }
  return n;
}

TEST(QuditDim, ReferenceValues) {
  EXPECT_EQ(qudit_dim(3, 1), 30);
  EXPECT_EQ(qudit_dim(3, 2), 100);
  EXPECT_EQ(qudit_dim(2, 1), 18);
  EXPECT_EQ(qudit_dim(8, 1), 90);
  EXPECT_THROW(qudit_dim(1, 1), std::invalid_argument);
  EXPECT_THROW(qudit_dim(3, 0), std::invalid_argument);
}

TEST(QuditDim, MatchesBuiltSpin) {
  for (int d = 2; d <= 8; ++d) {
    for (int t : {1, 2}) {
      EXPECT_EQ(qudit_dim(d, t), build_xyz_code(d, t).spin.dimension()) << d << "," << t;
    }
  }
}

TEST(QubitMapping, DefaultsUseRotatedSurfaceCode) {
  EXPECT_EQ(default_physical_per_logical(3), 17);
  EXPECT_EQ(default_physical_per_logical(5), 49);
  EXPECT_THROW(default_physical_per_logical(4), std::invalid_argument);
  EXPECT_THROW(default_physical_per_logical(1), std::invalid_argument);
  EXPECT_EQ(logical_qubit_count(2), 1);
  EXPECT_EQ(logical_qubit_count(3), 2);
  EXPECT_EQ(logical_qubit_count(8), 3);
  EXPECT_EQ(logical_qubit_count(9), 4);
  EXPECT_EQ(ExactLog2(qubit_mapping_dim(3, 3)), 34);
  EXPECT_EQ(ExactLog2(qubit_mapping_dim(2, 3)), 17);
  EXPECT_EQ(ExactLog2(qubit_mapping_dim(3, 3, 9)), 18);
}

TEST(Comparison, DistanceThreeRows) {
  std::vector<int> ds;
  for (int d = 2; d <= 8; ++d) ds.push_back(d);
  const auto rows = emit_comparison(ds, {3});
  ASSERT_EQ(rows.size(), 7u);
  EXPECT_EQ(rows.front().qudit_dim, 18);
  EXPECT_EQ(rows.back().qudit_dim, 90);
  for (const ResourceRow& r : rows) {
    EXPECT_FALSE(r.beyond_constructions);
    EXPECT_GT(r.qubit_mapping_dim, BigInt(r.qudit_dim));
    EXPECT_EQ(ExactLog2(r.qubit_mapping_dim), r.physical_qubits);
  }
}

TEST(Comparison, BothDistancesForQutrit) {
  const auto rows = emit_comparison({3}, {3, 5});
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].qudit_dim, 30);
  EXPECT_EQ(rows[1].qudit_dim, 100);
  EXPECT_EQ(rows[1].physical_qubits, 98);
  EXPECT_TRUE(resource_row(3, 7).beyond_constructions);
  EXPECT_THROW(emit_comparison({}, {3}), std::invalid_argument);
}

TEST(Comparison, SeparationGrowsWithDistance) {
  for (int d = 2; d <= 8; ++d) {
    double prev = -1e300;
    for (int distance : {3, 5, 7, 9}) {
      const ResourceRow r = resource_row(d, distance);
      const double gap = r.physical_qubits - std::log2(static_cast<double>(r.qudit_dim));
      EXPECT_GT(gap, prev);
      prev = gap;
    }
  }
}

// The qubit count rounds log2(d) up, so the separation jumps at powers of two
// and sags in between while the qudit dimension keeps growing.
TEST(Comparison, SeparationIsStepwiseInD) {
  auto gap = [](int d) {
    const ResourceRow r = resource_row(d, 3);
    return r.physical_qubits - std::log2(static_cast<double>(r.qudit_dim));
  };
  EXPECT_GT(gap(3), gap(2));
  EXPECT_LT(gap(4), gap(3));
  EXPECT_GT(gap(5), gap(4));
  for (int d = 2; d <= 8; ++d) EXPECT_GT(gap(d), 12.0);
}

TEST(Csv, HeaderAndRow) {
  const std::string csv = comparison_csv(emit_comparison({3}, {3}));
  EXPECT_EQ(csv,
            "d,distance,qudit_dim,logical_qubits,physical_qubits,log2_qubit_dim,"
            "beyond_constructions\n3,3,30,2,34,34,0\n");
}

}  // namespace
}  // namespace spinqec

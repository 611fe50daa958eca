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

// Hilbert-space cost of one protected logical qudit: a single large spin
// versus ceil(log2 d) logical qubits, each a surface-code patch.

#ifndef SPINQEC_RESOURCE_MODEL_H_
#define SPINQEC_RESOURCE_MODEL_H_

#include <string>
#include <vector>

#include "spinqec/rational.h"

namespace spinqec {

/// Rotated surface code: distance^2 data plus distance^2 - 1 ancilla qubits.
int default_physical_per_logical(int distance);

/// 2 S_xyz + 1 = 2t(2t+1)(2d-1) for the single-spin XYZ code.
long long qudit_dim(int d, int t);

/// ceil(log2 d).
int logical_qubit_count(int d);

/// 2^(physical_per_logical * ceil(log2 d)). physical_per_logical <= 0
/// selects the surface-code default.
BigInt qubit_mapping_dim(int d, int distance, int physical_per_logical = 0);

struct ResourceRow {
  int d = 0;
  int distance = 0;
  long long qudit_dim = 0;
  int logical_qubits = 0;
  int physical_qubits = 0;      // total over all logical qubits
  BigInt qubit_mapping_dim;
  bool beyond_constructions = false;  // distance >= 7: no codewords built
};

ResourceRow resource_row(int d, int distance, int physical_per_logical = 0);

std::vector<ResourceRow> emit_comparison(const std::vector<int>& d_values,
                                         const std::vector<int>& distances,
                                         int physical_per_logical = 0);

/// Header d,distance,qudit_dim,logical_qubits,physical_qubits,log2_qubit_dim,
/// beyond_constructions.
std::string comparison_csv(const std::vector<ResourceRow>& rows);

}  // namespace spinqec

#endif  // SPINQEC_RESOURCE_MODEL_H_

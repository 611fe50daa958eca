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

#include <sstream>
#include <stdexcept>

namespace spinqec {
namespace {

void check_distance(int distance) {
  if (distance < 3 || distance % 2 == 0) {
    throw std::invalid_argument("code distance must be odd and >= 3");
  }
}

void check_d(int d) {
  if (d < 2) throw std::invalid_argument("d must be >= 2");
}

}  // namespace

int default_physical_per_logical(int distance) {
  check_distance(distance);
  return 2 * distance * distance - 1;
}

long long qudit_dim(int d, int t) {
  check_d(d);
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  return 2LL * t * (2 * t + 1) * (2LL * d - 1);
}

int logical_qubit_count(int d) {
  check_d(d);
  int n = 0;
  while ((1LL << n) < d) ++n;
  return n;
}

BigInt qubit_mapping_dim(int d, int distance, int physical_per_logical) {
  const int per = physical_per_logical > 0 ? physical_per_logical
                                           : default_physical_per_logical(distance);
  check_distance(distance);
  BigInt one = 1;
  return one << (per * logical_qubit_count(d));
}

ResourceRow resource_row(int d, int distance, int physical_per_logical) {
  check_distance(distance);
  const int per = physical_per_logical > 0 ? physical_per_logical
                                           : default_physical_per_logical(distance);
  ResourceRow row;
  row.d = d;
  row.distance = distance;
  const int t = (distance - 1) / 2;
  row.qudit_dim = qudit_dim(d, t);
  row.logical_qubits = logical_qubit_count(d);
  row.physical_qubits = per * row.logical_qubits;
  row.qubit_mapping_dim = qubit_mapping_dim(d, distance, per);
  row.beyond_constructions = t > 2;
  return row;
}

std::vector<ResourceRow> emit_comparison(const std::vector<int>& d_values,
                                         const std::vector<int>& distances,
                                         int physical_per_logical) {
  if (d_values.empty() || distances.empty()) throw std::invalid_argument("empty range");
  std::vector<ResourceRow> rows;
  for (int distance : distances) {
    for (int d : d_values) rows.push_back(resource_row(d, distance, physical_per_logical));
  }
  return rows;
}

std::string comparison_csv(const std::vector<ResourceRow>& rows) {
  std::ostringstream out;
  out << "d,distance,qudit_dim,logical_qubits,physical_qubits,log2_qubit_dim,"
         "beyond_constructions\n";
  for (const ResourceRow& r : rows) {
    // The mapping dimension is an exact power of two, so its log is the
    // physical qubit count.
    out << r.d << "," << r.distance << "," << r.qudit_dim << "," << r.logical_qubits << ","
        << r.physical_qubits << "," << r.physical_qubits << ","
        << (r.beyond_constructions ? 1 : 0) << "\n";
  }
  return out.str();
}

}  // namespace spinqec

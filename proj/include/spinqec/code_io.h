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

// Codeword files. Amplitudes are written as (sign, p, q) with value
// sign * sqrt(p/q); no floating point ever appears in a code file. p and q
// are JSON integers, or decimal strings when they exceed 64 bits.
//
//   {"name": ..., "spec": {"d":3,"t":1,"model":"z","n_qudits":1},
//    "spin": 9,                                   // 2S
//    "codewords": [{"label":0, "terms":[{"levels":[-5], "sign":1,
//                                        "p":1, "q":2}, ...]}, ...]}

#ifndef SPINQEC_CODE_IO_H_
#define SPINQEC_CODE_IO_H_

#include <string>

#include "json.hpp"
#include "spinqec/code_builder.h"

namespace spinqec {

nlohmann::json code_to_json(const CodeFamily& code);
/// Throws std::invalid_argument on malformed input.
CodeFamily code_from_json(const nlohmann::json& j);

/// Ket notation with mirror pairs grouped, one codeword per line.
std::string render_code(const CodeFamily& code);

}  // namespace spinqec

#endif  // SPINQEC_CODE_IO_H_

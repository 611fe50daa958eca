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

#ifndef SPINQEC_TOOLS_COMMANDS_H_
#define SPINQEC_TOOLS_COMMANDS_H_

#include <ostream>
#include <string>
#include <vector>

namespace spinqec {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

/// Entry point of the spinqec tool. args excludes the program name. Output
/// goes to `out` unless --out names a file.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spinqec

#endif  // SPINQEC_TOOLS_COMMANDS_H_

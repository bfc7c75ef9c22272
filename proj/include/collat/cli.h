// Copyright 2026 The Collat Authors.
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

// Command-line front end, callable in-process so tests can drive it.
//
//   collat check FILE
//   collat solve FILE [--method M] [--out text|json|csv] [--jobs N]
//   collat verify FILE COLLATERALS
//   collat gen cycle|random|knapsack|fvs [params]
//
// Exit codes: 0 success, 2 a negative verdict (infeasible, not viable),
// 1 operational errors (I/O, parse, validation, refused methods).

#ifndef COLLAT_CLI_H_
#define COLLAT_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace collat {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNegative = 2;
inline constexpr int kReportVersion = 1;

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// 64-bit FNV-1a, rendered as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace collat

#endif  // COLLAT_CLI_H_

// Copyright 2026 The dcsm Authors
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

#ifndef DCSM_TOOLS_CLI_HPP
#define DCSM_TOOLS_CLI_HPP

#include <iosfwd>

namespace dcsm::tools {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;
inline constexpr int kExitInvariant = 3;

/// Largest column count any build command will produce.
inline constexpr unsigned long long kMaxBuildColumns = 1ULL << 20;

/// Runs the dcsm command line. Results go to `out`, diagnostics to `err`;
/// returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dcsm::tools

#endif  // DCSM_TOOLS_CLI_HPP

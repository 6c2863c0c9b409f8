// Copyright 2026 The ecpsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ECPSIM_TOOLS_CLI_HPP
#define ECPSIM_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ecpsim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInvariant = 3;

/// Runs one command line. args excludes the program name, e.g. {"run", "--protocol", "cat"}.
/// Normal output goes to out (or to --out when given), diagnostics to err.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// The fixed leading columns of the sweep CSV.
inline constexpr const char *kSweepHeader =
    "alpha,p_s,eta_bell_belltype,eta_ghzlike_belltype,eta_bell_1qubit,eta_ghzlike_1qubit";

}  // namespace ecpsim::cli

#endif

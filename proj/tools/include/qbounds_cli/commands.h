// Copyright 2026 The qbounds Authors
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
//
#ifndef QBOUNDS_CLI_COMMANDS_H_
#define QBOUNDS_CLI_COMMANDS_H_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qbounds/cochain_oracle.h"
#include "qbounds_cli/report.h"

namespace qbounds::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitComputation = 2,
  kExitReproduction = 3,
};

// Each command builds a report; failures are thrown as qbounds errors.
// An empty prime means: the rational field and every prime dividing |G|.
Report cmd_series(const std::string& spec, std::optional<std::uint64_t> p, int n_max);
Report cmd_swan(const std::string& spec, int n_max, const OracleOptions& options);
Report cmd_bounds(const std::string& spec, int n, const OracleOptions& options);
Report cmd_qs4(const std::string& spec, const OracleOptions& options);
Report cmd_oracle_check(const std::string& spec, std::optional<std::uint64_t> p, int n_max,
                        const OracleOptions& options);
Report cmd_reproduce();

// Exit status a finished report maps to.
int report_status(const Report& r);

// Full command-line entry point; argv[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qbounds::cli

#endif  // QBOUNDS_CLI_COMMANDS_H_

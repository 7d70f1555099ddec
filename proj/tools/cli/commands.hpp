// Copyright 2026 The fo2hier Authors
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

#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cli/report.hpp"
#include "fo2/monoid.hpp"

namespace fo2::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInconsistent = 2,
  kExitBudget = 3,
};

enum class Method { Both, Quotient, Identities };

struct AnalysisOutcome {
  AnalysisReport report;
  int exit_code = kExitOk;
  std::string message;  // set when exit_code != 0
};

/// Runs the level decision on `m` with the requested routes and fills the
/// report. Never throws for budget or inconsistency problems; those end up
/// in exit_code and message.
AnalysisOutcome analyze(const FiniteMonoid& m, std::string input,
                        std::optional<std::size_t> dfa_states, int max_m = 6,
                        Method method = Method::Both);

/// Entry point of the fo2hier tool. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace fo2::cli

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

#include <cstddef>
#include <optional>
#include <string>

#include "fo2/corpus.hpp"
#include "fo2/varieties.hpp"

namespace fo2::cli {

/// Output of `analyze`.
struct AnalysisReport {
  std::string input;
  std::optional<std::size_t> dfa_states;  // absent for monoid input
  std::size_t monoid_size = 0;
  bool aperiodic = false;
  bool in_da = false;
  bool j_trivial = false;
  bool r_trivial = false;
  bool l_trivial = false;
  std::optional<int> fo2_level;
  std::optional<Fo2Level> method_quotient;
  std::optional<Fo2Level> method_identities;
  bool agreement = true;
  std::optional<std::string> witness;
};

std::string to_text(const AnalysisReport& r);
std::string to_json(const AnalysisReport& r);

std::string to_json(const CorpusReport& r);

}  // namespace fo2::cli

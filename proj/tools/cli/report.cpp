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

#include "cli/report.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace fo2::cli {

namespace {

using nlohmann::ordered_json;

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string level_text(const std::optional<Fo2Level>& l) {
  return l ? l->to_string() : "not run";
}

ordered_json level_json(const std::optional<Fo2Level>& l) {
  return l ? ordered_json(l->to_string()) : ordered_json(nullptr);
}

}  // namespace

std::string to_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "input: " << r.input << '\n';
  out << "dfa_states: " << (r.dfa_states ? std::to_string(*r.dfa_states) : "n/a") << '\n';
  out << "monoid_size: " << r.monoid_size << '\n';
  out << "aperiodic: " << yes_no(r.aperiodic) << '\n';
  out << "in_da: " << yes_no(r.in_da) << '\n';
  out << "j_trivial: " << yes_no(r.j_trivial) << '\n';
  out << "r_trivial: " << yes_no(r.r_trivial) << '\n';
  out << "l_trivial: " << yes_no(r.l_trivial) << '\n';
  out << "fo2_level: " << (r.fo2_level ? std::to_string(*r.fo2_level) : "none") << '\n';
  out << "method_quotient: " << level_text(r.method_quotient) << '\n';
  out << "method_identities: " << level_text(r.method_identities) << '\n';
  out << "agreement: " << yes_no(r.agreement) << '\n';
  out << "witness: " << r.witness.value_or("none") << '\n';
  return out.str();
}

std::string to_json(const AnalysisReport& r) {
  ordered_json j;
  j["input"] = r.input;
  j["dfa_states"] = r.dfa_states ? ordered_json(*r.dfa_states) : ordered_json(nullptr);
  j["monoid_size"] = r.monoid_size;
  j["aperiodic"] = r.aperiodic;
  j["in_da"] = r.in_da;
  j["j_trivial"] = r.j_trivial;
  j["r_trivial"] = r.r_trivial;
  j["l_trivial"] = r.l_trivial;
  j["fo2_level"] = r.fo2_level ? ordered_json(*r.fo2_level) : ordered_json(nullptr);
  j["method_quotient"] = level_json(r.method_quotient);
  j["method_identities"] = level_json(r.method_identities);
  j["agreement"] = r.agreement;
  j["witness"] = r.witness ? ordered_json(*r.witness) : ordered_json(nullptr);
  return j.dump(2) + "\n";
}

std::string to_json(const CorpusReport& r) {
  ordered_json j;
  j["seed"] = r.options.seed;
  j["count"] = r.options.count;
  j["max_states"] = r.options.max_states;
  j["letters"] = r.options.letters;
  j["da_only"] = r.options.require_da;
  j["monoids"] = r.monoids;
  j["in_da"] = r.in_da;
  ordered_json levels = ordered_json::object();
  for (std::size_t v = 0; v < r.level_histogram.size(); ++v) {
    if (r.level_histogram[v] == 0) continue;
    levels[v == 0 ? std::string("NotFO2") : std::to_string(v)] = r.level_histogram[v];
  }
  if (r.exceeded > 0) levels["exceeded"] = r.exceeded;
  j["levels"] = levels;
  j["properties"] = ordered_json::array();
  for (const auto& p : r.properties) {
    ordered_json e;
    e["name"] = p.name;
    e["gating"] = p.gating;
    e["checked"] = p.checked;
    e["failed"] = p.failed;
    e["skipped"] = p.skipped;
    e["first_failure"] = p.failed ? ordered_json(p.first_failure) : ordered_json(nullptr);
    j["properties"].push_back(std::move(e));
  }
  j["straubing"] = ordered_json::array();
  for (const auto& s : r.straubing) {
    j["straubing"].push_back({{"m", s.level},
                              {"compared", s.compared},
                              {"agree", s.agree},
                              {"skipped", s.skipped},
                              {"note", "experimental, interpreted recursion"}});
  }
  j["ok"] = r.ok();
  return j.dump(2) + "\n";
}

}  // namespace fo2::cli

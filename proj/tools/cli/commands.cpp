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

#include "cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fo2/corpus.hpp"
#include "fo2/dfa.hpp"
#include "fo2/error.hpp"
#include "fo2/greens.hpp"
#include "fo2/identities.hpp"
#include "fo2/oracle.hpp"
#include "fo2/ranker.hpp"
#include "fo2/ranker_relations.hpp"
#include "fo2/regex.hpp"
#include "fo2/varieties.hpp"

namespace fo2::cli {

namespace {

using nlohmann::ordered_json;

struct InputOptions {
  std::string regex;
  std::string dfa_path;
  std::string monoid_path;
  std::string alphabet;
  bool has_alphabet = false;
};

struct LoadedInput {
  std::string description;
  std::optional<std::size_t> dfa_states;
  std::optional<FiniteMonoid> monoid;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void add_input_options(CLI::App* sub, InputOptions& in) {
  sub->add_option("--regex", in.regex, "Regular expression");
  sub->add_option("--dfa", in.dfa_path, "DFA file");
  sub->add_option("--monoid", in.monoid_path, "Monoid table file");
  sub->add_option("--alphabet", in.alphabet, "Alphabet for --regex, e.g. \"ab\"");
}

LoadedInput load_input(const CLI::App* sub, const InputOptions& in) {
  const int given = static_cast<int>(sub->count("--regex") > 0) +
                    static_cast<int>(sub->count("--dfa") > 0) +
                    static_cast<int>(sub->count("--monoid") > 0);
  if (given != 1) {
    throw InvalidInput("exactly one of --regex, --dfa, --monoid is required");
  }
  LoadedInput out;
  if (sub->count("--monoid")) {
    out.description = "monoid " + in.monoid_path;
    out.monoid = parse_monoid_file(read_file(in.monoid_path));
    return out;
  }
  Dfa dfa = [&] {
    if (sub->count("--regex")) {
      out.description = "regex " + in.regex;
      std::optional<std::string_view> alphabet;
      std::string letters;
      if (sub->count("--alphabet")) {
        for (char c : in.alphabet) {
          if (c != ' ' && c != ',') letters += c;
        }
        alphabet = letters;
      }
      return regex_to_min_dfa(parse_regex(in.regex, alphabet));
    }
    out.description = "dfa " + in.dfa_path;
    return minimize(parse_dfa_file(read_file(in.dfa_path)));
  }();
  out.dfa_states = dfa.num_states();
  out.monoid = transition_monoid(dfa);
  return out;
}

std::string format_assignment(const FiniteMonoid& m, const std::vector<Element>& xs) {
  const auto labels = element_labels(m);
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ' ';
    s += "x" + std::to_string(i + 1) + "=" + labels[xs[i]];
  }
  return s;
}

// The identity that separates M from the level below its answer.
std::optional<std::string> identity_witness(const FiniteMonoid& m, const Fo2Level& level) {
  try {
    auto [da_l, da_r] = da_identity();
    auto da = satisfies_identity(m, da_l, da_r);
    if (!da.holds) return "DA: " + format_assignment(m, *da.witness);
    if (level.kind != Fo2Level::Kind::Level || level.value < 2) return std::nullopt;
    const int k = level.value;
    auto r = satisfies_identity(m, phi_word(build_G(k)), phi_word(build_I(k)));
    if (!r.holds) return "R_" + std::to_string(k) + ": " + format_assignment(m, *r.witness);
    auto l = satisfies_identity(m, phi_word(mirror(build_G(k))),
                                phi_word(mirror(build_I(k))));
    if (!l.holds) return "L_" + std::to_string(k) + ": " + format_assignment(m, *l.witness);
  } catch (const BudgetExceeded&) {
  }
  return std::nullopt;
}

std::string relation_name(RankerRelationKind kind, int m) {
  const char* sym = kind == RankerRelationKind::Right  ? "|>"
                    : kind == RankerRelationKind::Left ? "<|"
                                                       : "==";
  return std::string(sym) + "_{" + std::to_string(m) + ",n}";
}

int cmd_analyze(const CLI::App* sub, const InputOptions& in, int max_m,
                const std::string& method, bool json, std::ostream& out,
                std::ostream& err) {
  LoadedInput input = load_input(sub, in);
  Method mth = method == "quotient"     ? Method::Quotient
               : method == "identities" ? Method::Identities
                                        : Method::Both;
  AnalysisOutcome o = analyze(*input.monoid, input.description, input.dfa_states, max_m, mth);
  out << (json ? to_json(o.report) : to_text(o.report));
  if (o.exit_code != kExitOk) err << "error: " << o.message << '\n';
  return o.exit_code;
}

int cmd_oracle(const CLI::App* sub, const InputOptions& in, int m, int max_n,
               int max_len, const std::string& relation, bool json,
               std::ostream& out) {
  LoadedInput input = load_input(sub, in);
  RankerRelationKind kind = relation == "right" ? RankerRelationKind::Right
                            : relation == "left" ? RankerRelationKind::Left
                                                 : RankerRelationKind::WeisImmerman;
  OracleSearch s = oracle_search(*input.monoid, kind, m, max_n, max_len);
  if (json) {
    ordered_json j;
    j["input"] = input.description;
    j["relation"] = relation_name(kind, m);
    j["m"] = m;
    j["max_n"] = max_n;
    j["max_len"] = max_len;
    j["n"] = s.n ? ordered_json(*s.n) : ordered_json(nullptr);
    j["words"] = s.last.words;
    j["classes"] = s.last.classes;
    j["counterexample"] = s.last.counterexample
                              ? ordered_json::array({s.last.counterexample->first,
                                                     s.last.counterexample->second})
                              : ordered_json(nullptr);
    out << j.dump(2) << '\n';
  } else {
    out << "input: " << input.description << '\n';
    out << "relation: " << relation_name(kind, m) << '\n';
    out << "max_n: " << max_n << '\n';
    out << "max_len: " << max_len << '\n';
    if (s.n) {
      out << "result: n = " << *s.n << '\n';
    } else {
      out << "result: none up to n = " << max_n << '\n';
    }
    out << "words: " << s.last.words << '\n';
    out << "classes: " << s.last.classes << '\n';
    if (s.last.counterexample) {
      auto show = [](const Word& w) { return w.empty() ? std::string("<empty>") : w; };
      out << "counterexample: " << show(s.last.counterexample->first) << " / "
          << show(s.last.counterexample->second) << '\n';
    }
  }
  return kExitOk;
}

int cmd_rankers(const CLI::App* sub, const std::string& word,
                const std::string& ranker_text, const std::string& alphabet,
                int m, int n, const std::string& start, bool json,
                std::ostream& out) {
  if (sub->count("--ranker") == 0) {
    if (sub->count("--alphabet") == 0) {
      throw InvalidInput("either --ranker or --alphabet is required");
    }
    StartDir dir = start == "x" ? StartDir::X : start == "y" ? StartDir::Y : StartDir::Either;
    const auto rankers = enumerate_rankers(Alphabet(alphabet), m, n, dir);
    if (json) {
      ordered_json j = ordered_json::array();
      for (const auto& r : rankers) j.push_back(r.to_string());
      out << j.dump(2) << '\n';
    } else {
      for (const auto& r : rankers) out << r.to_string() << '\n';
    }
    return kExitOk;
  }
  if (sub->count("--word") == 0) throw InvalidInput("--word is required with --ranker");
  const Ranker r = parse_ranker(ranker_text);
  const auto pos = eval_ranker(r, word);
  const bool condensed = is_condensed(r, word);
  if (json) {
    ordered_json j;
    j["word"] = word;
    j["ranker"] = r.to_string();
    j["position"] = pos ? ordered_json(*pos) : ordered_json(nullptr);
    j["condensed"] = condensed;
    out << j.dump(2) << '\n';
  } else {
    out << "position: " << (pos ? std::to_string(*pos) : "undefined") << '\n';
    out << "condensed: " << (condensed ? "true" : "false") << '\n';
  }
  return kExitOk;
}

int cmd_greens(const CLI::App* sub, const InputOptions& in, bool json, std::ostream& out) {
  LoadedInput input = load_input(sub, in);
  const FiniteMonoid& m = *input.monoid;
  const GreensData g = greens(m);
  const auto labels = element_labels(m);
  const std::size_t nj = num_classes(g.j_class);
  const std::size_t nr = num_classes(g.r_class);
  const std::size_t nl = num_classes(g.l_class);
  if (json) {
    ordered_json j;
    j["input"] = input.description;
    j["elements"] = ordered_json::array();
    for (Element x = 0; x < m.size(); ++x) {
      j["elements"].push_back({{"index", x},
                               {"word", labels[x]},
                               {"j", g.j_class[x]},
                               {"r", g.r_class[x]},
                               {"l", g.l_class[x]},
                               {"idempotent", m.is_idempotent(x)}});
    }
    j["size"] = m.size();
    j["j_classes"] = nj;
    j["r_classes"] = nr;
    j["l_classes"] = nl;
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  std::size_t width = 4;
  for (const auto& l : labels) width = std::max(width, l.size());
  out << "input: " << input.description << '\n';
  out << "size: " << m.size() << '\n';
  out << "j_classes: " << nj << '\n';
  out << "r_classes: " << nr << '\n';
  out << "l_classes: " << nl << '\n';
  out << "index  " << std::string("word") << std::string(width - 4, ' ')
      << "  J    R    L    idempotent\n";
  for (Element x = 0; x < m.size(); ++x) {
    std::string idx = std::to_string(x);
    std::string j = std::to_string(g.j_class[x]);
    std::string r = std::to_string(g.r_class[x]);
    std::string l = std::to_string(g.l_class[x]);
    out << idx << std::string(7 - std::min<std::size_t>(idx.size(), 6), ' ')
        << labels[x] << std::string(width - labels[x].size(), ' ') << "  "
        << j << std::string(5 - std::min<std::size_t>(j.size(), 4), ' ')
        << r << std::string(5 - std::min<std::size_t>(r.size(), 4), ' ')
        << l << std::string(5 - std::min<std::size_t>(l.size(), 4), ' ')
        << (m.is_idempotent(x) ? "*" : "") << '\n';
  }
  return kExitOk;
}

int cmd_corpus(const CorpusOptions& options, bool json, std::ostream& out) {
  CorpusReport r = run_corpus(options);
  out << (json ? to_json(r) : r.to_text());
  return r.ok() ? kExitOk : kExitInconsistent;
}

}  // namespace

AnalysisOutcome analyze(const FiniteMonoid& m, std::string input,
                        std::optional<std::size_t> dfa_states, int max_m,
                        Method method) {
  AnalysisOutcome o;
  AnalysisReport& r = o.report;
  r.input = std::move(input);
  r.dfa_states = dfa_states;
  r.monoid_size = m.size();
  r.aperiodic = is_aperiodic(m);
  r.in_da = is_in_da(m);
  r.j_trivial = is_j_trivial(m);
  r.r_trivial = is_r_trivial(m);
  r.l_trivial = is_l_trivial(m);

  auto fail = [&](int code, std::string message) {
    o.exit_code = code;
    o.message = std::move(message);
    return o;
  };

  if (method != Method::Identities) {
    try {
      r.method_quotient = fo2_level(m, max_m);
    } catch (const InconsistencyError& e) {
      return fail(kExitInconsistent, e.what());
    }
  }
  if (method != Method::Quotient) {
    try {
      r.method_identities = fo2_level_by_identities(m, max_m);
    } catch (const BudgetExceeded& e) {
      return fail(kExitBudget, e.what());
    }
  }
  const Fo2Level level = r.method_quotient ? *r.method_quotient : *r.method_identities;
  r.agreement = !(r.method_quotient && r.method_identities) ||
                *r.method_quotient == *r.method_identities;
  if (level.kind == Fo2Level::Kind::Level) r.fo2_level = level.value;
  if (r.method_identities) r.witness = identity_witness(m, level);

  if (!r.agreement) {
    return fail(kExitInconsistent, "methods disagree: quotient " +
                                       r.method_quotient->to_string() + ", identities " +
                                       r.method_identities->to_string());
  }
  if ((level.kind == Fo2Level::Kind::NotFO2) == r.in_da) {
    return fail(kExitInconsistent, "level " + level.to_string() +
                                       " contradicts DA membership");
  }
  if (level.kind == Fo2Level::Kind::Exceeded) {
    return fail(kExitBudget, "no level found up to --max-m " + std::to_string(max_m));
  }
  return o;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide the two-variable alternation level of regular languages", "fo2hier"};
  app.set_version_flag("--version", "fo2hier 0.1.0");
  app.require_subcommand(1);

  InputOptions in;
  bool json = false;

  auto* analyze_cmd = app.add_subcommand("analyze", "Syntactic monoid and FO2 level");
  add_input_options(analyze_cmd, in);
  int max_m = 6;
  std::string method = "both";
  analyze_cmd->add_option("--max-m", max_m, "Largest level searched")
      ->check(CLI::Range(1, 32));
  analyze_cmd->add_option("--method", method, "both, quotient or identities")
      ->check(CLI::IsMember({"both", "quotient", "identities"}));
  analyze_cmd->add_flag("--json", json, "JSON output");

  auto* oracle_cmd = app.add_subcommand("oracle", "Search n with ==_{m,n} inside the kernel");
  add_input_options(oracle_cmd, in);
  int oracle_m = 1, max_n = 8, max_len = 6;
  std::string relation = "wi";
  oracle_cmd->add_option("--m", oracle_m, "Number of blocks")->required()->check(CLI::Range(1, 16));
  oracle_cmd->add_option("--max-n", max_n, "Largest depth tried")->check(CLI::Range(1, 16));
  oracle_cmd->add_option("--max-len", max_len, "Longest word compared")->check(CLI::Range(0, 24));
  oracle_cmd->add_option("--relation", relation, "wi, right or left")
      ->check(CLI::IsMember({"wi", "right", "left"}));
  oracle_cmd->add_flag("--json", json, "JSON output");

  auto* rankers_cmd = app.add_subcommand("rankers", "Evaluate or list rankers");
  std::string word, ranker_text, alphabet, start = "either";
  int rm = 1, rn = 1;
  rankers_cmd->add_option("--word", word, "Word to evaluate on");
  rankers_cmd->add_option("--ranker", ranker_text, "Ranker such as \"Xa Yb Xc\"");
  rankers_cmd->add_option("--alphabet", alphabet, "List mode: alphabet");
  rankers_cmd->add_option("--m", rm, "List mode: max blocks")->check(CLI::Range(1, 8));
  rankers_cmd->add_option("--n", rn, "List mode: max depth")->check(CLI::Range(1, 8));
  rankers_cmd->add_option("--start", start, "List mode: x, y or either")
      ->check(CLI::IsMember({"x", "y", "either"}));
  rankers_cmd->add_flag("--json", json, "JSON output");

  auto* greens_cmd = app.add_subcommand("greens", "Elements with J/R/L classes");
  add_input_options(greens_cmd, in);
  greens_cmd->add_flag("--json", json, "JSON output");

  auto* corpus_cmd = app.add_subcommand("corpus", "Cross-validate on random minimal DFAs");
  CorpusOptions copt;
  bool no_word_suites = false;
  corpus_cmd->add_option("--seed", copt.seed, "Random seed");
  corpus_cmd->add_option("--count", copt.count, "Number of DFAs");
  corpus_cmd->add_option("--max-states", copt.max_states, "States per DFA")
      ->check(CLI::Range(1, 8));
  corpus_cmd->add_option("--letters", copt.letters, "Alphabet size")->check(CLI::Range(1, 8));
  corpus_cmd->add_flag("--da-only", copt.require_da, "Keep DFAs whose monoid is in DA");
  corpus_cmd->add_option("--max-n", copt.oracle_max_n, "Oracle depth bound")
      ->check(CLI::Range(1, 12));
  corpus_cmd->add_option("--max-len", copt.oracle_max_len, "Oracle word length")
      ->check(CLI::Range(0, 12));
  corpus_cmd->add_flag("--no-word-suites", no_word_suites, "Skip word-level checks");
  corpus_cmd->add_flag("--json", json, "JSON output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (analyze_cmd->parsed()) {
      return cmd_analyze(analyze_cmd, in, max_m, method, json, out, err);
    }
    if (oracle_cmd->parsed()) {
      return cmd_oracle(oracle_cmd, in, oracle_m, max_n, max_len, relation, json, out);
    }
    if (rankers_cmd->parsed()) {
      return cmd_rankers(rankers_cmd, word, ranker_text, alphabet, rm, rn, start, json, out);
    }
    if (greens_cmd->parsed()) return cmd_greens(greens_cmd, in, json, out);
    copt.word_suites = !no_word_suites;
    return cmd_corpus(copt, json, out);
  } catch (const ParseError& e) {
    err << "error: parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const InconsistencyError& e) {
    err << "error: inconsistency: " << e.what() << '\n';
    return kExitInconsistent;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace fo2::cli

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

#include "fo2/dfa.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <string>
#include <unordered_map>

namespace fo2 {

Dfa::Dfa(Alphabet alphabet, std::size_t num_states, State initial,
         std::vector<bool> finals, std::vector<State> delta)
    : alphabet_(std::move(alphabet)),
      num_states_(num_states),
      initial_(initial),
      finals_(std::move(finals)),
      delta_(std::move(delta)) {
  if (num_states_ == 0) throw InvalidInput("a DFA needs at least one state");
  if (initial_ >= num_states_) throw InvalidInput("initial state out of range");
  if (finals_.size() != num_states_) {
    throw InvalidInput("final-state vector does not match the state count");
  }
  if (delta_.size() != num_states_ * alphabet_.size()) {
    throw InvalidInput("transition table is not total");
  }
  for (State t : delta_) {
    if (t >= num_states_) throw InvalidInput("transition target out of range");
  }
}

State Dfa::run(std::string_view word) const {
  State s = initial_;
  for (char c : word) {
    int a = alphabet_.index_of(c);
    if (a < 0) {
      throw InvalidInput(std::string("letter '") + c + "' is not in the alphabet");
    }
    s = next(s, static_cast<std::size_t>(a));
  }
  return s;
}

namespace {

// Renumbers the states reachable from the initial state in BFS order.
Dfa reachable_bfs(const Dfa& dfa) {
  const std::size_t k = dfa.alphabet().size();
  std::vector<std::ptrdiff_t> order(dfa.num_states(), -1);
  std::vector<State> visit;
  order[dfa.initial()] = 0;
  visit.push_back(dfa.initial());
  for (std::size_t i = 0; i < visit.size(); ++i) {
    for (std::size_t a = 0; a < k; ++a) {
      State t = dfa.next(visit[i], a);
      if (order[t] < 0) {
        order[t] = static_cast<std::ptrdiff_t>(visit.size());
        visit.push_back(t);
      }
    }
  }
  std::vector<bool> finals(visit.size());
  std::vector<State> delta(visit.size() * k);
  for (std::size_t i = 0; i < visit.size(); ++i) {
    finals[i] = dfa.is_final(visit[i]);
    for (std::size_t a = 0; a < k; ++a) {
      delta[i * k + a] = static_cast<State>(order[dfa.next(visit[i], a)]);
    }
  }
  return Dfa(dfa.alphabet(), visit.size(), 0, std::move(finals),
             std::move(delta));
}

}  // namespace

Dfa minimize(const Dfa& input) {
  Dfa dfa = reachable_bfs(input);
  const std::size_t n = dfa.num_states();
  const std::size_t k = dfa.alphabet().size();

  // Moore refinement: block ids are recomputed from (block, successor blocks)
  // signatures until the number of blocks stabilizes.
  std::vector<std::size_t> block(n);
  for (State s = 0; s < n; ++s) block[s] = dfa.is_final(s) ? 1 : 0;
  std::size_t num_blocks = 0;
  for (;;) {
    std::map<std::vector<std::size_t>, std::size_t> ids;
    std::vector<std::size_t> next_block(n);
    std::vector<std::size_t> sig(k + 1);
    for (State s = 0; s < n; ++s) {
      sig[0] = block[s];
      for (std::size_t a = 0; a < k; ++a) sig[a + 1] = block[dfa.next(s, a)];
      auto [it, inserted] = ids.emplace(sig, ids.size());
      next_block[s] = it->second;
    }
    block.swap(next_block);
    if (ids.size() == num_blocks) break;
    num_blocks = ids.size();
  }

  std::vector<bool> finals(num_blocks);
  std::vector<State> delta(num_blocks * k);
  for (State s = 0; s < n; ++s) {
    finals[block[s]] = dfa.is_final(s);
    for (std::size_t a = 0; a < k; ++a) {
      delta[block[s] * k + a] = block[dfa.next(s, a)];
    }
  }
  return reachable_bfs(Dfa(dfa.alphabet(), num_blocks, block[dfa.initial()],
                           std::move(finals), std::move(delta)));
}

namespace {

struct Nfa {
  struct Node {
    std::vector<std::size_t> eps;
    std::vector<std::pair<std::size_t, std::size_t>> moves;  // (letter, to)
  };
  std::vector<Node> nodes;

  std::size_t add() {
    nodes.emplace_back();
    return nodes.size() - 1;
  }
};

struct Fragment {
  std::size_t start;
  std::size_t accept;
};

Fragment thompson(const Regex& r, const Alphabet& sigma, Nfa& nfa) {
  switch (r.kind()) {
    case Regex::Kind::EmptyWord: {
      Fragment f{nfa.add(), nfa.add()};
      nfa.nodes[f.start].eps.push_back(f.accept);
      return f;
    }
    case Regex::Kind::Letter: {
      Fragment f{nfa.add(), nfa.add()};
      nfa.nodes[f.start].moves.emplace_back(
          static_cast<std::size_t>(sigma.index_of(r.symbol())), f.accept);
      return f;
    }
    case Regex::Kind::Concat: {
      Fragment whole = thompson(r.children().front(), sigma, nfa);
      for (std::size_t i = 1; i < r.children().size(); ++i) {
        Fragment part = thompson(r.children()[i], sigma, nfa);
        nfa.nodes[whole.accept].eps.push_back(part.start);
        whole.accept = part.accept;
      }
      return whole;
    }
    case Regex::Kind::Union: {
      Fragment f{nfa.add(), nfa.add()};
      for (const auto& child : r.children()) {
        Fragment part = thompson(child, sigma, nfa);
        nfa.nodes[f.start].eps.push_back(part.start);
        nfa.nodes[part.accept].eps.push_back(f.accept);
      }
      return f;
    }
    case Regex::Kind::Star: {
      Fragment f{nfa.add(), nfa.add()};
      Fragment body = thompson(r.children().front(), sigma, nfa);
      nfa.nodes[f.start].eps.push_back(body.start);
      nfa.nodes[f.start].eps.push_back(f.accept);
      nfa.nodes[body.accept].eps.push_back(body.start);
      nfa.nodes[body.accept].eps.push_back(f.accept);
      return f;
    }
  }
  throw InvalidInput("unknown regex node");
}

std::vector<std::size_t> eps_closure(const Nfa& nfa,
                                     std::vector<std::size_t> seeds) {
  std::vector<bool> seen(nfa.nodes.size(), false);
  std::vector<std::size_t> stack;
  for (auto s : seeds) {
    if (!seen[s]) {
      seen[s] = true;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    auto s = stack.back();
    stack.pop_back();
    for (auto t : nfa.nodes[s].eps) {
      if (!seen[t]) {
        seen[t] = true;
        stack.push_back(t);
      }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < seen.size(); ++s) {
    if (seen[s]) out.push_back(s);
  }
  return out;
}

}  // namespace

Dfa regex_to_min_dfa(const RegexInput& input) {
  const Alphabet& sigma = input.alphabet;
  const std::size_t k = sigma.size();
  Nfa nfa;
  Fragment f = thompson(input.ast, sigma, nfa);

  std::map<std::vector<std::size_t>, State> ids;
  std::vector<std::vector<std::size_t>> subsets;
  auto intern = [&](std::vector<std::size_t> set) {
    auto [it, inserted] = ids.emplace(set, subsets.size());
    if (inserted) subsets.push_back(std::move(set));
    return it->second;
  };
  intern(eps_closure(nfa, {f.start}));

  std::vector<State> delta;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (std::size_t a = 0; a < k; ++a) {
      std::vector<std::size_t> targets;
      for (auto s : subsets[i]) {
        for (auto [letter, to] : nfa.nodes[s].moves) {
          if (letter == a) targets.push_back(to);
        }
      }
      State t = intern(eps_closure(nfa, std::move(targets)));
      delta.push_back(t);
    }
  }
  std::vector<bool> finals(subsets.size());
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    finals[i] = std::binary_search(subsets[i].begin(), subsets[i].end(),
                                   f.accept);
  }
  return minimize(Dfa(sigma, subsets.size(), 0, std::move(finals),
                      std::move(delta)));
}

namespace {

std::vector<std::string> split_tokens(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

// Splits "key: rest" and returns the tokens of rest; throws when the key
// does not match.
std::vector<std::string> header_values(std::string_view line,
                                       std::string_view key,
                                       std::size_t line_no) {
  auto colon = line.find(':');
  std::string head(line.substr(0, colon));
  auto toks = split_tokens(head);
  if (colon == std::string_view::npos || toks.size() != 1 || toks[0] != key) {
    throw ParseError("missing header line '" + std::string(key) + ":'",
                     line_no);
  }
  return split_tokens(line.substr(colon + 1));
}

}  // namespace

Dfa parse_dfa_file(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string>> lines;
  {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t no = 0;
    while (std::getline(in, line)) {
      ++no;
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      if (line.back() == '\r') line.pop_back();
      lines.emplace_back(no, line);
    }
  }
  static constexpr std::string_view kHeaders[] = {"alphabet", "states",
                                                  "initial", "final"};
  std::vector<std::vector<std::string>> header;
  for (std::size_t h = 0; h < 4; ++h) {
    if (h >= lines.size()) {
      throw ParseError("missing header line '" + std::string(kHeaders[h]) + ":'",
                       lines.empty() ? 0 : lines.back().first);
    }
    header.push_back(header_values(lines[h].second, kHeaders[h], lines[h].first));
  }

  std::string symbols;
  for (const auto& tok : header[0]) {
    if (tok.size() != 1) {
      throw ParseError("alphabet symbols must be single characters: '" + tok + "'",
                       lines[0].first);
    }
    if (symbols.find(tok[0]) != std::string::npos) {
      throw ParseError("repeated alphabet symbol '" + tok + "'", lines[0].first);
    }
    symbols += tok[0];
  }
  if (symbols.empty()) throw ParseError("empty alphabet", lines[0].first);
  Alphabet sigma(symbols);
  const std::size_t k = sigma.size();

  std::unordered_map<std::string, State> state_of;
  for (const auto& name : header[1]) {
    if (!state_of.emplace(name, state_of.size()).second) {
      throw ParseError("repeated state '" + name + "'", lines[1].first);
    }
  }
  const std::size_t declared = state_of.size();
  if (declared == 0) throw ParseError("no states declared", lines[1].first);

  auto lookup_state = [&](const std::string& name, std::size_t line_no) {
    auto it = state_of.find(name);
    if (it == state_of.end()) {
      throw ParseError("unknown state '" + name + "'", line_no);
    }
    return it->second;
  };

  if (header[2].size() != 1) {
    throw ParseError("expected exactly one initial state", lines[2].first);
  }
  State initial = lookup_state(header[2][0], lines[2].first);

  std::vector<bool> finals(declared, false);
  for (const auto& name : header[3]) finals[lookup_state(name, lines[3].first)] = true;

  constexpr State kMissing = static_cast<State>(-1);
  std::vector<State> delta(declared * k, kMissing);
  for (std::size_t i = 4; i < lines.size(); ++i) {
    auto [line_no, line] = lines[i];
    auto toks = split_tokens(line);
    if (toks.size() != 3) {
      throw ParseError("expected 'SRC SYM DST'", line_no);
    }
    State src = lookup_state(toks[0], line_no);
    if (toks[1].size() != 1 || !sigma.contains(toks[1][0])) {
      throw ParseError("unknown symbol '" + toks[1] + "'", line_no);
    }
    State dst = lookup_state(toks[2], line_no);
    auto& slot = delta[src * k + static_cast<std::size_t>(sigma.index_of(toks[1][0]))];
    if (slot != kMissing) throw ParseError("duplicate transition", line_no);
    slot = dst;
  }

  bool complete = std::find(delta.begin(), delta.end(), kMissing) == delta.end();
  std::size_t n = declared;
  if (!complete) {
    State sink = n++;
    finals.push_back(false);
    for (auto& t : delta) {
      if (t == kMissing) t = sink;
    }
    for (std::size_t a = 0; a < k; ++a) delta.push_back(sink);
  }
  return Dfa(std::move(sigma), n, initial, std::move(finals), std::move(delta));
}

}  // namespace fo2

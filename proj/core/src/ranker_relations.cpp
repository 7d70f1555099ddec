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

#include "fo2/ranker_relations.hpp"

#include <algorithm>
#include <set>

namespace fo2 {

namespace {

std::vector<Instruction> all_instructions(const Alphabet& alphabet) {
  std::vector<Instruction> out;
  for (Direction d : {Direction::X, Direction::Y}) {
    for (char c : alphabet.symbols()) out.push_back({d, c});
  }
  return out;
}

bool start_matches(Direction d, StartDir start) {
  return start == StartDir::Either ||
         (start == StartDir::X) == (d == Direction::X);
}

}  // namespace

std::vector<Ranker> enumerate_rankers(const Alphabet& alphabet, int m, int n,
                                      StartDir start) {
  std::vector<Ranker> out;
  if (m < 1 || n < 1) return out;
  RankerTable table(alphabet, m, n);
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (start_matches(table[i].start, start)) out.push_back(table[i].ranker);
  }
  return out;
}

RankerTable::RankerTable(Alphabet alphabet, int m, int n)
    : alphabet_(std::move(alphabet)), m_(m), n_(n) {
  if (m < 1 || n < 1) return;
  const auto instructions = all_instructions(alphabet_);
  for (const auto& ins : instructions) {
    entries_.push_back({Ranker({ins}), -1, 1, 1, ins.dir});
  }
  std::size_t level_begin = 0;
  for (int depth = 2; depth <= n; ++depth) {
    const std::size_t level_end = entries_.size();
    for (std::size_t p = level_begin; p < level_end; ++p) {
      for (const auto& ins : instructions) {
        const Entry& parent = entries_[p];
        int blocks = parent.blocks +
                     (ins.dir != parent.ranker.steps().back().dir ? 1 : 0);
        if (blocks > m) continue;
        auto steps = parent.ranker.steps();
        steps.push_back(ins);
        Direction start = parent.start;
        entries_.push_back({Ranker(std::move(steps)),
                            static_cast<std::ptrdiff_t>(p), depth, blocks,
                            start});
      }
    }
    level_begin = level_end;
  }
}

RankerTable::Evaluation RankerTable::evaluate(std::string_view u) const {
  const auto len = static_cast<Position>(u.size());
  const std::size_t k = entries_.size();
  Evaluation ev{std::vector<Position>(k, 0), std::vector<bool>(k, false)};
  // Interval chain (lo; hi) through the last instruction, and whether it
  // is still valid.
  std::vector<Position> lo(k, 0), hi(k, len + 1);
  std::vector<bool> chain_ok(k, false);

  auto step = [&](const Instruction& ins, Position from) -> Position {
    auto q = ins.dir == Direction::X ? next_pos(u, ins.letter, from)
                                     : prev_pos(u, ins.letter, from);
    return q ? *q : 0;
  };

  for (std::size_t i = 0; i < k; ++i) {
    const Entry& e = entries_[i];
    const Instruction& last = e.ranker.steps().back();
    if (e.parent < 0) {
      ev.pos[i] = step(last, last.dir == Direction::X ? 0 : len + 1);
      chain_ok[i] = true;
    } else {
      auto p = static_cast<std::size_t>(e.parent);
      if (ev.pos[p] != 0) ev.pos[i] = step(last, ev.pos[p]);
      if (chain_ok[p]) {
        const Instruction& prev = entries_[p].ranker.steps().back();
        Position cut = step(prev, prev.dir == Direction::X ? lo[p] : hi[p]);
        if (cut != 0 && lo[p] < cut && cut < hi[p]) {
          chain_ok[i] = true;
          lo[i] = lo[p];
          hi[i] = hi[p];
          (last.dir == Direction::X ? lo[i] : hi[i]) = cut;
        }
      }
    }
    ev.condensed[i] = chain_ok[i] && ev.pos[i] != 0 && lo[i] < ev.pos[i] &&
                      ev.pos[i] < hi[i];
  }
  return ev;
}

RankerRelation::RankerRelation(RankerRelationKind kind, Alphabet alphabet,
                               int m, int n)
    : kind_(kind), m_(m), n_(n), table_(std::move(alphabet), m, n) {
  if (m < 1 || n < 1) throw InvalidInput("ranker relations need m, n >= 1");
  if (kind == RankerRelationKind::WeisImmerman) return;
  const Direction main = kind == RankerRelationKind::Right ? Direction::X
                                                           : Direction::Y;
  const Direction other = main == Direction::X ? Direction::Y : Direction::X;
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_.in_class(i, main, m, n) || table_.in_class(i, other, m - 1, n - 1)) {
      condensed_scope_.push_back(i);
    }
  }
}

namespace {

void append_bits(const std::vector<bool>& bits, Signature& out) {
  std::uint32_t word = 0;
  int used = 0;
  for (bool b : bits) {
    word = (word << 1) | (b ? 1u : 0u);
    if (++used == 32) {
      out.push_back(word);
      word = 0;
      used = 0;
    }
  }
  if (used > 0) out.push_back(word);
}

constexpr std::uint32_t kClauseEnd = 0xFFFFFFFFu;
constexpr std::uint32_t kRunA = 0xFFFFFFF1u;
constexpr std::uint32_t kRunB = 0xFFFFFFF2u;
constexpr std::uint32_t kTied = 0xFFFFFFF3u;

}  // namespace

// The clause "ord(r(u), s(u)) = ord(r(v), s(v)) for r in A, s in B, both
// defined" is captured exactly by the left-to-right sequence of blocks:
// positions holding rankers of both sets stay single blocks, and maximal
// runs of positions holding only A (or only B) rankers are merged, since
// nothing in the clause orders them among themselves.
void RankerRelation::order_clause(const RankerTable::Evaluation& ev,
                                  std::size_t word_len, Direction a_dir,
                                  int a_m, int a_n, Direction b_dir, int b_m,
                                  int b_n, Signature& out) const {
  std::vector<std::vector<std::uint32_t>> at_a(word_len + 1), at_b(word_len + 1);
  for (std::size_t i = 0; i < table_.size(); ++i) {
    Position p = ev.pos[i];
    if (p == 0) continue;
    auto slot = static_cast<std::size_t>(p);
    if (table_.in_class(i, a_dir, a_m, a_n)) at_a[slot].push_back(static_cast<std::uint32_t>(i));
    if (table_.in_class(i, b_dir, b_m, b_n)) at_b[slot].push_back(static_cast<std::uint32_t>(i));
  }
  std::uint32_t run_tag = 0;
  std::vector<std::uint32_t> run;
  auto flush = [&] {
    if (run_tag == 0) return;
    std::sort(run.begin(), run.end());
    out.push_back(run_tag);
    out.push_back(static_cast<std::uint32_t>(run.size()));
    out.insert(out.end(), run.begin(), run.end());
    run.clear();
    run_tag = 0;
  };
  for (std::size_t p = 1; p <= word_len; ++p) {
    const auto& a = at_a[p];
    const auto& b = at_b[p];
    if (a.empty() && b.empty()) continue;
    if (!a.empty() && !b.empty()) {
      flush();
      out.push_back(kTied);
      out.push_back(static_cast<std::uint32_t>(a.size()));
      out.insert(out.end(), a.begin(), a.end());
      out.push_back(static_cast<std::uint32_t>(b.size()));
      out.insert(out.end(), b.begin(), b.end());
      continue;
    }
    std::uint32_t tag = a.empty() ? kRunB : kRunA;
    if (tag != run_tag) {
      flush();
      run_tag = tag;
    }
    const auto& ids = a.empty() ? b : a;
    run.insert(run.end(), ids.begin(), ids.end());
  }
  flush();
  out.push_back(kClauseEnd);
}

Signature RankerRelation::signature(std::string_view u) const {
  for (char c : u) {
    if (!table_.alphabet().contains(c)) {
      throw InvalidInput(std::string("letter '") + c +
                         "' is outside the relation's alphabet");
    }
  }
  const auto ev = table_.evaluate(u);
  Signature out;
  if (kind_ != RankerRelationKind::WeisImmerman) {
    std::vector<bool> bits;
    bits.reserve(condensed_scope_.size());
    for (auto i : condensed_scope_) bits.push_back(ev.condensed[i]);
    append_bits(bits, out);
    return out;
  }
  std::vector<bool> defined(table_.size());
  for (std::size_t i = 0; i < table_.size(); ++i) defined[i] = ev.pos[i] != 0;
  append_bits(defined, out);
  out.push_back(kClauseEnd);
  const auto X = Direction::X;
  const auto Y = Direction::Y;
  const int m = m_, n = n_;
  order_clause(ev, u.size(), X, m, n, Y, m, n - 1, out);
  order_clause(ev, u.size(), Y, m, n, X, m, n - 1, out);
  order_clause(ev, u.size(), X, m, n, X, m - 1, n - 1, out);
  order_clause(ev, u.size(), Y, m, n, Y, m - 1, n - 1, out);
  return out;
}

namespace {

Alphabet letters_of(std::string_view u, std::string_view v) {
  std::set<char> s(u.begin(), u.end());
  s.insert(v.begin(), v.end());
  return Alphabet(std::string(s.begin(), s.end()));
}

bool related(RankerRelationKind kind, std::string_view u, std::string_view v,
             int m, int n) {
  return RankerRelation(kind, letters_of(u, v), m, n).related(u, v);
}

}  // namespace

bool rel_right(std::string_view u, std::string_view v, int m, int n) {
  return related(RankerRelationKind::Right, u, v, m, n);
}

bool rel_left(std::string_view u, std::string_view v, int m, int n) {
  return related(RankerRelationKind::Left, u, v, m, n);
}

bool equiv_wi(std::string_view u, std::string_view v, int m, int n) {
  return related(RankerRelationKind::WeisImmerman, u, v, m, n);
}

std::vector<Word> words_up_to(const Alphabet& alphabet, int max_len) {
  std::vector<Word> out{Word{}};
  std::size_t level_begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (char c : alphabet.symbols()) out.push_back(out[i] + c);
    }
    level_begin = level_end;
  }
  return out;
}

std::vector<std::size_t> partition_words(const RankerRelation& rel,
                                         const std::vector<Word>& words) {
  std::map<Signature, std::size_t> ids;
  std::vector<std::size_t> labels(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    auto [it, inserted] = ids.emplace(rel.signature(words[i]), ids.size());
    labels[i] = it->second;
  }
  return labels;
}

const std::vector<std::size_t>& PartitionCache::get(const Alphabet& alphabet,
                                                    RankerRelationKind kind,
                                                    int m, int n, int max_len) {
  Key key{alphabet.symbols(), static_cast<int>(kind), m, n, max_len};
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  RankerRelation rel(kind, alphabet, m, n);
  auto labels = partition_words(rel, words_up_to(alphabet, max_len));
  return cache_.emplace(std::move(key), std::move(labels)).first->second;
}

}  // namespace fo2

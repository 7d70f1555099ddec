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

#include <cstdint>
#include <map>
#include <string_view>
#include <tuple>
#include <vector>

#include "fo2/alphabet.hpp"
#include "fo2/ranker.hpp"

namespace fo2 {

enum class StartDir { X, Y, Either };

/// All rankers over `alphabet` with depth <= n and at most m blocks whose
/// first instruction matches `start`. Depth-major, then lexicographic on
/// (direction, letter) with X before Y and letters in alphabet order.
/// Empty when m < 1 or n < 1.
std::vector<Ranker> enumerate_rankers(const Alphabet& alphabet, int m, int n,
                                      StartDir start);

/// R_{m,n} with per-ranker metadata and prefix links, evaluated on words in
/// one pass: each ranker is its parent (the prefix one shorter) plus one
/// instruction.
class RankerTable {
 public:
  RankerTable(Alphabet alphabet, int m, int n);

  struct Entry {
    Ranker ranker;
    std::ptrdiff_t parent;  // -1 for depth 1
    int depth;
    int blocks;
    Direction start;
  };

  /// Position 0 encodes "undefined".
  struct Evaluation {
    std::vector<Position> pos;
    std::vector<bool> condensed;
  };

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  int max_blocks() const noexcept { return m_; }
  int max_depth() const noexcept { return n_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const Entry& operator[](std::size_t i) const { return entries_[i]; }

  /// Whether entry i lies in R^{start}_{m,n}.
  bool in_class(std::size_t i, Direction start, int m, int n) const {
    const auto& e = entries_[i];
    return e.start == start && e.blocks <= m && e.depth <= n;
  }

  Evaluation evaluate(std::string_view u) const;

 private:
  Alphabet alphabet_;
  int m_;
  int n_;
  std::vector<Entry> entries_;
};

/// The three word relations built from rankers.
enum class RankerRelationKind {
  Right,        // u |>_{m,n} v: same condensed rankers in R^X_{m,n} u R^Y_{m-1,n-1}
  Left,         // u <|_{m,n} v: same condensed rankers in R^Y_{m,n} u R^X_{m-1,n-1}
  WeisImmerman  // u ==_{m,n} v: definedness on R_{m,n} plus four order clauses
};

using Signature = std::vector<std::uint32_t>;

/// A relation of the given kind for fixed (m, n) over a fixed alphabet.
/// signature(u) == signature(v) exactly when u and v are related, so the
/// relation partitions any word set by signature.
class RankerRelation {
 public:
  RankerRelation(RankerRelationKind kind, Alphabet alphabet, int m, int n);

  RankerRelationKind kind() const noexcept { return kind_; }
  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }
  const RankerTable& table() const noexcept { return table_; }

  Signature signature(std::string_view u) const;
  bool related(std::string_view u, std::string_view v) const {
    return signature(u) == signature(v);
  }

 private:
  void order_clause(const RankerTable::Evaluation& ev, std::size_t word_len,
                    Direction a_dir, int a_m, int a_n, Direction b_dir, int b_m,
                    int b_n, Signature& out) const;

  RankerRelationKind kind_;
  int m_;
  int n_;
  RankerTable table_;
  std::vector<std::size_t> condensed_scope_;
};

/// The relations on a single pair of words, over the letters occurring in
/// them. Require m, n >= 1.
bool rel_right(std::string_view u, std::string_view v, int m, int n);
bool rel_left(std::string_view u, std::string_view v, int m, int n);
bool equiv_wi(std::string_view u, std::string_view v, int m, int n);

/// All words of length <= max_len over `alphabet` in shortlex order.
std::vector<Word> words_up_to(const Alphabet& alphabet, int max_len);

/// Class labels of `words` under `rel`, numbered by first occurrence.
std::vector<std::size_t> partition_words(const RankerRelation& rel,
                                         const std::vector<Word>& words);

/// Memo of word partitions keyed by (alphabet, kind, m, n, max_len). Not
/// thread-safe; give each thread its own cache.
class PartitionCache {
 public:
  const std::vector<std::size_t>& get(const Alphabet& alphabet,
                                      RankerRelationKind kind, int m, int n,
                                      int max_len);

 private:
  using Key = std::tuple<std::string, int, int, int, int>;
  std::map<Key, std::vector<std::size_t>> cache_;
};

}  // namespace fo2

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
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fo2/alphabet.hpp"
#include "fo2/dfa.hpp"

namespace fo2 {

using Element = std::uint32_t;

/// The image of each letter under a morphism A* -> M.
struct Generators {
  Alphabet alphabet;
  std::vector<Element> images;  // images[i] = phi(alphabet[i])

  friend bool operator==(const Generators&, const Generators&) = default;
};

/// A finite monoid given by its multiplication table.
class FiniteMonoid {
 public:
  /// Validates closure, the identity law and associativity, and that the
  /// generators (when present) generate the whole monoid. Throws
  /// InvalidInput on any violation.
  FiniteMonoid(std::size_t size, std::vector<Element> table, Element identity,
               std::optional<Generators> gens = std::nullopt);

  /// Skips the O(N^3) associativity scan. Only for tables that are
  /// associative by construction (transformation monoids, quotients).
  static FiniteMonoid trusted(std::size_t size, std::vector<Element> table,
                              Element identity,
                              std::optional<Generators> gens);

  std::size_t size() const noexcept { return size_; }
  Element identity() const noexcept { return identity_; }

  Element mul(Element x, Element y) const noexcept {
    return table_[static_cast<std::size_t>(x) * size_ + y];
  }
  Element mul(Element x, Element y, Element z) const noexcept {
    return mul(mul(x, y), z);
  }

  const std::vector<Element>& table() const noexcept { return table_; }
  const std::optional<Generators>& gens() const noexcept { return gens_; }
  bool has_gens() const noexcept { return gens_.has_value(); }

  /// Unique idempotent power of x.
  Element omega(Element x) const { return omega_[x]; }
  bool is_idempotent(Element x) const noexcept { return mul(x, x) == x; }

  friend bool operator==(const FiniteMonoid& a, const FiniteMonoid& b) {
    return a.size_ == b.size_ && a.identity_ == b.identity_ &&
           a.table_ == b.table_ && a.gens_ == b.gens_;
  }

 private:
  struct Trusted {};
  FiniteMonoid(Trusted, std::size_t size, std::vector<Element> table,
               Element identity, std::optional<Generators> gens);
  void check_shape() const;
  void check_generated() const;
  void compute_omega();

  std::size_t size_;
  std::vector<Element> table_;
  Element identity_;
  std::optional<Generators> gens_;
  std::vector<Element> omega_;
};

/// Default cap on the number of elements of a transition monoid.
inline constexpr std::size_t kDefaultMonoidCap = 100000;

/// Transition monoid of a complete DFA; the syntactic monoid when `dfa`
/// is minimal. Elements are numbered in breadth-first discovery order from
/// the identity, extending by letters in alphabet order, so element i's
/// shortlex-least representative is a shortest word reaching it. Throws
/// BudgetExceeded beyond `cap` elements.
FiniteMonoid transition_monoid(const Dfa& dfa,
                               std::size_t cap = kDefaultMonoidCap);

/// phi(w). Throws InvalidInput when M has no generators or w uses a letter
/// outside the generator alphabet.
Element eval_word(const FiniteMonoid& m, std::string_view word);

/// Idempotents in increasing index order.
std::vector<Element> idempotents(const FiniteMonoid& m);

Element omega_power(const FiniteMonoid& m, Element x);

bool is_aperiodic(const FiniteMonoid& m);

/// (xy)^w x (xy)^w = (xy)^w for all x, y. On failure the first violating
/// pair in index order is stored in `witness` when given.
bool is_in_da(const FiniteMonoid& m,
              std::pair<Element, Element>* witness = nullptr);

/// Commutative and idempotent.
bool is_in_j1(const FiniteMonoid& m);

bool is_commutative(const FiniteMonoid& m);

/// Opposite monoid: table[i][j] := table[j][i]. Generators are kept, so a
/// word w maps to the image of its mirror image under the original morphism.
FiniteMonoid reverse(const FiniteMonoid& m);

/// Human-readable element names. With generators, the shortlex-least word
/// representing the element (`1` for the identity); otherwise the index.
std::vector<std::string> element_labels(const FiniteMonoid& m);

/// Monoid file format:
///
///   size: 3
///   identity: 0
///   gen a 1          (optional, any number)
///   table
///   0 1 2
///   1 1 1
///   2 2 2
///
/// `#` starts a comment line. Throws ParseError on malformed lines and
/// InvalidInput when the table is not a monoid.
FiniteMonoid parse_monoid_file(std::string_view text);

/// Inverse of parse_monoid_file.
std::string format_monoid_file(const FiniteMonoid& m);

}  // namespace fo2

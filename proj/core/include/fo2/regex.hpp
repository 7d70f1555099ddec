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
#include <string>
#include <string_view>
#include <vector>

#include "fo2/alphabet.hpp"

namespace fo2 {

/// Regular-expression syntax tree.
///
/// After normalization, Concat and Union nodes have at least two children
/// and never directly contain a child of their own kind.
class Regex {
 public:
  enum class Kind { EmptyWord, Letter, Concat, Union, Star };

  static Regex empty_word() { return Regex(Kind::EmptyWord, '\0', {}); }
  static Regex letter(char c) { return Regex(Kind::Letter, c, {}); }
  static Regex star(Regex child);
  /// Flattens nested concatenations; a single part is returned unchanged.
  static Regex concat(std::vector<Regex> parts);
  /// Flattens nested unions; a single part is returned unchanged.
  static Regex alternation(std::vector<Regex> parts);

  Kind kind() const noexcept { return kind_; }
  char symbol() const noexcept { return symbol_; }
  const std::vector<Regex>& children() const noexcept { return children_; }

  /// Fully parenthesized rendering that parses back to the same tree, e.g.
  /// `(a (a|b)*)`.
  std::string to_string() const;

  friend bool operator==(const Regex&, const Regex&) = default;

 private:
  Regex(Kind kind, char symbol, std::vector<Regex> children)
      : kind_(kind), symbol_(symbol), children_(std::move(children)) {}

  Kind kind_;
  char symbol_;
  std::vector<Regex> children_;
};

/// A parsed expression together with the alphabet it is interpreted over.
struct RegexInput {
  Regex ast;
  Alphabet alphabet;
};

/// Grammar:
///
///   union  := concat ('|' concat)*
///   concat := postfix postfix*
///   postfix:= atom '*'*
///   atom   := LETTER | '~' | '(' union ')'
///
/// LETTER is any printable ASCII character other than `()|*~#` and blanks.
/// Blanks are ignored. Without an explicit alphabet, the alphabet is the
/// sorted set of letters that occur. Throws ParseError on syntax errors,
/// on letters outside `alphabet`, and when the resulting alphabet is empty.
RegexInput parse_regex(std::string_view text,
                       std::optional<std::string_view> alphabet = std::nullopt);

}  // namespace fo2

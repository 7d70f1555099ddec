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

#include "fo2/regex.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace fo2 {

Regex Regex::star(Regex child) {
  if (child.kind_ == Kind::Star) return child;
  return Regex(Kind::Star, '\0', {std::move(child)});
}

Regex Regex::concat(std::vector<Regex> parts) {
  std::vector<Regex> flat;
  for (auto& p : parts) {
    if (p.kind_ == Kind::Concat) {
      for (auto& c : p.children_) flat.push_back(std::move(c));
    } else {
      flat.push_back(std::move(p));
    }
  }
  if (flat.size() == 1) return std::move(flat.front());
  return Regex(Kind::Concat, '\0', std::move(flat));
}

Regex Regex::alternation(std::vector<Regex> parts) {
  std::vector<Regex> flat;
  for (auto& p : parts) {
    if (p.kind_ == Kind::Union) {
      for (auto& c : p.children_) flat.push_back(std::move(c));
    } else {
      flat.push_back(std::move(p));
    }
  }
  if (flat.size() == 1) return std::move(flat.front());
  return Regex(Kind::Union, '\0', std::move(flat));
}

std::string Regex::to_string() const {
  switch (kind_) {
    case Kind::EmptyWord:
      return "~";
    case Kind::Letter:
      return std::string(1, symbol_);
    case Kind::Star:
      return children_[0].to_string() + "*";
    case Kind::Concat:
    case Kind::Union: {
      std::string out = "(";
      const char* sep = kind_ == Kind::Concat ? " " : "|";
      for (std::size_t i = 0; i < children_.size(); ++i) {
        if (i > 0) out += sep;
        out += children_[i].to_string();
      }
      return out + ")";
    }
  }
  return {};
}

namespace {

bool is_letter(char c) {
  auto u = static_cast<unsigned char>(c);
  if (!std::isgraph(u)) return false;
  switch (c) {
    case '(': case ')': case '|': case '*': case '~': case '#':
      return false;
    default:
      return true;
  }
}

class RegexParser {
 public:
  explicit RegexParser(std::string_view text) : text_(text) {}

  Regex parse() {
    Regex r = parse_union();
    skip_blanks();
    if (pos_ < text_.size()) {
      throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    }
    return r;
  }

 private:
  void skip_blanks() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool at_atom_start() {
    skip_blanks();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return c == '(' || c == '~' || is_letter(c);
  }

  Regex parse_union() {
    std::vector<Regex> parts;
    parts.push_back(parse_concat());
    skip_blanks();
    while (pos_ < text_.size() && text_[pos_] == '|') {
      ++pos_;
      parts.push_back(parse_concat());
      skip_blanks();
    }
    return Regex::alternation(std::move(parts));
  }

  Regex parse_concat() {
    if (!at_atom_start()) {
      throw ParseError("expected a letter, '~' or '('", pos_);
    }
    std::vector<Regex> parts;
    while (at_atom_start()) parts.push_back(parse_postfix());
    return Regex::concat(std::move(parts));
  }

  Regex parse_postfix() {
    Regex r = parse_atom();
    skip_blanks();
    while (pos_ < text_.size() && text_[pos_] == '*') {
      ++pos_;
      // r** == r*
      if (r.kind() != Regex::Kind::Star) r = Regex::star(std::move(r));
      skip_blanks();
    }
    return r;
  }

  Regex parse_atom() {
    char c = text_[pos_];
    if (c == '(') {
      std::size_t open = pos_++;
      Regex inner = parse_union();
      skip_blanks();
      if (pos_ >= text_.size() || text_[pos_] != ')') {
        throw ParseError("unbalanced '('", open);
      }
      ++pos_;
      return inner;
    }
    ++pos_;
    if (c == '~') return Regex::empty_word();
    return Regex::letter(c);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void collect_letters(const Regex& r, std::set<char>& out) {
  if (r.kind() == Regex::Kind::Letter) out.insert(r.symbol());
  for (const auto& c : r.children()) collect_letters(c, out);
}

}  // namespace

RegexInput parse_regex(std::string_view text,
                       std::optional<std::string_view> alphabet) {
  Regex ast = RegexParser(text).parse();
  std::set<char> used;
  collect_letters(ast, used);

  Alphabet sigma;
  if (alphabet) {
    for (char c : *alphabet) {
      if (!is_letter(c)) {
        throw ParseError(std::string("invalid alphabet symbol '") + c + "'", 0);
      }
    }
    sigma = Alphabet(*alphabet);
    for (char c : used) {
      if (!sigma.contains(c)) {
        auto at = text.find(c);
        throw ParseError(
            std::string("letter '") + c + "' is not in the declared alphabet",
            at == std::string_view::npos ? 0 : at);
      }
    }
  } else {
    sigma = Alphabet(std::string(used.begin(), used.end()));
  }
  if (sigma.empty()) throw ParseError("empty alphabet", 0);
  return {std::move(ast), std::move(sigma)};
}

}  // namespace fo2

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

#include "fo2/ranker.hpp"

#include <cctype>
#include <sstream>

namespace fo2 {

Ranker::Ranker(std::vector<Instruction> steps) : steps_(std::move(steps)) {
  if (steps_.empty()) throw InvalidInput("a ranker has at least one instruction");
}

std::size_t Ranker::blocks() const noexcept {
  std::size_t b = 1;
  for (std::size_t i = 1; i < steps_.size(); ++i) {
    if (steps_[i].dir != steps_[i - 1].dir) ++b;
  }
  return b;
}

std::string Ranker::to_string() const {
  std::string out;
  for (const auto& s : steps_) {
    if (!out.empty()) out += ' ';
    out += s.dir == Direction::X ? 'X' : 'Y';
    out += s.letter;
  }
  return out;
}

Ranker parse_ranker(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tok;
  std::vector<Instruction> steps;
  while (in >> tok) {
    if (tok.size() != 2 || (tok[0] != 'X' && tok[0] != 'Y') ||
        !std::isgraph(static_cast<unsigned char>(tok[1]))) {
      throw ParseError("bad ranker token '" + tok + "', expected e.g. Xa or Yb",
                       steps.size());
    }
    steps.push_back({tok[0] == 'X' ? Direction::X : Direction::Y, tok[1]});
  }
  if (steps.empty()) throw ParseError("empty ranker", 0);
  return Ranker(std::move(steps));
}

std::optional<Position> next_pos(std::string_view u, char a, Position x) {
  const auto n = static_cast<Position>(u.size());
  for (Position y = std::max(x + 1, 1); y <= n; ++y) {
    if (u[static_cast<std::size_t>(y - 1)] == a) return y;
  }
  return std::nullopt;
}

std::optional<Position> prev_pos(std::string_view u, char a, Position x) {
  const auto n = static_cast<Position>(u.size());
  for (Position y = std::min(x - 1, n); y >= 1; --y) {
    if (u[static_cast<std::size_t>(y - 1)] == a) return y;
  }
  return std::nullopt;
}

namespace {

std::optional<Position> step(std::string_view u, const Instruction& ins,
                             Position from) {
  return ins.dir == Direction::X ? next_pos(u, ins.letter, from)
                                 : prev_pos(u, ins.letter, from);
}

Position start_of(std::string_view u, Direction d) {
  return d == Direction::X ? 0 : static_cast<Position>(u.size()) + 1;
}

}  // namespace

std::optional<Position> eval_ranker(const Ranker& r, std::string_view u) {
  Position p = start_of(u, r.start());
  for (const auto& ins : r.steps()) {
    auto q = step(u, ins, p);
    if (!q) return std::nullopt;
    p = *q;
  }
  return p;
}

bool is_condensed(const Ranker& r, std::string_view u) {
  auto target = eval_ranker(r, u);
  if (!target) return false;
  const auto& z = r.steps();
  Position lo = 0;
  Position hi = static_cast<Position>(u.size()) + 1;
  for (std::size_t l = 0; l + 1 < z.size(); ++l) {
    // Rules for the pair Z_l Z_{l+1}: the cut is made at Z_l applied to the
    // border it starts from.
    const bool from_left = z[l].dir == Direction::X;
    auto cut = step(u, z[l], from_left ? lo : hi);
    if (!cut || *cut <= lo || *cut >= hi) return false;
    const bool next_right = z[l + 1].dir == Direction::X;
    if (next_right) {
      lo = *cut;  // XX, YX
    } else {
      hi = *cut;  // YY, XY
    }
  }
  return lo < *target && *target < hi;
}

bool is_condensed_by_overrun(const Ranker& r, std::string_view u) {
  std::vector<Position> visited;
  Position p = start_of(u, r.start());
  for (const auto& ins : r.steps()) {
    auto q = step(u, ins, p);
    if (!q) return false;
    for (Position v : visited) {
      bool passed = ins.dir == Direction::X ? (p < v && v <= *q)
                                            : (*q <= v && v < p);
      if (passed) return false;
    }
    p = *q;
    visited.push_back(p);
  }
  return true;
}

}  // namespace fo2

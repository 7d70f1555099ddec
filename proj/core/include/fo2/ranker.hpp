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

/// 1-based position in a word; 0 and |u|+1 are the virtual borders.
using Position = int;

enum class Direction : unsigned char { X, Y };

/// X_a: go to the next a-position. Y_a: go to the previous a-position.
struct Instruction {
  Direction dir;
  char letter;

  friend auto operator<=>(const Instruction&, const Instruction&) = default;
};

class Ranker {
 public:
  /// Throws InvalidInput when empty.
  explicit Ranker(std::vector<Instruction> steps);

  std::size_t depth() const noexcept { return steps_.size(); }
  /// Number of maximal runs of equal direction.
  std::size_t blocks() const noexcept;
  Direction start() const noexcept { return steps_.front().dir; }
  const std::vector<Instruction>& steps() const noexcept { return steps_; }

  /// e.g. `Xa Yb Xc`
  std::string to_string() const;

  friend auto operator<=>(const Ranker&, const Ranker&) = default;

 private:
  std::vector<Instruction> steps_;
};

/// Whitespace-separated tokens `Xa` / `Ya`. Throws ParseError.
Ranker parse_ranker(std::string_view text);

/// min{ y > x : u_y = a }
std::optional<Position> next_pos(std::string_view u, char a, Position x);
/// max{ y < x : u_y = a }
std::optional<Position> prev_pos(std::string_view u, char a, Position x);

/// Runs the instructions left to right. The first one starts at 0 (X) or
/// |u|+1 (Y).
std::optional<Position> eval_ranker(const Ranker& r, std::string_view u);

/// Condensedness through the chain of nested open intervals
/// (0; |u|+1) = (x_0; y_0) > (x_1; y_1) > ... containing r(u): for each
/// consecutive pair of instructions the interval is cut at the position
/// reached, on the side the next instruction moves away from.
bool is_condensed(const Ranker& r, std::string_view u);

/// Condensedness read as "no step passes over or lands on a previously
/// visited position". Kept as an independent check of is_condensed.
bool is_condensed_by_overrun(const Ranker& r, std::string_view u);

}  // namespace fo2

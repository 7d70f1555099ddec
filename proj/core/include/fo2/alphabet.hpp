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

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "fo2/error.hpp"

namespace fo2 {

/// Words are plain strings; each character is one letter.
using Word = std::string;

/// An ordered finite set of single-character symbols.
class Alphabet {
 public:
  Alphabet() { index_.fill(-1); }

  /// Throws InvalidInput on repeated symbols.
  explicit Alphabet(std::string_view symbols) : Alphabet() {
    for (char c : symbols) {
      auto slot = static_cast<unsigned char>(c);
      if (index_[slot] >= 0) {
        throw InvalidInput(std::string("repeated alphabet symbol '") + c + "'");
      }
      index_[slot] = static_cast<int>(symbols_.size());
      symbols_.push_back(c);
    }
  }

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  char operator[](std::size_t i) const { return symbols_[i]; }
  const std::string& symbols() const noexcept { return symbols_; }

  bool contains(char c) const noexcept {
    return index_[static_cast<unsigned char>(c)] >= 0;
  }

  /// -1 when absent.
  int index_of(char c) const noexcept {
    return index_[static_cast<unsigned char>(c)];
  }

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.symbols_ == b.symbols_;
  }

 private:
  std::string symbols_;
  std::array<int, 256> index_;
};

}  // namespace fo2

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
#include <stdexcept>
#include <string>

namespace fo2 {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input: regexes, DFA files, monoid files, rankers.
/// `position()` is a 0-based character offset for regexes and a 1-based
/// line number for the line-oriented file formats.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A well-formed input that violates a semantic precondition, e.g. a word
/// using a letter outside the alphabet or a table that is not associative.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A configured resource cap (monoid size, identity assignments, word
/// enumeration) would be exceeded.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Two routes that must agree by theory disagreed. Always a bug.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace fo2

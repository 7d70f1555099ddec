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

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "fo2/monoid.hpp"

namespace fo2 {

/// A word over the variables x1, x2, ... (1-based indices).
using VarWord = std::vector<int>;

/// Reads `w` from right to left.
VarWord mirror(const VarWord& w);

/// Immutable omega-term: variables, products and omega-powers. Copies
/// share structure.
class OmegaTerm {
 public:
  enum class Kind { Var, Product, Omega };

  static OmegaTerm var(int index);
  /// Nested products are flattened; a single factor is returned as is.
  /// Throws InvalidInput on an empty list.
  static OmegaTerm product(std::vector<OmegaTerm> factors);
  static OmegaTerm omega(OmegaTerm base);
  /// Product of the variables of `w`.
  static OmegaTerm word(const VarWord& w);

  Kind kind() const noexcept { return node_->kind; }
  /// Only meaningful for Kind::Var.
  int var_index() const noexcept { return node_->index; }
  const std::vector<OmegaTerm>& children() const noexcept {
    return node_->children;
  }

  /// Largest variable index occurring in the term.
  int num_vars() const;

  /// `x1`, `.` for products, `(T)^w` for omega-powers.
  std::string to_string() const;

  friend bool operator==(const OmegaTerm& a, const OmegaTerm& b);

 private:
  struct Node {
    Kind kind;
    int index = 0;
    std::vector<OmegaTerm> children;
  };
  explicit OmegaTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Value of `t` when x_k is mapped to assignment[k-1]. Omega nodes take
/// the idempotent power. Throws InvalidInput when a variable of `t` is not
/// covered by the assignment.
Element eval_term(const FiniteMonoid& m, const OmegaTerm& t,
                  std::span<const Element> assignment);

/// Post-order compilation of a term, for evaluating it many times.
class CompiledTerm {
 public:
  explicit CompiledTerm(const OmegaTerm& t);

  Element eval(const FiniteMonoid& m, std::span<const Element> assignment) const;
  int num_vars() const noexcept { return num_vars_; }

 private:
  enum class Op : unsigned char { Push, Mul, Omega };
  struct Step {
    Op op;
    int arg;
  };
  void emit(const OmegaTerm& t);

  std::vector<Step> steps_;
  int num_vars_ = 0;
  std::size_t max_stack_ = 0;
};

}  // namespace fo2

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

#include "fo2/omega_term.hpp"

#include <algorithm>

namespace fo2 {

VarWord mirror(const VarWord& w) { return VarWord(w.rbegin(), w.rend()); }

OmegaTerm OmegaTerm::var(int index) {
  if (index < 1) throw InvalidInput("variable indices start at 1");
  return OmegaTerm(std::make_shared<const Node>(Node{Kind::Var, index, {}}));
}

OmegaTerm OmegaTerm::product(std::vector<OmegaTerm> factors) {
  if (factors.empty()) throw InvalidInput("empty product");
  std::vector<OmegaTerm> flat;
  for (auto& f : factors) {
    if (f.kind() == Kind::Product) {
      flat.insert(flat.end(), f.children().begin(), f.children().end());
    } else {
      flat.push_back(std::move(f));
    }
  }
  if (flat.size() == 1) return flat.front();
  return OmegaTerm(
      std::make_shared<const Node>(Node{Kind::Product, 0, std::move(flat)}));
}

OmegaTerm OmegaTerm::omega(OmegaTerm base) {
  return OmegaTerm(
      std::make_shared<const Node>(Node{Kind::Omega, 0, {std::move(base)}}));
}

OmegaTerm OmegaTerm::word(const VarWord& w) {
  std::vector<OmegaTerm> vars;
  vars.reserve(w.size());
  for (int k : w) vars.push_back(var(k));
  return product(std::move(vars));
}

int OmegaTerm::num_vars() const {
  if (kind() == Kind::Var) return var_index();
  int n = 0;
  for (const auto& c : children()) n = std::max(n, c.num_vars());
  return n;
}

std::string OmegaTerm::to_string() const {
  switch (kind()) {
    case Kind::Var:
      return "x" + std::to_string(var_index());
    case Kind::Omega:
      return "(" + children().front().to_string() + ")^w";
    case Kind::Product: {
      std::string out;
      for (const auto& c : children()) {
        if (!out.empty()) out += '.';
        out += c.to_string();
      }
      return out;
    }
  }
  return {};
}

bool operator==(const OmegaTerm& a, const OmegaTerm& b) {
  if (a.node_ == b.node_) return true;
  return a.kind() == b.kind() && a.node_->index == b.node_->index &&
         a.children() == b.children();
}

Element eval_term(const FiniteMonoid& m, const OmegaTerm& t,
                  std::span<const Element> assignment) {
  switch (t.kind()) {
    case OmegaTerm::Kind::Var: {
      auto k = static_cast<std::size_t>(t.var_index());
      if (k > assignment.size()) {
        throw InvalidInput("assignment does not cover x" + std::to_string(k));
      }
      return assignment[k - 1];
    }
    case OmegaTerm::Kind::Omega:
      return m.omega(eval_term(m, t.children().front(), assignment));
    case OmegaTerm::Kind::Product: {
      Element x = m.identity();
      for (const auto& c : t.children()) x = m.mul(x, eval_term(m, c, assignment));
      return x;
    }
  }
  return m.identity();
}

CompiledTerm::CompiledTerm(const OmegaTerm& t) {
  emit(t);
  num_vars_ = t.num_vars();
  std::size_t depth = 0;
  for (const auto& s : steps_) {
    if (s.op == Op::Push) max_stack_ = std::max(max_stack_, ++depth);
    if (s.op == Op::Mul) --depth;
  }
}

void CompiledTerm::emit(const OmegaTerm& t) {
  switch (t.kind()) {
    case OmegaTerm::Kind::Var:
      steps_.push_back({Op::Push, t.var_index() - 1});
      return;
    case OmegaTerm::Kind::Omega:
      emit(t.children().front());
      steps_.push_back({Op::Omega, 0});
      return;
    case OmegaTerm::Kind::Product:
      emit(t.children().front());
      for (std::size_t i = 1; i < t.children().size(); ++i) {
        emit(t.children()[i]);
        steps_.push_back({Op::Mul, 0});
      }
      return;
  }
}

Element CompiledTerm::eval(const FiniteMonoid& m,
                           std::span<const Element> assignment) const {
  if (assignment.size() < static_cast<std::size_t>(num_vars_)) {
    throw InvalidInput("assignment does not cover x" + std::to_string(num_vars_));
  }
  // Terms used here are small; the fixed buffer avoids an allocation per call.
  constexpr std::size_t kInline = 64;
  Element inline_stack[kInline] = {};
  std::vector<Element> heap;
  Element* stack = inline_stack;
  if (max_stack_ > kInline) {
    heap.resize(max_stack_);
    stack = heap.data();
  }
  std::size_t top = 0;
  for (const auto& s : steps_) {
    switch (s.op) {
      case Op::Push:
        stack[top++] = assignment[static_cast<std::size_t>(s.arg)];
        break;
      case Op::Mul:
        --top;
        stack[top - 1] = m.mul(stack[top - 1], stack[top]);
        break;
      case Op::Omega:
        stack[top - 1] = m.omega(stack[top - 1]);
        break;
    }
  }
  return stack[0];
}

}  // namespace fo2

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
#include <string>
#include <vector>

#include "fo2/greens.hpp"
#include "fo2/monoid.hpp"

namespace fo2 {

/// An equivalence on the elements of a monoid, stored as class labels.
/// Classes are labelled 0, 1, ... in order of their smallest element.
class Congruence {
 public:
  /// Relabels `labels` canonically. Does not check the congruence
  /// property; quotient() does.
  explicit Congruence(const std::vector<std::size_t>& labels);

  static Congruence identity(std::size_t n);
  static Congruence universal(std::size_t n);

  std::size_t parent_size() const noexcept { return class_of_.size(); }
  std::size_t num_classes() const noexcept { return num_classes_; }
  std::size_t class_of(Element x) const { return class_of_[x]; }
  const std::vector<std::size_t>& labels() const noexcept { return class_of_; }
  bool related(Element x, Element y) const { return class_of_[x] == class_of_[y]; }

  /// Every class of *this lies inside a class of `coarser`.
  bool refines(const Congruence& coarser) const;

  friend bool operator==(const Congruence&, const Congruence&) = default;

 private:
  std::vector<std::size_t> class_of_;
  std::size_t num_classes_ = 0;
};

/// u ~K v  iff  for every idempotent e: (eu <_J e and ev <_J e) or eu = ev.
Congruence sim_k(const FiniteMonoid& m);
Congruence sim_k(const FiniteMonoid& m, const GreensData& g);

/// Left-right dual of sim_k: quantifies over uf, vf.
Congruence sim_d(const FiniteMonoid& m);
Congruence sim_d(const FiniteMonoid& m, const GreensData& g);

/// u ~LI v  iff  for all J-equivalent idempotents e, f:
/// (euf <_J e and evf <_J e) or euf = evf.
Congruence sim_li(const FiniteMonoid& m);
Congruence sim_li(const FiniteMonoid& m, const GreensData& g);

/// M / c. Verifies exhaustively that c is compatible with multiplication
/// and throws InconsistencyError ("not a congruence") otherwise. The
/// class of x becomes element c.class_of(x); generators are mapped through.
FiniteMonoid quotient(const FiniteMonoid& m, const Congruence& c);

/// Least congruence containing both c1 and c2.
Congruence join(const FiniteMonoid& m, const Congruence& c1,
                const Congruence& c2);

/// join(c1, c2) is contained in `target`.
bool join_refines_check(const FiniteMonoid& m, const Congruence& c1,
                        const Congruence& c2, const Congruence& target);

/// Membership in R_m and L_m through the Mal'cev recursion
/// R_1 = L_1 = J, R_{m+1} = K (m) L_m, L_{m+1} = D (m) R_m. Requires m >= 1.
bool in_Rm(const FiniteMonoid& m, int level);
bool in_Lm(const FiniteMonoid& m, int level);

/// Outcome of the level search.
struct Fo2Level {
  enum class Kind { NotFO2, Level, Exceeded };
  Kind kind = Kind::NotFO2;
  int value = 0;  // the level for Kind::Level, the bound for Kind::Exceeded

  static Fo2Level not_fo2() { return {Kind::NotFO2, 0}; }
  static Fo2Level level(int m) { return {Kind::Level, m}; }
  static Fo2Level exceeded(int bound) { return {Kind::Exceeded, bound}; }

  std::string to_string() const;
  friend bool operator==(const Fo2Level&, const Fo2Level&) = default;
};

/// Least m with M in R_{m+1} and L_{m+1}, searched up to `max_m`. Outside
/// DA the answer is NotFO2. When no level up to max_m exists, the search
/// continues to size(M) + 1 and returns Exceeded(max_m) if a level is found
/// there; otherwise throws InconsistencyError.
Fo2Level fo2_level(const FiniteMonoid& m, int max_m = 6);

}  // namespace fo2

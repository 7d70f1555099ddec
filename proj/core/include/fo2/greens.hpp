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

#include <cstdint>
#include <vector>

#include "fo2/monoid.hpp"

namespace fo2 {

/// Square boolean matrix stored as packed rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n)
      : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  std::size_t size() const noexcept { return n_; }
  bool test(std::size_t r, std::size_t c) const noexcept {
    return (bits_[r * words_ + c / 64] >> (c % 64)) & 1u;
  }
  void set(std::size_t r, std::size_t c) noexcept {
    bits_[r * words_ + c / 64] |= std::uint64_t{1} << (c % 64);
  }
  /// row(dst) |= row(src)
  void or_row(std::size_t dst, const BitMatrix& other, std::size_t src) noexcept {
    for (std::size_t w = 0; w < words_; ++w) {
      bits_[dst * words_ + w] |= other.bits_[src * other.words_ + w];
    }
  }

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Green's preorders and the induced class partitions. Classes are labelled
/// 0, 1, ... in order of their smallest element.
struct GreensData {
  BitMatrix jleq;  // jleq.test(u, v)  <=>  u in MvM
  BitMatrix rleq;  // u in vM
  BitMatrix lleq;  // u in Mv
  std::vector<std::size_t> j_class;
  std::vector<std::size_t> r_class;
  std::vector<std::size_t> l_class;

  bool j_below(Element u, Element v) const { return jleq.test(u, v); }
  /// u <_J v: u <=_J v and not v <=_J u.
  bool j_strictly_below(Element u, Element v) const {
    return jleq.test(u, v) && !jleq.test(v, u);
  }
  bool j_equiv(Element u, Element v) const { return j_class[u] == j_class[v]; }
  bool r_equiv(Element u, Element v) const { return r_class[u] == r_class[v]; }
  bool l_equiv(Element u, Element v) const { return l_class[u] == l_class[v]; }
};

GreensData greens(const FiniteMonoid& m);

bool is_j_trivial(const FiniteMonoid& m);
bool is_r_trivial(const FiniteMonoid& m);
bool is_l_trivial(const FiniteMonoid& m);

std::size_t num_classes(const std::vector<std::size_t>& labels);

}  // namespace fo2

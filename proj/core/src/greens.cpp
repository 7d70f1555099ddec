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

#include "fo2/greens.hpp"

#include <algorithm>

namespace fo2 {

namespace {

std::vector<std::size_t> symmetric_classes(const BitMatrix& leq) {
  const std::size_t n = leq.size();
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(n, kUnset);
  std::size_t next = 0;
  for (std::size_t u = 0; u < n; ++u) {
    if (label[u] != kUnset) continue;
    label[u] = next;
    for (std::size_t v = u + 1; v < n; ++v) {
      if (label[v] == kUnset && leq.test(u, v) && leq.test(v, u)) label[v] = next;
    }
    ++next;
  }
  return label;
}

bool discrete(const std::vector<std::size_t>& labels) {
  return num_classes(labels) == labels.size();
}

}  // namespace

std::size_t num_classes(const std::vector<std::size_t>& labels) {
  if (labels.empty()) return 0;
  return *std::max_element(labels.begin(), labels.end()) + 1;
}

GreensData greens(const FiniteMonoid& m) {
  const std::size_t n = m.size();
  GreensData g{BitMatrix(n), BitMatrix(n), BitMatrix(n), {}, {}, {}};

  // Column-major ideals: row v of these holds vM, Mv and MvM.
  BitMatrix right_ideal(n), left_ideal(n), two_sided(n);
  for (Element v = 0; v < n; ++v) {
    for (Element q = 0; q < n; ++q) {
      right_ideal.set(v, m.mul(v, q));
      left_ideal.set(v, m.mul(q, v));
    }
  }
  for (Element v = 0; v < n; ++v) {
    for (Element w = 0; w < n; ++w) {
      if (right_ideal.test(v, w)) two_sided.or_row(v, left_ideal, w);
    }
  }
  for (Element u = 0; u < n; ++u) {
    for (Element v = 0; v < n; ++v) {
      if (right_ideal.test(v, u)) g.rleq.set(u, v);
      if (left_ideal.test(v, u)) g.lleq.set(u, v);
      if (two_sided.test(v, u)) g.jleq.set(u, v);
    }
  }
  g.j_class = symmetric_classes(g.jleq);
  g.r_class = symmetric_classes(g.rleq);
  g.l_class = symmetric_classes(g.lleq);
  return g;
}

bool is_j_trivial(const FiniteMonoid& m) { return discrete(greens(m).j_class); }
bool is_r_trivial(const FiniteMonoid& m) { return discrete(greens(m).r_class); }
bool is_l_trivial(const FiniteMonoid& m) { return discrete(greens(m).l_class); }

}  // namespace fo2

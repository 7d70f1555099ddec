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

#include "fo2/varieties.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace fo2 {

Congruence::Congruence(const std::vector<std::size_t>& labels)
    : class_of_(labels.size()) {
  std::map<std::size_t, std::size_t> renumber;
  for (std::size_t x = 0; x < labels.size(); ++x) {
    auto [it, inserted] = renumber.emplace(labels[x], renumber.size());
    class_of_[x] = it->second;
  }
  num_classes_ = renumber.size();
}

Congruence Congruence::identity(std::size_t n) {
  std::vector<std::size_t> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  return Congruence(labels);
}

Congruence Congruence::universal(std::size_t n) {
  return Congruence(std::vector<std::size_t>(n, 0));
}

bool Congruence::refines(const Congruence& coarser) const {
  if (coarser.parent_size() != parent_size()) return false;
  std::vector<std::size_t> image(num_classes_, static_cast<std::size_t>(-1));
  for (std::size_t x = 0; x < class_of_.size(); ++x) {
    auto& slot = image[class_of_[x]];
    if (slot == static_cast<std::size_t>(-1)) {
      slot = coarser.class_of_[x];
    } else if (slot != coarser.class_of_[x]) {
      return false;
    }
  }
  return true;
}

namespace {

// Groups elements by an exact signature vector.
template <class SignatureFn>
Congruence by_signature(std::size_t n, SignatureFn&& signature) {
  std::map<std::vector<Element>, std::size_t> ids;
  std::vector<std::size_t> labels(n);
  for (Element u = 0; u < n; ++u) {
    auto [it, inserted] = ids.emplace(signature(u), ids.size());
    labels[u] = it->second;
  }
  return Congruence(labels);
}

}  // namespace

Congruence sim_k(const FiniteMonoid& m) { return sim_k(m, greens(m)); }

Congruence sim_k(const FiniteMonoid& m, const GreensData& g) {
  const auto below = static_cast<Element>(m.size());
  const auto es = idempotents(m);
  return by_signature(m.size(), [&](Element u) {
    std::vector<Element> sig;
    sig.reserve(es.size());
    for (Element e : es) {
      Element eu = m.mul(e, u);
      sig.push_back(g.j_strictly_below(eu, e) ? below : eu);
    }
    return sig;
  });
}

Congruence sim_d(const FiniteMonoid& m) { return sim_d(m, greens(m)); }

Congruence sim_d(const FiniteMonoid& m, const GreensData& g) {
  const auto below = static_cast<Element>(m.size());
  const auto es = idempotents(m);
  return by_signature(m.size(), [&](Element u) {
    std::vector<Element> sig;
    sig.reserve(es.size());
    for (Element f : es) {
      Element uf = m.mul(u, f);
      sig.push_back(g.j_strictly_below(uf, f) ? below : uf);
    }
    return sig;
  });
}

Congruence sim_li(const FiniteMonoid& m) { return sim_li(m, greens(m)); }

Congruence sim_li(const FiniteMonoid& m, const GreensData& g) {
  const auto below = static_cast<Element>(m.size());
  const auto es = idempotents(m);
  std::vector<std::pair<Element, Element>> pairs;
  for (Element e : es) {
    for (Element f : es) {
      if (g.j_equiv(e, f)) pairs.emplace_back(e, f);
    }
  }
  return by_signature(m.size(), [&](Element u) {
    std::vector<Element> sig;
    sig.reserve(pairs.size());
    for (auto [e, f] : pairs) {
      Element euf = m.mul(e, u, f);
      sig.push_back(g.j_strictly_below(euf, e) ? below : euf);
    }
    return sig;
  });
}

FiniteMonoid quotient(const FiniteMonoid& m, const Congruence& c) {
  if (c.parent_size() != m.size()) {
    throw InvalidInput("congruence belongs to a monoid of a different size");
  }
  const std::size_t k = c.num_classes();
  std::vector<Element> rep(k);
  std::vector<bool> has_rep(k, false);
  for (Element x = 0; x < m.size(); ++x) {
    if (!has_rep[c.class_of(x)]) {
      has_rep[c.class_of(x)] = true;
      rep[c.class_of(x)] = x;
    }
  }
  std::vector<Element> table(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      table[i * k + j] = static_cast<Element>(c.class_of(m.mul(rep[i], rep[j])));
    }
  }
  for (Element x = 0; x < m.size(); ++x) {
    for (Element y = 0; y < m.size(); ++y) {
      if (table[c.class_of(x) * k + c.class_of(y)] != c.class_of(m.mul(x, y))) {
        throw InconsistencyError(
            "not a congruence: the class of " + std::to_string(x) + "*" +
            std::to_string(y) + " depends on the representatives");
      }
    }
  }
  std::optional<Generators> gens;
  if (m.has_gens()) {
    gens = *m.gens();
    for (auto& img : gens->images) img = static_cast<Element>(c.class_of(img));
  }
  return FiniteMonoid::trusted(k, std::move(table),
                               static_cast<Element>(c.class_of(m.identity())),
                               std::move(gens));
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

Congruence join(const FiniteMonoid& m, const Congruence& c1,
                const Congruence& c2) {
  const std::size_t n = m.size();
  if (c1.parent_size() != n || c2.parent_size() != n) {
    throw InvalidInput("congruences belong to a monoid of a different size");
  }
  UnionFind uf(n);
  std::vector<std::pair<Element, Element>> pending;
  for (const Congruence* c : {&c1, &c2}) {
    std::vector<std::ptrdiff_t> first(c->num_classes(), -1);
    for (Element x = 0; x < n; ++x) {
      auto& f = first[c->class_of(x)];
      if (f < 0) {
        f = x;
      } else if (uf.unite(static_cast<std::size_t>(f), x)) {
        pending.emplace_back(static_cast<Element>(f), x);
      }
    }
  }
  // Every merged pair has all its two-sided translates merged as well.
  while (!pending.empty()) {
    auto [u, v] = pending.back();
    pending.pop_back();
    for (Element w = 0; w < n; ++w) {
      Element a = m.mul(u, w), b = m.mul(v, w);
      if (uf.unite(a, b)) pending.emplace_back(a, b);
      a = m.mul(w, u);
      b = m.mul(w, v);
      if (uf.unite(a, b)) pending.emplace_back(a, b);
    }
  }
  std::vector<std::size_t> labels(n);
  for (std::size_t x = 0; x < n; ++x) labels[x] = uf.find(x);
  return Congruence(labels);
}

bool join_refines_check(const FiniteMonoid& m, const Congruence& c1,
                        const Congruence& c2, const Congruence& target) {
  return join(m, c1, c2).refines(target);
}

bool in_Rm(const FiniteMonoid& m, int level) {
  if (level < 1) throw InvalidInput("R_m is defined for m >= 1");
  if (level == 1) return is_j_trivial(m);
  return in_Lm(quotient(m, sim_k(m)), level - 1);
}

bool in_Lm(const FiniteMonoid& m, int level) {
  if (level < 1) throw InvalidInput("L_m is defined for m >= 1");
  if (level == 1) return is_j_trivial(m);
  return in_Rm(quotient(m, sim_d(m)), level - 1);
}

std::string Fo2Level::to_string() const {
  switch (kind) {
    case Kind::NotFO2:
      return "not FO2-definable";
    case Kind::Level:
      return std::to_string(value);
    case Kind::Exceeded:
      return "> " + std::to_string(value);
  }
  return {};
}

Fo2Level fo2_level(const FiniteMonoid& m, int max_m) {
  if (max_m < 1) throw InvalidInput("max_m must be at least 1");
  if (!is_in_da(m)) return Fo2Level::not_fo2();
  const int hard_limit = std::max(max_m, static_cast<int>(m.size()) + 1);
  for (int level = 1; level <= hard_limit; ++level) {
    if (in_Rm(m, level + 1) && in_Lm(m, level + 1)) {
      return level <= max_m ? Fo2Level::level(level) : Fo2Level::exceeded(max_m);
    }
  }
  throw InconsistencyError(
      "monoid is in DA but in no R_{m+1} and L_{m+1} with m <= " +
      std::to_string(hard_limit));
}

}  // namespace fo2

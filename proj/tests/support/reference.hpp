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

// Reference implementations used as test oracles. They follow the textbook
// definitions directly and share no code with the library algorithms.

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "fo2/dfa.hpp"
#include "fo2/monoid.hpp"
#include "fo2/ranker.hpp"
#include "fo2/regex.hpp"

namespace fo2::ref {

// ---------------------------------------------------------------- regex

/// End positions reachable after matching `r` from `start`.
inline std::set<std::size_t> ends(const Regex& r, std::string_view w,
                                  std::size_t start) {
  switch (r.kind()) {
    case Regex::Kind::EmptyWord:
      return {start};
    case Regex::Kind::Letter:
      if (start < w.size() && w[start] == r.symbol()) return {start + 1};
      return {};
    case Regex::Kind::Concat: {
      std::set<std::size_t> cur{start};
      for (const Regex& c : r.children()) {
        std::set<std::size_t> next;
        for (std::size_t p : cur) {
          auto e = ends(c, w, p);
          next.insert(e.begin(), e.end());
        }
        cur = std::move(next);
      }
      return cur;
    }
    case Regex::Kind::Union: {
      std::set<std::size_t> out;
      for (const Regex& c : r.children()) {
        auto e = ends(c, w, start);
        out.insert(e.begin(), e.end());
      }
      return out;
    }
    case Regex::Kind::Star: {
      std::set<std::size_t> out{start};
      std::vector<std::size_t> todo{start};
      while (!todo.empty()) {
        std::size_t p = todo.back();
        todo.pop_back();
        for (std::size_t e : ends(r.children()[0], w, p)) {
          if (out.insert(e).second) todo.push_back(e);
        }
      }
      return out;
    }
  }
  return {};
}

inline bool regex_matches(const Regex& r, std::string_view w) {
  return ends(r, w, 0).count(w.size()) > 0;
}

// ---------------------------------------------------------------- dfa

/// Table-filling: true iff every pair of distinct states is distinguishable.
inline bool all_states_distinguishable(const Dfa& d) {
  const std::size_t n = d.num_states();
  std::vector<std::vector<bool>> dist(n, std::vector<bool>(n, false));
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) dist[p][q] = d.is_final(p) != d.is_final(q);
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        if (dist[p][q]) continue;
        for (std::size_t a = 0; a < d.alphabet().size(); ++a) {
          if (dist[d.next(p, a)][d.next(q, a)]) {
            dist[p][q] = true;
            changed = true;
            break;
          }
        }
      }
    }
  }
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      if (!dist[p][q]) return false;
    }
  }
  return true;
}

/// Number of distinct state transformations induced by words.
inline std::size_t transformation_count(const Dfa& d) {
  using T = std::vector<std::size_t>;
  T id(d.num_states());
  for (std::size_t s = 0; s < id.size(); ++s) id[s] = s;
  std::set<T> seen{id};
  std::vector<T> todo{id};
  while (!todo.empty()) {
    T t = todo.back();
    todo.pop_back();
    for (std::size_t a = 0; a < d.alphabet().size(); ++a) {
      T u(t.size());
      for (std::size_t s = 0; s < t.size(); ++s) u[s] = d.next(t[s], a);
      if (seen.insert(u).second) todo.push_back(u);
    }
  }
  return seen.size();
}

// ---------------------------------------------------------------- monoids

inline FiniteMonoid make_monoid(std::vector<std::vector<Element>> rows, Element identity,
                                std::optional<Generators> gens = std::nullopt) {
  std::vector<Element> table;
  for (const auto& r : rows) table.insert(table.end(), r.begin(), r.end());
  return FiniteMonoid(rows.size(), std::move(table), identity, std::move(gens));
}

/// {1, a, b} with xy = x for x, y != 1. Element 0 is the identity.
inline FiniteMonoid left_zero() {
  return make_monoid({{0, 1, 2}, {1, 1, 1}, {2, 2, 2}}, 0,
                     Generators{Alphabet("ab"), {1, 2}});
}

/// {1, a, b} with xy = y for x, y != 1.
inline FiniteMonoid right_zero() {
  return make_monoid({{0, 1, 2}, {1, 1, 2}, {2, 1, 2}}, 0);
}

/// {1, 0}.
inline FiniteMonoid one_zero() { return make_monoid({{0, 1}, {1, 1}}, 0); }

inline FiniteMonoid trivial() { return make_monoid({{0}}, 0); }

/// Z/2 = {1, g}.
inline FiniteMonoid cyclic2() { return make_monoid({{0, 1}, {1, 0}}, 0); }

inline bool rleq(const FiniteMonoid& m, Element u, Element v) {
  for (Element q = 0; q < m.size(); ++q) {
    if (m.mul(v, q) == u) return true;
  }
  return false;
}

inline bool lleq(const FiniteMonoid& m, Element u, Element v) {
  for (Element p = 0; p < m.size(); ++p) {
    if (m.mul(p, v) == u) return true;
  }
  return false;
}

inline bool jleq(const FiniteMonoid& m, Element u, Element v) {
  for (Element p = 0; p < m.size(); ++p) {
    for (Element q = 0; q < m.size(); ++q) {
      if (m.mul(m.mul(p, v), q) == u) return true;
    }
  }
  return false;
}

inline bool jless(const FiniteMonoid& m, Element u, Element v) {
  return jleq(m, u, v) && !jleq(m, v, u);
}

/// x, x^2, ... until an idempotent shows up.
inline Element omega(const FiniteMonoid& m, Element x) {
  Element p = x;
  for (std::size_t k = 0; k <= m.size(); ++k) {
    if (m.mul(p, p) == p) return p;
    p = m.mul(p, x);
  }
  return p;
}

inline std::vector<Element> idempotents(const FiniteMonoid& m) {
  std::vector<Element> out;
  for (Element x = 0; x < m.size(); ++x) {
    if (m.mul(x, x) == x) out.push_back(x);
  }
  return out;
}

// Relations as full boolean matrices, straight from the definitions.
using Relation = std::vector<std::vector<bool>>;

inline Relation sim_k(const FiniteMonoid& m) {
  const auto n = static_cast<Element>(m.size());
  Relation r(n, std::vector<bool>(n, true));
  for (Element e : ref::idempotents(m)) {
    for (Element u = 0; u < n; ++u) {
      for (Element v = 0; v < n; ++v) {
        Element eu = m.mul(e, u), ev = m.mul(e, v);
        if (!((jless(m, eu, e) && jless(m, ev, e)) || eu == ev)) r[u][v] = false;
      }
    }
  }
  return r;
}

inline Relation sim_d(const FiniteMonoid& m) {
  const auto n = static_cast<Element>(m.size());
  Relation r(n, std::vector<bool>(n, true));
  for (Element f : ref::idempotents(m)) {
    for (Element u = 0; u < n; ++u) {
      for (Element v = 0; v < n; ++v) {
        Element uf = m.mul(u, f), vf = m.mul(v, f);
        if (!((jless(m, uf, f) && jless(m, vf, f)) || uf == vf)) r[u][v] = false;
      }
    }
  }
  return r;
}

inline Relation sim_li(const FiniteMonoid& m) {
  const auto n = static_cast<Element>(m.size());
  Relation r(n, std::vector<bool>(n, true));
  const auto es = ref::idempotents(m);
  for (Element e : es) {
    for (Element f : es) {
      if (!(jleq(m, e, f) && jleq(m, f, e))) continue;
      for (Element u = 0; u < n; ++u) {
        for (Element v = 0; v < n; ++v) {
          Element euf = m.mul(m.mul(e, u), f), evf = m.mul(m.mul(e, v), f);
          if (!((jless(m, euf, e) && jless(m, evf, e)) || euf == evf)) r[u][v] = false;
        }
      }
    }
  }
  return r;
}

/// Quotient table by an equivalence given as a matrix; classes numbered by
/// smallest member. Returns nullopt when the relation is not a congruence.
inline std::optional<FiniteMonoid> quotient(const FiniteMonoid& m, const Relation& r) {
  const auto n = static_cast<Element>(m.size());
  std::vector<Element> cls(n);
  std::vector<Element> rep;
  for (Element x = 0; x < n; ++x) {
    Element c = static_cast<Element>(rep.size());
    for (Element k = 0; k < rep.size(); ++k) {
      if (r[x][rep[k]]) {
        c = k;
        break;
      }
    }
    if (c == rep.size()) rep.push_back(x);
    cls[x] = c;
  }
  const std::size_t k = rep.size();
  std::vector<Element> table(k * k);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      Element c = cls[m.mul(x, y)];
      Element want = cls[m.mul(rep[cls[x]], rep[cls[y]])];
      if (c != want) return std::nullopt;
      table[cls[x] * k + cls[y]] = c;
    }
  }
  return FiniteMonoid(k, std::move(table), cls[m.identity()]);
}

inline bool j_trivial(const FiniteMonoid& m) {
  for (Element u = 0; u < m.size(); ++u) {
    for (Element v = 0; v < m.size(); ++v) {
      if (u != v && jleq(m, u, v) && jleq(m, v, u)) return false;
    }
  }
  return true;
}

bool in_L(const FiniteMonoid& m, int level);

/// The Mal'cev recursion of the hierarchy written against the reference
/// relations above.
inline bool in_R(const FiniteMonoid& m, int level) {
  if (level == 1) return j_trivial(m);
  return in_L(*quotient(m, ref::sim_k(m)), level - 1);
}

inline bool in_L(const FiniteMonoid& m, int level) {
  if (level == 1) return j_trivial(m);
  return in_R(*quotient(m, ref::sim_d(m)), level - 1);
}

// ---------------------------------------------------------------- rankers

/// Literal fold of the instructions: X_a from x is the least a-position
/// above x, Y_a the greatest below; 0 means undefined.
inline int run(const Ranker& r, std::string_view u) {
  const int len = static_cast<int>(u.size());
  int x = r.start() == Direction::X ? 0 : len + 1;
  for (const auto& s : r.steps()) {
    int y = 0;
    if (s.dir == Direction::X) {
      for (int p = x + 1; p <= len; ++p) {
        if (u[p - 1] == s.letter) {
          y = p;
          break;
        }
      }
    } else {
      for (int p = x - 1; p >= 1; --p) {
        if (u[p - 1] == s.letter) {
          y = p;
          break;
        }
      }
    }
    if (y == 0) return 0;
    x = y;
  }
  return x;
}

inline int run_prefix(const Ranker& r, std::size_t len, std::string_view u) {
  std::vector<Instruction> steps(r.steps().begin(), r.steps().begin() + len);
  return run(Ranker(steps), u);
}

/// The four bullet rules of the interval chain, indexed as in the
/// definition: interval l is fixed by the pair Z_l Z_{l+1}.
inline bool condensed(const Ranker& r, std::string_view u) {
  const std::size_t k = r.depth();
  const int target = run(r, u);
  if (target == 0) return false;
  int lo = 0, hi = static_cast<int>(u.size()) + 1;
  for (std::size_t l = 1; l + 1 <= k; ++l) {
    // Z_l applied to the previous interval's border in its own direction.
    const auto& z = r.steps()[l - 1];
    const auto& next = r.steps()[l];
    int from = z.dir == Direction::X ? lo : hi;
    // position of Z_l started from `from`
    int p = 0;
    const int len = static_cast<int>(u.size());
    if (z.dir == Direction::X) {
      for (int q = from + 1; q <= len; ++q) {
        if (u[q - 1] == z.letter) {
          p = q;
          break;
        }
      }
    } else {
      for (int q = from - 1; q >= 1; --q) {
        if (u[q - 1] == z.letter) {
          p = q;
          break;
        }
      }
    }
    if (p == 0) return false;
    int nlo = lo, nhi = hi;
    if (z.dir == Direction::X && next.dir == Direction::X) nlo = p;
    if (z.dir == Direction::Y && next.dir == Direction::Y) nhi = p;
    if (z.dir == Direction::X && next.dir == Direction::Y) nhi = p;
    if (z.dir == Direction::Y && next.dir == Direction::X) nlo = p;
    // nested, and the new border lies strictly inside
    if (!(lo <= nlo && nhi <= hi) || nlo >= nhi) return false;
    lo = nlo;
    hi = nhi;
  }
  return lo < target && target < hi;
}

/// All rankers over `letters` with depth <= n, <= m blocks and, when
/// `start` is set, that first direction.
inline std::vector<Ranker> rankers(std::string_view letters, int m, int n,
                                   std::optional<Direction> start) {
  std::vector<Ranker> out;
  std::vector<std::vector<Instruction>> layer{{}};
  for (int d = 1; d <= n; ++d) {
    std::vector<std::vector<Instruction>> next;
    for (const auto& p : layer) {
      for (Direction dir : {Direction::X, Direction::Y}) {
        for (char c : letters) {
          auto q = p;
          q.push_back({dir, c});
          int blocks = 1;
          for (std::size_t i = 1; i < q.size(); ++i) blocks += q[i].dir != q[i - 1].dir;
          if (blocks > m) continue;
          if (start && q.front().dir != *start) continue;
          next.push_back(q);
        }
      }
    }
    for (const auto& q : next) out.emplace_back(q);
    layer = std::move(next);
  }
  return out;
}

inline std::string letters_of(std::string_view u, std::string_view v) {
  std::string s(u);
  s += v;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline bool same_condensed(std::string_view u, std::string_view v,
                           const std::vector<Ranker>& rs) {
  for (const auto& r : rs) {
    if (condensed(r, u) != condensed(r, v)) return false;
  }
  return true;
}

inline bool rel_right(std::string_view u, std::string_view v, int m, int n) {
  const std::string a = letters_of(u, v);
  auto rs = rankers(a, m, n, Direction::X);
  auto ys = rankers(a, m - 1, n - 1, Direction::Y);
  rs.insert(rs.end(), ys.begin(), ys.end());
  return same_condensed(u, v, rs);
}

inline bool rel_left(std::string_view u, std::string_view v, int m, int n) {
  const std::string a = letters_of(u, v);
  auto rs = rankers(a, m, n, Direction::Y);
  auto xs = rankers(a, m - 1, n - 1, Direction::X);
  rs.insert(rs.end(), xs.begin(), xs.end());
  return same_condensed(u, v, rs);
}

inline int ord(int i, int j) { return i < j ? -1 : i == j ? 0 : 1; }

inline bool equiv_wi(std::string_view u, std::string_view v, int m, int n) {
  const std::string a = letters_of(u, v);
  for (const auto& r : rankers(a, m, n, std::nullopt)) {
    if ((run(r, u) != 0) != (run(r, v) != 0)) return false;
  }
  auto clause = [&](std::optional<Direction> rd, int rm, int rn,
                    std::optional<Direction> sd, int sm, int sn) {
    if (sm < 1 || sn < 1) return true;
    for (const auto& r : rankers(a, rm, rn, rd)) {
      int ru = run(r, u), rv = run(r, v);
      if (ru == 0 || rv == 0) continue;
      for (const auto& s : rankers(a, sm, sn, sd)) {
        int su = run(s, u), sv = run(s, v);
        if (su == 0 || sv == 0) continue;
        if (ord(ru, su) != ord(rv, sv)) return false;
      }
    }
    return true;
  };
  using D = Direction;
  return clause(D::X, m, n, D::Y, m, n - 1) && clause(D::Y, m, n, D::X, m, n - 1) &&
         clause(D::X, m, n, D::X, m - 1, n - 1) && clause(D::Y, m, n, D::Y, m - 1, n - 1);
}

/// All words of length <= len over `letters`.
inline std::vector<std::string> words(std::string_view letters, int len) {
  std::vector<std::string> out{""};
  std::vector<std::string> layer{""};
  for (int l = 1; l <= len; ++l) {
    std::vector<std::string> next;
    for (const auto& w : layer) {
      for (char c : letters) next.push_back(w + c);
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace fo2::ref

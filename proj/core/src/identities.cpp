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

#include "fo2/identities.hpp"

#include <map>
#include <mutex>

namespace fo2 {

VarWord build_G(int m) {
  if (m < 2) throw InvalidInput("G_m is defined for m >= 2");
  VarWord g{2, 1};
  for (int k = 3; k <= m; ++k) {
    VarWord next{k};
    auto tail = mirror(g);
    next.insert(next.end(), tail.begin(), tail.end());
    g = std::move(next);
  }
  return g;
}

VarWord build_I(int m) {
  if (m < 2) throw InvalidInput("I_m is defined for m >= 2");
  VarWord i{2, 1, 2};
  for (int k = 3; k <= m; ++k) {
    VarWord next = build_G(k);
    next.push_back(k);
    auto tail = mirror(i);
    next.insert(next.end(), tail.begin(), tail.end());
    i = std::move(next);
  }
  return i;
}

namespace {

std::mutex phi_mutex;
std::map<int, OmegaTerm>& phi_cache() {
  static std::map<int, OmegaTerm> cache;
  return cache;
}

OmegaTerm xw(int k) { return OmegaTerm::omega(OmegaTerm::var(k)); }

OmegaTerm phi_locked(int k) {
  auto& cache = phi_cache();
  if (auto it = cache.find(k); it != cache.end()) return it->second;
  OmegaTerm t = [&] {
    if (k == 1) return OmegaTerm::omega(OmegaTerm::product({xw(1), xw(2), xw(1)}));
    if (k == 2) return xw(2);
    VarWord g = build_G(k - 1);
    VarWord gg = g;
    auto tail = mirror(g);
    gg.insert(gg.end(), tail.begin(), tail.end());
    std::vector<OmegaTerm> factors;
    for (int v : gg) factors.push_back(phi_locked(v));
    OmegaTerm inner = OmegaTerm::omega(OmegaTerm::product(std::move(factors)));
    return OmegaTerm::omega(OmegaTerm::product({xw(k), inner, xw(k)}));
  }();
  cache.emplace(k, t);
  return t;
}

}  // namespace

OmegaTerm phi_of(int k) {
  if (k < 1) throw InvalidInput("variable indices start at 1");
  std::lock_guard<std::mutex> lock(phi_mutex);
  return phi_locked(k);
}

OmegaTerm phi_word(const VarWord& w) {
  std::vector<OmegaTerm> factors;
  factors.reserve(w.size());
  for (int k : w) factors.push_back(phi_of(k));
  return OmegaTerm::product(std::move(factors));
}

std::pair<OmegaTerm, OmegaTerm> da_identity() {
  OmegaTerm e = OmegaTerm::omega(OmegaTerm::word({1, 2}));
  return {OmegaTerm::product({e, OmegaTerm::var(1), e}), e};
}

namespace {

// guarded[k] stays true while every occurrence of x_{k+1} is the direct
// child of an omega node.
void scan_guards(const OmegaTerm& t, bool under_omega, std::vector<int>& seen,
                 std::vector<bool>& guarded) {
  if (t.kind() == OmegaTerm::Kind::Var) {
    auto k = static_cast<std::size_t>(t.var_index() - 1);
    seen[k] = 1;
    if (!under_omega) guarded[k] = false;
    return;
  }
  bool child_guarded = t.kind() == OmegaTerm::Kind::Omega;
  for (const auto& c : t.children()) scan_guards(c, child_guarded, seen, guarded);
}

}  // namespace

IdentityCheck satisfies_identity(const FiniteMonoid& m, const OmegaTerm& lhs,
                                 const OmegaTerm& rhs, std::uint64_t cap) {
  const int v = std::max(lhs.num_vars(), rhs.num_vars());
  const auto nv = static_cast<std::size_t>(v);
  std::vector<int> seen(nv, 0);
  std::vector<bool> guarded(nv, true);
  scan_guards(lhs, false, seen, guarded);
  scan_guards(rhs, false, seen, guarded);

  std::vector<Element> all(m.size());
  for (Element x = 0; x < m.size(); ++x) all[x] = x;
  const std::vector<Element> es = idempotents(m);
  const std::vector<Element> unused{m.identity()};

  std::vector<const std::vector<Element>*> range(nv);
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < nv; ++k) {
    range[k] = !seen[k] ? &unused : guarded[k] ? &es : &all;
    if (total > cap / range[k]->size()) {
      throw BudgetExceeded("identity check too large: more than " +
                           std::to_string(cap) + " assignments");
    }
    total *= range[k]->size();
  }

  CompiledTerm left(lhs), right(rhs);
  IdentityCheck result;
  std::vector<std::size_t> digit(nv, 0);
  std::vector<Element> assignment(nv);
  for (std::size_t k = 0; k < nv; ++k) assignment[k] = (*range[k])[0];
  for (;;) {
    ++result.assignments;
    if (left.eval(m, assignment) != right.eval(m, assignment)) {
      result.holds = false;
      result.witness = assignment;
      return result;
    }
    // Odometer with x1 as the most significant digit.
    std::size_t k = nv;
    while (k > 0) {
      --k;
      if (++digit[k] < range[k]->size()) {
        assignment[k] = (*range[k])[digit[k]];
        break;
      }
      digit[k] = 0;
      assignment[k] = (*range[k])[0];
      if (k == 0) return result;
    }
    if (nv == 0) return result;
  }
}

bool in_Rm_by_identities(const FiniteMonoid& m, int level, std::uint64_t cap) {
  if (level < 2) throw InvalidInput("the identity route needs m >= 2");
  auto [da_l, da_r] = da_identity();
  if (!satisfies_identity(m, da_l, da_r, cap).holds) return false;
  return satisfies_identity(m, phi_word(build_G(level)),
                            phi_word(build_I(level)), cap)
      .holds;
}

bool in_Lm_by_identities(const FiniteMonoid& m, int level, std::uint64_t cap) {
  if (level < 2) throw InvalidInput("the identity route needs m >= 2");
  auto [da_l, da_r] = da_identity();
  if (!satisfies_identity(m, da_l, da_r, cap).holds) return false;
  return satisfies_identity(m, phi_word(mirror(build_G(level))),
                            phi_word(mirror(build_I(level))), cap)
      .holds;
}

Fo2Level fo2_level_by_identities(const FiniteMonoid& m, int max_m,
                                 std::uint64_t cap) {
  if (max_m < 1) throw InvalidInput("max_m must be at least 1");
  auto [da_l, da_r] = da_identity();
  if (!satisfies_identity(m, da_l, da_r, cap).holds) return Fo2Level::not_fo2();
  for (int level = 1; level <= max_m; ++level) {
    if (in_Rm_by_identities(m, level + 1, cap) &&
        in_Lm_by_identities(m, level + 1, cap)) {
      return Fo2Level::level(level);
    }
  }
  return Fo2Level::exceeded(max_m);
}

namespace {

// x_from ... x_to as a product
std::vector<OmegaTerm> var_run(int from, int to) {
  std::vector<OmegaTerm> out;
  for (int k = from; k <= to; ++k) out.push_back(OmegaTerm::var(k));
  return out;
}

}  // namespace

std::pair<OmegaTerm, OmegaTerm> straubing_terms(int m) {
  if (m < 1) throw InvalidInput("Straubing terms are defined for m >= 1");
  OmegaTerm u = OmegaTerm::omega(OmegaTerm::word({1, 2}));
  OmegaTerm v = OmegaTerm::omega(OmegaTerm::word({2, 1}));
  for (int n = 1; n < m; ++n) {
    auto left = var_run(1, 2 * n + 1);
    std::vector<OmegaTerm> right{OmegaTerm::var(2 * n + 2)};
    auto tail = var_run(1, 2 * n);
    right.insert(right.end(), tail.begin(), tail.end());
    OmegaTerm lw = OmegaTerm::omega(OmegaTerm::product(left));
    OmegaTerm rw = OmegaTerm::omega(OmegaTerm::product(right));
    u = OmegaTerm::product({lw, u, rw});
    v = OmegaTerm::product({lw, v, rw});
  }
  return {u, v};
}

bool check_straubing(const FiniteMonoid& m, int level, std::uint64_t cap) {
  if (!is_aperiodic(m)) return false;
  auto [u, v] = straubing_terms(level);
  return satisfies_identity(m, u, v, cap).holds;
}

}  // namespace fo2

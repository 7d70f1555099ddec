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

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "fo2/error.hpp"
#include "fo2/identities.hpp"
#include "fo2/omega_term.hpp"
#include "support/fixtures.hpp"
#include "support/reference.hpp"

namespace fo2 {
namespace {

using testing::corpus_monoids;
using testing::syntactic;

OmegaTerm V(int k) { return OmegaTerm::var(k); }
OmegaTerm W(OmegaTerm t) { return OmegaTerm::omega(std::move(t)); }
OmegaTerm P(std::vector<OmegaTerm> ts) { return OmegaTerm::product(std::move(ts)); }

// Full |M|^v enumeration, no reductions.
bool holds_everywhere(const FiniteMonoid& m, const OmegaTerm& l, const OmegaTerm& r) {
  const int v = std::max(l.num_vars(), r.num_vars());
  std::vector<Element> a(static_cast<std::size_t>(v), 0);
  while (true) {
    if (eval_term(m, l, a) != eval_term(m, r, a)) return false;
    int i = v - 1;
    while (i >= 0 && ++a[static_cast<std::size_t>(i)] == m.size()) {
      a[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) return true;
  }
}

TEST(Mirror, Examples) {
  EXPECT_EQ(mirror({2, 1}), (VarWord{1, 2}));
  EXPECT_EQ(mirror({2, 1, 2}), (VarWord{2, 1, 2}));
  EXPECT_EQ(mirror({5}), (VarWord{5}));
}

TEST(BuildWords, Examples) {
  EXPECT_EQ(build_G(2), (VarWord{2, 1}));
  EXPECT_EQ(build_I(2), (VarWord{2, 1, 2}));
  EXPECT_EQ(build_G(3), (VarWord{3, 1, 2}));
  EXPECT_EQ(build_I(3), (VarWord{3, 1, 2, 3, 2, 1, 2}));
  EXPECT_THROW(build_G(1), InvalidInput);
  EXPECT_THROW(build_I(1), InvalidInput);
}

TEST(BuildWords, Structure) {
  for (int m = 2; m <= 7; ++m) {
    VarWord g = build_G(m), i = build_I(m);
    EXPECT_EQ(g.size(), static_cast<std::size_t>(m));
    EXPECT_EQ(*std::max_element(g.begin(), g.end()), m);
    std::vector<int> sorted = g;
    std::sort(sorted.begin(), sorted.end());
    for (int k = 0; k < m; ++k) EXPECT_EQ(sorted[static_cast<std::size_t>(k)], k + 1);
    if (m > 2) { EXPECT_EQ(i.size(), g.size() + 1 + build_I(m - 1).size()); }
  }
}

TEST(PhiOf, Examples) {
  EXPECT_EQ(phi_of(1), W(P({W(V(1)), W(V(2)), W(V(1))})));
  EXPECT_EQ(phi_of(2), W(V(2)));
  VarWord gg = build_G(2);
  VarWord gbar = mirror(gg);
  gg.insert(gg.end(), gbar.begin(), gbar.end());
  EXPECT_EQ(gg, (VarWord{2, 1, 1, 2}));
  EXPECT_EQ(phi_of(3), W(P({W(V(3)), W(phi_word(gg)), W(V(3))})));
  EXPECT_EQ(phi_of(1).to_string(), "((x1)^w.(x2)^w.(x1)^w)^w");
}

TEST(EvalTerm, Examples) {
  FiniteMonoid m = syntactic("(ab)*");
  const Element a = eval_word(m, "a"), b = eval_word(m, "b"), ab = eval_word(m, "ab");
  std::vector<Element> asg{a};
  EXPECT_EQ(eval_term(m, V(1), asg), a);
  std::vector<Element> idem{ab};
  EXPECT_EQ(eval_term(m, W(V(1)), idem), ab);
  std::vector<Element> pair{a, b};
  EXPECT_EQ(eval_term(m, W(P({V(1), V(2)})), pair), ab);
  EXPECT_THROW(eval_term(m, V(3), pair), InvalidInput);
}

OmegaTerm random_term(std::mt19937& rng, int depth, int vars) {
  int pick = static_cast<int>(rng() % (depth == 0 ? 1 : 3));
  if (pick == 0) return V(1 + static_cast<int>(rng() % static_cast<unsigned>(vars)));
  if (pick == 1) return W(random_term(rng, depth - 1, vars));
  return P({random_term(rng, depth - 1, vars), random_term(rng, depth - 1, vars)});
}

TEST(EvalTerm, OmegaIsIdempotentAndCompiledAgrees) {
  std::mt19937 rng(5);
  auto ms = corpus_monoids(29, 20);
  for (int i = 0; i < 40; ++i) {
    OmegaTerm t = random_term(rng, 4, 3);
    CompiledTerm c(W(t));
    for (const auto& m : ms) {
      for (int j = 0; j < 10; ++j) {
        std::vector<Element> a{static_cast<Element>(rng() % m.size()),
                               static_cast<Element>(rng() % m.size()),
                               static_cast<Element>(rng() % m.size())};
        Element e = eval_term(m, W(t), a);
        EXPECT_TRUE(m.is_idempotent(e));
        EXPECT_EQ(c.eval(m, a), e);
      }
    }
  }
}

TEST(SatisfiesIdentity, Examples) {
  auto [l, r] = da_identity();
  EXPECT_TRUE(satisfies_identity(ref::one_zero(), l, r).holds);
  FiniteMonoid m = syntactic("(ab)*");
  IdentityCheck c = satisfies_identity(m, l, r);
  ASSERT_FALSE(c.holds);
  ASSERT_TRUE(c.witness);
  EXPECT_NE(eval_term(m, l, *c.witness), eval_term(m, r, *c.witness));
  OmegaTerm t = phi_word(build_I(3));
  EXPECT_TRUE(satisfies_identity(m, t, t).holds);
}

TEST(SatisfiesIdentity, BudgetExceeded) {
  FiniteMonoid m = syntactic("(ab)*");
  OmegaTerm t = P({V(1), V(2), V(3)});
  EXPECT_THROW(satisfies_identity(m, t, t, 10), BudgetExceeded);
}

TEST(SatisfiesIdentity, IdempotentReductionIsExact) {
  auto [dl, dr] = da_identity();
  auto [sl, sr] = straubing_terms(1);
  const std::vector<std::pair<OmegaTerm, OmegaTerm>> ids{
      {dl, dr},
      {sl, sr},
      {phi_word(build_G(2)), phi_word(build_I(2))},
      {phi_word(mirror(build_G(2))), phi_word(mirror(build_I(2)))},
      {P({W(V(1)), V(2)}), P({V(2), W(V(1))})}};
  for (const auto& m : corpus_monoids(31, 60)) {
    if (m.size() > 12) continue;
    for (const auto& [l, r] : ids) {
      EXPECT_EQ(satisfies_identity(m, l, r).holds, holds_everywhere(m, l, r));
    }
  }
}

TEST(IdentityRoute, Examples) {
  EXPECT_TRUE(in_Rm_by_identities(ref::left_zero(), 2));
  EXPECT_FALSE(in_Lm_by_identities(ref::left_zero(), 2));
  EXPECT_TRUE(in_Rm_by_identities(ref::one_zero(), 2));
  EXPECT_THROW(in_Rm_by_identities(ref::one_zero(), 1), InvalidInput);
  EXPECT_EQ(fo2_level_by_identities(syntactic("a(a|b)*")), Fo2Level::level(2));
  EXPECT_EQ(fo2_level_by_identities(syntactic("(ab)*")), Fo2Level::not_fo2());
}

TEST(IdentityRoute, AgreesWithMalcevRecursion) {
  for (const auto& m : corpus_monoids(37, 150)) {
    FiniteMonoid rev = reverse(m);
    for (int k = 2; k <= 3; ++k) {
      EXPECT_EQ(in_Rm_by_identities(m, k), in_Rm(m, k));
      EXPECT_EQ(in_Lm_by_identities(m, k), in_Lm(m, k));
      EXPECT_EQ(in_Lm_by_identities(m, k), in_Rm_by_identities(rev, k));
    }
    EXPECT_EQ(fo2_level_by_identities(m, 3), fo2_level(m, 3));
  }
}

TEST(Straubing, Terms) {
  auto [u1, v1] = straubing_terms(1);
  EXPECT_EQ(u1, W(P({V(1), V(2)})));
  EXPECT_EQ(v1, W(P({V(2), V(1)})));
  auto [u2, v2] = straubing_terms(2);
  EXPECT_EQ(u2, P({W(P({V(1), V(2), V(3)})), u1, W(P({V(4), V(1), V(2)}))}));
  EXPECT_EQ(v2, P({W(P({V(1), V(2), V(3)})), v1, W(P({V(4), V(1), V(2)}))}));
  EXPECT_EQ(u2.num_vars(), 4);
  EXPECT_THROW(straubing_terms(0), InvalidInput);
}

TEST(Straubing, Check) {
  for (int m = 1; m <= 3; ++m) EXPECT_TRUE(check_straubing(ref::trivial(), m));
  EXPECT_FALSE(check_straubing(ref::cyclic2(), 1));
  EXPECT_TRUE(check_straubing(ref::one_zero(), 1));
  EXPECT_FALSE(check_straubing(syntactic("(ab)*"), 1));
}

}  // namespace
}  // namespace fo2

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

#include <gtest/gtest.h>

#include "fo2/error.hpp"
#include "fo2/greens.hpp"
#include "fo2/varieties.hpp"
#include "support/fixtures.hpp"
#include "support/reference.hpp"

namespace fo2 {
namespace {

using testing::corpus_monoids;
using testing::syntactic;

bool same_relation(const Congruence& c, const ref::Relation& r) {
  for (Element u = 0; u < r.size(); ++u) {
    for (Element v = 0; v < r.size(); ++v) {
      if (c.related(u, v) != r[u][v]) return false;
    }
  }
  return true;
}

TEST(SimK, Examples) {
  EXPECT_EQ(sim_k(ref::trivial()).num_classes(), 1u);
  Congruence k = sim_k(ref::left_zero());
  EXPECT_EQ(k.labels(), (std::vector<std::size_t>{0, 1, 1}));
  EXPECT_EQ(sim_k(ref::one_zero()).num_classes(), 2u);
}

TEST(SimD, Examples) {
  EXPECT_EQ(sim_d(ref::trivial()).num_classes(), 1u);
  EXPECT_EQ(sim_d(ref::left_zero()), Congruence::identity(3));
  EXPECT_EQ(sim_d(ref::right_zero()).labels(), (std::vector<std::size_t>{0, 1, 1}));
}

TEST(SimLI, Examples) {
  EXPECT_EQ(sim_li(ref::trivial()).num_classes(), 1u);
  EXPECT_EQ(sim_li(ref::one_zero()).num_classes(), 2u);
}

TEST(Congruences, MatchDefinitions) {
  for (const auto& m : corpus_monoids(13, 60)) {
    if (m.size() > 16) continue;
    Congruence k = sim_k(m), d = sim_d(m), li = sim_li(m);
    EXPECT_TRUE(same_relation(k, ref::sim_k(m)));
    EXPECT_TRUE(same_relation(d, ref::sim_d(m)));
    EXPECT_TRUE(same_relation(li, ref::sim_li(m)));
    EXPECT_TRUE(k.refines(li));
    EXPECT_TRUE(d.refines(li));
    EXPECT_NO_THROW(quotient(m, k));
    EXPECT_NO_THROW(quotient(m, d));
    EXPECT_NO_THROW(quotient(m, li));
  }
}

TEST(Congruences, LabelsInOrderOfFirstElement) {
  Congruence c(std::vector<std::size_t>{7, 3, 7, 3, 9});
  EXPECT_EQ(c.labels(), (std::vector<std::size_t>{0, 1, 0, 1, 2}));
  EXPECT_EQ(c.num_classes(), 3u);
}

TEST(Quotient, IdentityCongruenceGivesCopy) {
  FiniteMonoid m = syntactic("(ab)*");
  EXPECT_EQ(quotient(m, Congruence::identity(m.size())), m);
}

TEST(Quotient, LeftZeroBySimK) {
  FiniteMonoid q = quotient(ref::left_zero(), sim_k(ref::left_zero()));
  ASSERT_EQ(q.size(), 2u);
  EXPECT_EQ(q.identity(), 0u);
  EXPECT_EQ(q.mul(1, 1), 1u);
  ASSERT_TRUE(q.has_gens());
  EXPECT_EQ(q.gens()->images, (std::vector<Element>{1, 1}));
}

TEST(Quotient, UniversalGivesTrivial) {
  FiniteMonoid m = syntactic("(ab)*");
  EXPECT_EQ(quotient(m, Congruence::universal(m.size())).size(), 1u);
}

TEST(Quotient, RejectsNonCongruence) {
  FiniteMonoid m = syntactic("(ab)*");
  std::vector<std::size_t> labels(m.size());
  for (Element x = 0; x < m.size(); ++x) labels[x] = x;
  labels[eval_word(m, "a")] = labels[m.identity()];
  EXPECT_THROW(quotient(m, Congruence(labels)), InconsistencyError);
}

TEST(InRm, Examples) {
  EXPECT_TRUE(in_Rm(ref::one_zero(), 1));
  EXPECT_TRUE(in_Lm(ref::one_zero(), 1));
  EXPECT_TRUE(in_Rm(ref::left_zero(), 2));
  EXPECT_FALSE(in_Lm(ref::left_zero(), 2));
  EXPECT_TRUE(in_Lm(ref::left_zero(), 3));
  FiniteMonoid ab = syntactic("(ab)*");
  for (int k = 1; k <= static_cast<int>(ab.size()); ++k) {
    EXPECT_FALSE(in_Rm(ab, k));
    EXPECT_FALSE(in_Lm(ab, k));
  }
  EXPECT_THROW(in_Rm(ab, 0), InvalidInput);
}

TEST(Fo2Level, Examples) {
  EXPECT_EQ(fo2_level(ref::trivial()), Fo2Level::level(1));
  EXPECT_EQ(fo2_level(syntactic("a(a|b)*")), Fo2Level::level(2));
  EXPECT_EQ(fo2_level(ref::left_zero()), Fo2Level::level(2));
  EXPECT_EQ(fo2_level(syntactic("(ab)*")), Fo2Level::not_fo2());
  EXPECT_EQ(fo2_level(ref::left_zero(), 1), Fo2Level::exceeded(1));
  EXPECT_THROW(fo2_level(ref::trivial(), 0), InvalidInput);
}

TEST(Fo2Level, Strings) {
  EXPECT_EQ(Fo2Level::level(3).to_string(), "3");
  EXPECT_EQ(Fo2Level::not_fo2().to_string(), "not FO2-definable");
  EXPECT_EQ(Fo2Level::exceeded(6).to_string(), "> 6");
}

TEST(Join, Examples) {
  FiniteMonoid m = ref::left_zero();
  Congruence k = sim_k(m), d = sim_d(m);
  EXPECT_EQ(join(m, k, k), k);
  EXPECT_EQ(join(m, Congruence::identity(3), k), k);
  EXPECT_EQ(join(m, k, d).labels(), (std::vector<std::size_t>{0, 1, 1}));
  EXPECT_TRUE(join_refines_check(m, k, d, k));
  EXPECT_FALSE(join_refines_check(m, k, d, Congruence::identity(3)));
}

TEST(Join, ClosesUnderProducts) {
  // Relating a and b in (ab)* forces ab ~ bb = 0 and so on.
  FiniteMonoid m = syntactic("(ab)*");
  std::vector<std::size_t> labels(m.size());
  for (Element x = 0; x < m.size(); ++x) labels[x] = x;
  labels[eval_word(m, "b")] = labels[eval_word(m, "a")];
  Congruence c = join(m, Congruence(labels), Congruence::identity(m.size()));
  EXPECT_NO_THROW(quotient(m, c));
  EXPECT_TRUE(c.related(eval_word(m, "ab"), eval_word(m, "aa")));
}

TEST(Hierarchy, RecursionMatchesReference) {
  for (const auto& m : corpus_monoids(17, 60)) {
    if (m.size() > 16) continue;
    for (int k = 1; k <= 4; ++k) {
      EXPECT_EQ(in_Rm(m, k), ref::in_R(m, k));
      EXPECT_EQ(in_Lm(m, k), ref::in_L(m, k));
    }
  }
}

TEST(Hierarchy, Properties) {
  for (const auto& m : corpus_monoids(19, 150)) {
    const bool da = is_in_da(m);
    EXPECT_EQ(in_Rm(m, 2), is_r_trivial(m));
    EXPECT_EQ(in_Lm(m, 2), is_l_trivial(m));
    FiniteMonoid rev = reverse(m);
    for (int k = 1; k <= 4; ++k) {
      const bool r = in_Rm(m, k), l = in_Lm(m, k);
      if (r) { EXPECT_TRUE(in_Rm(m, k + 1)); }
      if (l) { EXPECT_TRUE(in_Lm(m, k + 1)); }
      if (r || l) { EXPECT_TRUE(in_Rm(m, k + 1) && in_Lm(m, k + 1)); }
      if (r || l) { EXPECT_TRUE(da); }
      EXPECT_EQ(r, in_Lm(rev, k));
    }
    Fo2Level lvl = fo2_level(m);
    EXPECT_EQ(lvl.kind == Fo2Level::Kind::NotFO2, !da);
    EXPECT_EQ(lvl == Fo2Level::level(1), is_j_trivial(m));
  }
}

TEST(Hierarchy, LiftLemma) {
  for (const auto& m : corpus_monoids(23, 60)) {
    const auto k = ref::sim_k(m), d = ref::sim_d(m);
    const auto n = static_cast<Element>(m.size());
    for (Element s = 0; s < n; ++s) {
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          Element sx = m.mul(s, x), xs = m.mul(x, s);
          if (k[x][y] && ref::rleq(m, s, sx)) { EXPECT_EQ(sx, m.mul(s, y)); }
          if (d[x][y] && ref::lleq(m, s, xs)) { EXPECT_EQ(xs, m.mul(y, s)); }
        }
      }
    }
  }
}

}  // namespace
}  // namespace fo2

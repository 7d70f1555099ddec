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
#include "fo2/monoid.hpp"
#include "support/fixtures.hpp"
#include "support/reference.hpp"

namespace fo2 {
namespace {

using testing::corpus_monoids;
using testing::syntactic;

TEST(TransitionMonoid, Sizes) {
  EXPECT_EQ(syntactic("(a|b)*").size(), 1u);
  EXPECT_EQ(syntactic("(ab)*").size(), 6u);
  EXPECT_EQ(syntactic("(a|b)*a(a|b)*").size(), 2u);
  EXPECT_EQ(syntactic("a(a|b)*").size(), 3u);
}

TEST(TransitionMonoid, AbStarElements) {
  FiniteMonoid m = syntactic("(ab)*");
  EXPECT_EQ(element_labels(m), (std::vector<std::string>{"1", "a", "b", "aa", "ab", "ba"}));
  const Element zero = eval_word(m, "aa");
  EXPECT_EQ(eval_word(m, "bb"), zero);
  for (Element x = 0; x < m.size(); ++x) {
    EXPECT_EQ(m.mul(x, zero), zero);
    EXPECT_EQ(m.mul(zero, x), zero);
  }
}

TEST(TransitionMonoid, MatchesTransformationClosure) {
  CorpusOptions o;
  o.count = 80;
  o.max_states = 5;
  for (const Dfa& d : generate_corpus(o)) {
    EXPECT_EQ(transition_monoid(d).size(), ref::transformation_count(d));
  }
}

TEST(TransitionMonoid, CapIsEnforced) {
  EXPECT_THROW(transition_monoid(regex_to_min_dfa(parse_regex("(ab)*")), 5), BudgetExceeded);
}

TEST(EvalWord, Examples) {
  FiniteMonoid m = syntactic("(ab)*");
  EXPECT_EQ(eval_word(m, ""), m.identity());
  EXPECT_EQ(element_labels(m)[eval_word(m, "ab")], "ab");
  EXPECT_EQ(eval_word(m, "abab"), eval_word(m, "ab"));
  EXPECT_THROW(eval_word(m, "c"), InvalidInput);
  EXPECT_THROW(eval_word(ref::one_zero(), "a"), InvalidInput);
}

TEST(Idempotents, Examples) {
  EXPECT_EQ(idempotents(ref::trivial()), std::vector<Element>{0});
  EXPECT_EQ(idempotents(ref::one_zero()), (std::vector<Element>{0, 1}));
  FiniteMonoid m = syntactic("(ab)*");
  std::vector<Element> expect{eval_word(m, ""), eval_word(m, "aa"), eval_word(m, "ab"),
                              eval_word(m, "ba")};
  std::sort(expect.begin(), expect.end());
  EXPECT_EQ(idempotents(m), expect);
}

TEST(OmegaPower, Examples) {
  FiniteMonoid m = syntactic("(ab)*");
  EXPECT_EQ(omega_power(m, m.identity()), m.identity());
  EXPECT_EQ(omega_power(m, eval_word(m, "ab")), eval_word(m, "ab"));
  EXPECT_EQ(omega_power(m, eval_word(m, "a")), eval_word(m, "aa"));
  EXPECT_EQ(omega_power(ref::cyclic2(), 1), 0u);
}

TEST(OmegaPower, IsIdempotentPower) {
  for (const auto& m : corpus_monoids(3, 60)) {
    for (Element x = 0; x < m.size(); ++x) {
      const Element e = omega_power(m, x);
      EXPECT_EQ(e, ref::omega(m, x));
      EXPECT_TRUE(m.is_idempotent(e));
      bool is_power = false;
      Element p = x;
      for (std::size_t k = 0; k <= m.size() && !is_power; ++k, p = m.mul(p, x)) {
        is_power = p == e;
      }
      EXPECT_TRUE(is_power);
    }
  }
}

TEST(Greens, OneZero) {
  GreensData g = greens(ref::one_zero());
  EXPECT_NE(g.j_class[0], g.j_class[1]);
  EXPECT_TRUE(g.j_strictly_below(1, 0));
}

TEST(Greens, LeftZero) {
  FiniteMonoid m = ref::left_zero();
  GreensData g = greens(m);
  EXPECT_TRUE(g.j_equiv(1, 2));
  EXPECT_FALSE(g.r_equiv(1, 2));
  EXPECT_TRUE(g.l_equiv(1, 2));
  EXPECT_TRUE(is_r_trivial(m));
  EXPECT_FALSE(is_l_trivial(m));
  EXPECT_FALSE(is_j_trivial(m));
}

TEST(Greens, AbStarClasses) {
  FiniteMonoid m = syntactic("(ab)*");
  GreensData g = greens(m);
  EXPECT_EQ(num_classes(g.j_class), 3u);
  const Element a = eval_word(m, "a"), b = eval_word(m, "b");
  const Element ab = eval_word(m, "ab"), ba = eval_word(m, "ba");
  EXPECT_TRUE(g.j_equiv(a, b) && g.j_equiv(a, ab) && g.j_equiv(a, ba));
  EXPECT_FALSE(g.j_equiv(m.identity(), a));
  EXPECT_FALSE(g.j_equiv(eval_word(m, "aa"), a));
  EXPECT_FALSE(is_j_trivial(m) || is_r_trivial(m) || is_l_trivial(m));
}

TEST(Greens, MatchesDefinitions) {
  for (const auto& m : corpus_monoids(11, 40)) {
    GreensData g = greens(m);
    for (Element u = 0; u < m.size(); ++u) {
      for (Element v = 0; v < m.size(); ++v) {
        ASSERT_EQ(g.rleq.test(u, v), ref::rleq(m, u, v));
        ASSERT_EQ(g.lleq.test(u, v), ref::lleq(m, u, v));
        ASSERT_EQ(g.jleq.test(u, v), ref::jleq(m, u, v));
        if (g.rleq.test(u, v) || g.lleq.test(u, v)) { ASSERT_TRUE(g.jleq.test(u, v)); }
        ASSERT_EQ(g.r_equiv(u, v), ref::rleq(m, u, v) && ref::rleq(m, v, u));
      }
    }
  }
}

TEST(Greens, ClassesNumberedInOrderOfSmallestElement) {
  for (const auto& m : corpus_monoids(12, 30)) {
    GreensData g = greens(m);
    for (const auto* labels : {&g.j_class, &g.r_class, &g.l_class}) {
      std::size_t next = 0;
      for (Element x = 0; x < m.size(); ++x) {
        EXPECT_LE((*labels)[x], next);
        if ((*labels)[x] == next) ++next;
      }
      EXPECT_EQ(next, num_classes(*labels));
    }
  }
}

TEST(Varieties, Aperiodic) {
  EXPECT_FALSE(is_aperiodic(ref::cyclic2()));
  EXPECT_TRUE(is_aperiodic(syntactic("(ab)*")));
  EXPECT_TRUE(is_aperiodic(ref::left_zero()));
  EXPECT_FALSE(is_aperiodic(syntactic("(aa)*")));
}

TEST(Varieties, DA) {
  EXPECT_TRUE(is_in_da(ref::one_zero()));
  EXPECT_TRUE(is_in_da(ref::left_zero()));
  FiniteMonoid m = syntactic("(ab)*");
  std::pair<Element, Element> w;
  ASSERT_FALSE(is_in_da(m, &w));
  EXPECT_EQ(w.first, eval_word(m, "a"));
  EXPECT_EQ(w.second, eval_word(m, "b"));
}

TEST(Varieties, J1) {
  EXPECT_TRUE(is_in_j1(ref::trivial()));
  EXPECT_TRUE(is_in_j1(ref::one_zero()));
  EXPECT_FALSE(is_in_j1(ref::left_zero()));
}

TEST(Varieties, Inclusions) {
  for (const auto& m : corpus_monoids(5, 120)) {
    EXPECT_EQ(is_j_trivial(m), is_r_trivial(m) && is_l_trivial(m));
    EXPECT_EQ(is_j_trivial(m), ref::j_trivial(m));
    if (is_in_j1(m)) { EXPECT_TRUE(is_in_da(m)); }
    if (is_in_da(m)) { EXPECT_TRUE(is_aperiodic(m)); }
  }
}

TEST(Recognition, SyntacticMonoidRecognizesLanguage) {
  for (const Dfa& d : generate_corpus(CorpusOptions{.seed = 21, .count = 40})) {
    FiniteMonoid m = transition_monoid(d);
    std::vector<int> verdict(m.size(), -1);
    for (const auto& w : ref::words("ab", 8)) {
      Element x = eval_word(m, w);
      int acc = d.accepts(w) ? 1 : 0;
      if (verdict[x] < 0) verdict[x] = acc;
      ASSERT_EQ(verdict[x], acc) << w;
    }
  }
}

TEST(Reverse, Involution) {
  for (const auto& m : corpus_monoids(8, 30)) {
    FiniteMonoid r = reverse(m);
    EXPECT_EQ(reverse(r), m);
    for (Element x = 0; x < m.size(); ++x) {
      for (Element y = 0; y < m.size(); ++y) EXPECT_EQ(r.mul(x, y), m.mul(y, x));
    }
  }
}

TEST(MonoidFile, Trivial) {
  FiniteMonoid m = parse_monoid_file("size: 1\nidentity: 0\ntable\n0\n");
  EXPECT_EQ(m.size(), 1u);
}

constexpr const char* kLeftZero = R"(# left-zero monoid
size: 3
identity: 0
gen a 1
gen b 2
table
0 1 2
1 1 1
2 2 2
)";

TEST(MonoidFile, LeftZeroWithGenerators) {
  FiniteMonoid m = parse_monoid_file(kLeftZero);
  EXPECT_EQ(m.identity(), 0u);
  EXPECT_EQ(m, ref::left_zero());
  EXPECT_EQ(eval_word(m, "ba"), 2u);
  EXPECT_EQ(parse_monoid_file(format_monoid_file(m)), m);
}

TEST(MonoidFile, Errors) {
  EXPECT_THROW(parse_monoid_file("size: 2\nidentity: 0\ntable\n0 1\n1\n"), ParseError);
  EXPECT_THROW(parse_monoid_file("size: 2\nidentity: 0\ntable\n0 1\n"), ParseError);
  // identity law fails
  EXPECT_THROW(parse_monoid_file("size: 2\nidentity: 1\ntable\n0 1\n1 1\n"), InvalidInput);
  // not associative: (1*1)*2 = 2*2 = 0 but 1*(1*2) = 1*1 = 2
  EXPECT_THROW(parse_monoid_file("size: 3\nidentity: 0\ntable\n0 1 2\n1 2 1\n2 1 0\n"),
               InvalidInput);
  EXPECT_THROW(parse_monoid_file("size: 2\nidentity: 0\ntable\n0 1\n1 5\n"), Error);
}

TEST(MonoidFile, RoundTripsCorpus) {
  for (const auto& m : corpus_monoids(9, 30)) {
    EXPECT_EQ(parse_monoid_file(format_monoid_file(m)), m);
  }
}

}  // namespace
}  // namespace fo2

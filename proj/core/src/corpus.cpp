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

#include "fo2/corpus.hpp"

#include <array>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>

#include "fo2/error.hpp"
#include "fo2/greens.hpp"
#include "fo2/identities.hpp"
#include "fo2/monoid.hpp"
#include "fo2/oracle.hpp"
#include "fo2/ranker.hpp"
#include "fo2/ranker_relations.hpp"
#include "fo2/varieties.hpp"

namespace fo2 {

namespace {

using namespace corpus_property;

constexpr int kMaxTableLevel = 4;

std::string dfa_key(const Dfa& d) {
  std::string key = std::to_string(d.num_states()) + ":";
  for (State s = 0; s < d.num_states(); ++s) {
    key += d.is_final(s) ? 'F' : 'N';
    for (std::size_t a = 0; a < d.alphabet().size(); ++a) {
      key += std::to_string(d.next(s, a)) + ',';
    }
  }
  return key;
}

class Tallies {
 public:
  Tallies() {
    for (const char* name :
         {kDualRoute, kLevelRoutes, kLevelOne, kLevelTwo, kMonotone, kInDa,
          kMirror, kCongruences, kLiftEq, kDaLemma, kOracle, kGenerate,
          kCombi, kCombiDual, kOneRanker, kCross, kSubwords, kRankerCongruence,
          kCondensedDefined}) {
      add(name, true);
    }
    add(kCondensedSemantics, false);
  }

  template <class Describe>
  void check(const char* name, bool ok, Describe&& describe) {
    PropertyTally& t = at(name);
    ++t.checked;
    if (!ok) {
      if (t.failed == 0) t.first_failure = describe();
      ++t.failed;
    }
  }

  void skip(const char* name) { ++at(name).skipped; }

  std::vector<PropertyTally> release() { return std::move(list_); }

 private:
  void add(const char* name, bool gating) {
    index_[name] = list_.size();
    PropertyTally t;
    t.name = name;
    t.gating = gating;
    list_.push_back(std::move(t));
  }
  PropertyTally& at(const char* name) { return list_[index_.at(name)]; }

  std::vector<PropertyTally> list_;
  std::map<std::string, std::size_t> index_;
};

std::string show_word(std::string_view w) {
  return w.empty() ? std::string("<empty>") : std::string(w);
}

std::string show_pair(std::string_view u, std::string_view v) {
  return show_word(u) + " / " + show_word(v);
}

std::string pct(std::size_t num, std::size_t den) {
  if (den == 0) return "n/a";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f%%",
                100.0 * static_cast<double>(num) / static_cast<double>(den));
  return buf;
}

// Checks run on one monoid of the corpus.
class MonoidChecks {
 public:
  MonoidChecks(const CorpusOptions& options, const Dfa& dfa,
               const FiniteMonoid& m, PartitionCache& cache, Tallies& t,
               CorpusReport& report)
      : options_(options), dfa_(dfa), m_(m), g_(greens(m)), cache_(cache),
        t_(t), report_(report) {}

  void run() {
    ++report_.monoids;
    da_ = is_in_da(m_);
    if (da_) ++report_.in_da;

    try {
      level_ = fo2_level(m_, 6);
    } catch (const InconsistencyError& e) {
      t_.check(kLevelRoutes, false, [&] { return tag() + e.what(); });
      return;
    }
    if (level_.kind == Fo2Level::Kind::Level) {
      auto v = static_cast<std::size_t>(level_.value);
      if (report_.level_histogram.size() <= v) report_.level_histogram.resize(v + 1);
      ++report_.level_histogram[v];
    } else if (level_.kind == Fo2Level::Kind::NotFO2) {
      if (report_.level_histogram.empty()) report_.level_histogram.resize(1);
      ++report_.level_histogram[0];
    } else {
      ++report_.exceeded;
    }

    for (int k = 1; k <= kMaxTableLevel; ++k) {
      r_[k] = in_Rm(m_, k);
      l_[k] = in_Lm(m_, k);
    }

    dual_route();
    level_routes();
    anchors();
    mirror();
    congruences();
    lift_lemma();
    if (da_) da_lemma();
    oracles();
    straubing();
  }

 private:
  std::string tag() const {
    return "dfa " + dfa_key(dfa_) + " (|M|=" + std::to_string(m_.size()) + "): ";
  }

  void dual_route() {
    for (int k : {2, 3}) {
      try {
        bool ri = in_Rm_by_identities(m_, k);
        t_.check(kDualRoute, ri == r_[k], [&] {
          return tag() + "R_" + std::to_string(k) + " quotient " +
                 std::to_string(r_[k]) + " identities " + std::to_string(ri);
        });
      } catch (const BudgetExceeded&) {
        t_.skip(kDualRoute);
      }
      try {
        bool li = in_Lm_by_identities(m_, k);
        t_.check(kDualRoute, li == l_[k], [&] {
          return tag() + "L_" + std::to_string(k) + " quotient " +
                 std::to_string(l_[k]) + " identities " + std::to_string(li);
        });
      } catch (const BudgetExceeded&) {
        t_.skip(kDualRoute);
      }
    }
  }

  void level_routes() {
    try {
      Fo2Level a = fo2_level(m_, 3);
      Fo2Level b = fo2_level_by_identities(m_, 3);
      t_.check(kLevelRoutes, a == b, [&] {
        return tag() + "quotient " + a.to_string() + " identities " + b.to_string();
      });
    } catch (const BudgetExceeded&) {
      t_.skip(kLevelRoutes);
    }
  }

  void anchors() {
    bool one = level_ == Fo2Level::level(1);
    bool jt = is_j_trivial(m_);
    t_.check(kLevelOne, one == jt, [&] {
      return tag() + "level " + level_.to_string() + " j_trivial " + std::to_string(jt);
    });
    bool rt = is_r_trivial(m_), lt = is_l_trivial(m_);
    t_.check(kLevelTwo, r_[2] == rt && l_[2] == lt, [&] {
      return tag() + "R_2 " + std::to_string(r_[2]) + " r_trivial " +
             std::to_string(rt) + " L_2 " + std::to_string(l_[2]) +
             " l_trivial " + std::to_string(lt);
    });
    for (int k = 1; k < kMaxTableLevel; ++k) {
      bool ok = !(r_[k] || l_[k]) || (r_[k + 1] && l_[k + 1]);
      t_.check(kMonotone, ok, [&] { return tag() + "m=" + std::to_string(k); });
    }
    for (int k = 1; k <= kMaxTableLevel; ++k) {
      bool ok = !(r_[k] || l_[k]) || da_;
      t_.check(kInDa, ok, [&] { return tag() + "m=" + std::to_string(k); });
    }
  }

  void mirror() {
    FiniteMonoid rev = reverse(m_);
    for (int k = 1; k <= 3; ++k) {
      bool ok = r_[k] == in_Lm(rev, k) && l_[k] == in_Rm(rev, k);
      t_.check(kMirror, ok, [&] { return tag() + "quotient m=" + std::to_string(k); });
    }
    for (int k : {2, 3}) {
      try {
        bool ok = in_Lm_by_identities(m_, k) == in_Rm_by_identities(rev, k);
        t_.check(kMirror, ok, [&] { return tag() + "identities m=" + std::to_string(k); });
      } catch (const BudgetExceeded&) {
        t_.skip(kMirror);
      }
    }
  }

  void congruences() {
    const std::array<std::pair<const char*, Congruence>, 3> cs{{
        {"~K", sim_k(m_, g_)}, {"~D", sim_d(m_, g_)}, {"~LI", sim_li(m_, g_)}}};
    for (const auto& [name, c] : cs) {
      bool ok = true;
      try {
        quotient(m_, c);
      } catch (const InconsistencyError&) {
        ok = false;
      }
      t_.check(kCongruences, ok, [&] { return tag() + name + " is not a congruence"; });
    }
  }

  void lift_lemma() {
    const Congruence k = sim_k(m_, g_);
    const Congruence d = sim_d(m_, g_);
    const auto n = static_cast<Element>(m_.size());
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (x == y) continue;
        if (k.related(x, y)) {
          for (Element s = 0; s < n; ++s) {
            Element sx = m_.mul(s, x);
            if (!g_.r_equiv(s, sx)) continue;
            t_.check(kLiftEq, sx == m_.mul(s, y), [&] {
              return tag() + "s=" + std::to_string(s) + " x=" + std::to_string(x) +
                     " y=" + std::to_string(y);
            });
          }
        }
        if (d.related(x, y)) {
          for (Element s = 0; s < n; ++s) {
            Element xs = m_.mul(x, s);
            if (!g_.l_equiv(s, xs)) continue;
            t_.check(kLiftEq, xs == m_.mul(y, s), [&] {
              return tag() + "dual s=" + std::to_string(s) + " x=" +
                     std::to_string(x) + " y=" + std::to_string(y);
            });
          }
        }
      }
    }
  }

  void da_lemma() {
    const auto words = words_up_to(m_.gens()->alphabet, 4);
    std::vector<Element> phi(words.size());
    std::vector<unsigned> alph(words.size(), 0);
    for (std::size_t i = 0; i < words.size(); ++i) {
      phi[i] = eval_word(m_, words[i]);
      for (char c : words[i]) {
        alph[i] |= 1u << m_.gens()->alphabet.index_of(c);
      }
    }
    for (std::size_t x = 0; x < words.size(); ++x) {
      for (std::size_t y = 0; y < words.size(); ++y) {
        if (!g_.r_equiv(phi[x], m_.mul(phi[x], phi[y]))) continue;
        for (std::size_t z = 0; z < words.size(); ++z) {
          if ((alph[z] & ~alph[y]) != 0) continue;
          t_.check(kDaLemma, g_.r_equiv(phi[x], m_.mul(phi[x], phi[z])), [&] {
            return tag() + "x=" + show_word(words[x]) + " y=" + show_word(words[y]) +
                   " z=" + show_word(words[z]);
          });
        }
      }
    }
  }

  void oracles() {
    const int max_n = options_.oracle_max_n;
    const int max_len = options_.oracle_max_len;
    if (level_.kind == Fo2Level::Kind::Level) {
      try {
        auto s = oracle_search(m_, RankerRelationKind::WeisImmerman, level_.value,
                               max_n, max_len, &cache_);
        t_.check(kOracle, s.n.has_value(), [&] {
          return tag() + "m=" + std::to_string(level_.value) + " counterexample " +
                 show_pair(s.last.counterexample->first, s.last.counterexample->second);
        });
      } catch (const BudgetExceeded&) {
        t_.skip(kOracle);
      }
    }
    if (!da_) return;
    for (auto [kind, table] : {std::pair{RankerRelationKind::Right, &r_},
                               std::pair{RankerRelationKind::Left, &l_}}) {
      int k = 1;
      while (k <= kMaxTableLevel && !(*table)[k]) ++k;
      if (k > kMaxTableLevel) continue;
      try {
        auto s = oracle_search(m_, kind, k, max_n, max_len, &cache_);
        t_.check(kGenerate, s.n.has_value(), [&] {
          return tag() + (kind == RankerRelationKind::Right ? "right" : "left") +
                 " m=" + std::to_string(k) + " counterexample " +
                 show_pair(s.last.counterexample->first, s.last.counterexample->second);
        });
      } catch (const BudgetExceeded&) {
        t_.skip(kGenerate);
      }
    }
  }

  void straubing() {
    const bool aperiodic = is_aperiodic(m_);
    for (auto& tally : report_.straubing) {
      try {
        bool s = check_straubing(m_, tally.level);
        bool expected = aperiodic && level_.kind == Fo2Level::Kind::Level &&
                        level_.value <= tally.level;
        ++tally.compared;
        if (s == expected) ++tally.agree;
      } catch (const BudgetExceeded&) {
        ++tally.skipped;
      }
    }
  }

  const CorpusOptions& options_;
  const Dfa& dfa_;
  const FiniteMonoid& m_;
  GreensData g_;
  PartitionCache& cache_;
  Tallies& t_;
  CorpusReport& report_;
  bool da_ = false;
  Fo2Level level_;
  std::array<bool, kMaxTableLevel + 1> r_{};
  std::array<bool, kMaxTableLevel + 1> l_{};
};

// Word-level suites over {a, b} and words of length <= 6.
class WordChecks {
 public:
  WordChecks(const CorpusOptions& options, PartitionCache& cache, Tallies& t)
      : sigma_("ab"), words_(words_up_to(sigma_, kLen)), cache_(cache), t_(t),
        rng_(options.seed ^ 0x9e3779b97f4a7c15ULL) {
    for (std::size_t i = 0; i < words_.size(); ++i) index_[words_[i]] = i;
  }

  void run() {
    combi();
    one_ranker();
    cross();
    subwords();
    ranker_congruence();
    condensed();
  }

 private:
  static constexpr int kLen = 6;
  static constexpr std::size_t kSamplePairs = 150;

  const std::vector<std::size_t>& labels(RankerRelationKind kind, int m, int n) {
    return cache_.get(sigma_, kind, m, n, kLen);
  }

  bool same(RankerRelationKind kind, int m, int n, std::string_view u,
            std::string_view v) {
    const auto& l = labels(kind, m, n);
    return l[index_.at(std::string(u))] == l[index_.at(std::string(v))];
  }

  // All pairs i < j with equal labels.
  std::vector<std::pair<std::size_t, std::size_t>> pairs(
      const std::vector<std::size_t>& l) const {
    std::map<std::size_t, std::vector<std::size_t>> buckets;
    for (std::size_t i = 0; i < l.size(); ++i) buckets[l[i]].push_back(i);
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const auto& [label, members] : buckets) {
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
          out.emplace_back(members[i], members[j]);
        }
      }
    }
    return out;
  }

  static std::string rel_name(RankerRelationKind kind, int m, int n) {
    const char* sym = kind == RankerRelationKind::Right  ? "|>"
                      : kind == RankerRelationKind::Left ? "<|"
                                                         : "==";
    return std::string(sym) + "_{" + std::to_string(m) + "," + std::to_string(n) + "}";
  }

  void combi() {
    using K = RankerRelationKind;
    for (K kind : {K::Right, K::Left}) {
      const K dual = kind == K::Right ? K::Left : K::Right;
      for (int m = 2; m <= 3; ++m) {
        for (int n = 2; n <= 3; ++n) {
          for (auto [i, j] : pairs(labels(kind, m, n))) {
            const Word& u = words_[i];
            const Word& v = words_[j];
            for (char a : sigma_.symbols()) {
              auto ul = u.find(a), vl = v.find(a);
              if (ul == Word::npos || vl == Word::npos) continue;
              auto ur = u.rfind(a), vr = v.rfind(a);
              // The factorization on the side of the relation keeps both
              // factors in the same relation; the other side sends the far
              // factor to the dual relation.
              auto [same_u, same_v] = kind == K::Right ? std::pair{ul, vl} : std::pair{ur, vr};
              auto [cross_u, cross_v] = kind == K::Right ? std::pair{ur, vr} : std::pair{ul, vl};
              bool ok = same(kind, m, n - 1, u.substr(0, same_u), v.substr(0, same_v)) &&
                        same(kind, m, n - 1, u.substr(same_u + 1), v.substr(same_v + 1));
              bool near, far;
              if (kind == K::Right) {
                near = same(kind, m, n - 1, u.substr(0, cross_u), v.substr(0, cross_v));
                far = same(dual, m - 1, n - 1, u.substr(cross_u + 1), v.substr(cross_v + 1));
              } else {
                near = same(kind, m, n - 1, u.substr(cross_u + 1), v.substr(cross_v + 1));
                far = same(dual, m - 1, n - 1, u.substr(0, cross_u), v.substr(0, cross_v));
              }
              auto describe = [&] {
                return rel_name(kind, m, n) + " " + show_pair(u, v) + " letter " + a;
              };
              t_.check(kCombi, ok && near, describe);
              t_.check(kCombiDual, far, describe);
            }
          }
        }
      }
    }
  }

  void one_ranker() {
    const auto wi = RankerRelationKind::WeisImmerman;
    for (int m = 2; m <= 3; ++m) {
      for (int n = 2; n <= 3; ++n) {
        for (auto [i, j] : pairs(labels(wi, m, n))) {
          const Word& u = words_[i];
          const Word& v = words_[j];
          for (char a : sigma_.symbols()) {
            auto ul = u.find(a), vl = v.find(a);
            if (ul == Word::npos || vl == Word::npos) continue;
            auto ur = u.rfind(a), vr = v.rfind(a);
            bool ok = same(wi, m - 1, n - 1, u.substr(0, ul), v.substr(0, vl)) &&
                      same(wi, m, n - 1, u.substr(ul + 1), v.substr(vl + 1)) &&
                      same(wi, m - 1, n - 1, u.substr(ur + 1), v.substr(vr + 1)) &&
                      same(wi, m, n - 1, u.substr(0, ur), v.substr(0, vr));
            t_.check(kOneRanker, ok, [&] {
              return rel_name(wi, m, n) + " " + show_pair(u, v) + " letter " + a;
            });
          }
        }
      }
    }
  }

  void cross() {
    const auto wi = RankerRelationKind::WeisImmerman;
    for (int m = 2; m <= 3; ++m) {
      for (int n = 2; n <= 3; ++n) {
        for (auto [i, j] : pairs(labels(wi, m, n))) {
          const Word& u = words_[i];
          const Word& v = words_[j];
          for (char a : sigma_.symbols()) {
            for (char b : sigma_.symbols()) {
              if (a == b) continue;
              auto ua = u.rfind(a), ub = u.find(b);
              auto va = v.rfind(a), vb = v.find(b);
              if (ua == Word::npos || ub == Word::npos || ua > ub) continue;
              if (va == Word::npos || vb == Word::npos || va > vb) continue;
              bool ok = same(wi, m - 1, n - 1, u.substr(ua + 1, ub - ua - 1),
                             v.substr(va + 1, vb - va - 1));
              t_.check(kCross, ok, [&] {
                return rel_name(wi, m, n) + " " + show_pair(u, v) + " a=" + a + " b=" + b;
              });
            }
          }
        }
      }
    }
  }

  static std::set<Word> subwords(const Word& u, int n) {
    std::set<Word> out;
    const std::size_t len = u.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << len); ++mask) {
      Word w;
      for (std::size_t i = 0; i < len; ++i) {
        if (mask >> i & 1) w += u[i];
      }
      if (static_cast<int>(w.size()) <= n) out.insert(std::move(w));
    }
    return out;
  }

  void subwords() {
    for (int n = 1; n <= 3; ++n) {
      for (auto [i, j] : pairs(labels(RankerRelationKind::WeisImmerman, 1, n))) {
        t_.check(kSubwords, subwords(words_[i], n) == subwords(words_[j], n), [&] {
          return rel_name(RankerRelationKind::WeisImmerman, 1, n) + " " +
                 show_pair(words_[i], words_[j]);
        });
      }
    }
  }

  void ranker_congruence() {
    using K = RankerRelationKind;
    for (K kind : {K::Right, K::Left}) {
      for (int m = 1; m <= 3; ++m) {
        for (int n = 1; n <= 3; ++n) {
          RankerRelation rel(kind, sigma_, m, n);
          auto all = pairs(labels(kind, m, n));
          std::vector<std::pair<std::size_t, std::size_t>> sample;
          if (all.size() <= kSamplePairs) {
            sample = std::move(all);
          } else {
            for (std::size_t s = 0; s < kSamplePairs; ++s) {
              sample.push_back(all[rng_() % all.size()]);
            }
          }
          for (auto [i, j] : sample) {
            const Word& u = words_[i];
            const Word& v = words_[j];
            for (char c : sigma_.symbols()) {
              t_.check(kRankerCongruence, rel.related(c + u, c + v), [&] {
                return rel_name(kind, m, n) + " " + show_pair(u, v) + " left " + c;
              });
              t_.check(kRankerCongruence, rel.related(u + c, v + c), [&] {
                return rel_name(kind, m, n) + " " + show_pair(u, v) + " right " + c;
              });
            }
          }
        }
      }
    }
  }

  void condensed() {
    const std::array<std::pair<const char*, int>, 2> setups{{{"ab", 4}, {"abc", 3}}};
    for (const auto& [letters, depth] : setups) {
      Alphabet sigma(letters);
      const auto rankers = enumerate_rankers(sigma, depth, depth, StartDir::Either);
      for (const Word& u : words_up_to(sigma, 7)) {
        for (const Ranker& r : rankers) {
          bool c = is_condensed(r, u);
          t_.check(kCondensedDefined, !c || eval_ranker(r, u).has_value(), [&] {
            return r.to_string() + " on " + show_word(u);
          });
          t_.check(kCondensedSemantics, c == is_condensed_by_overrun(r, u), [&] {
            return r.to_string() + " on " + show_word(u);
          });
        }
      }
    }
  }

  Alphabet sigma_;
  std::vector<Word> words_;
  std::unordered_map<Word, std::size_t> index_;
  PartitionCache& cache_;
  Tallies& t_;
  std::mt19937_64 rng_;
};

}  // namespace

std::vector<Dfa> generate_corpus(const CorpusOptions& options) {
  static constexpr std::string_view kLetters = "abcdefgh";
  if (options.letters < 1 || options.letters > kLetters.size()) {
    throw InvalidInput("corpus letters must be between 1 and 8");
  }
  if (options.max_states < 1) throw InvalidInput("corpus max_states must be positive");

  Alphabet sigma(kLetters.substr(0, options.letters));
  std::mt19937_64 rng(options.seed);
  std::set<std::string> seen;
  std::vector<Dfa> out;
  const std::size_t limit = options.count * 1000 + 1000;
  for (std::size_t attempt = 0; out.size() < options.count && attempt < limit; ++attempt) {
    // Modulo reduction keeps the stream identical across standard libraries.
    const std::size_t states = 1 + rng() % options.max_states;
    std::vector<bool> finals(states);
    for (std::size_t s = 0; s < states; ++s) finals[s] = (rng() & 1) != 0;
    std::vector<State> delta(states * sigma.size());
    for (auto& t : delta) t = rng() % states;
    Dfa d = minimize(Dfa(sigma, states, 0, std::move(finals), std::move(delta)));
    if (!seen.insert(dfa_key(d)).second) continue;
    if (options.require_da && !is_in_da(transition_monoid(d))) continue;
    out.push_back(std::move(d));
  }
  return out;
}

CorpusReport run_corpus(const CorpusOptions& options) {
  CorpusReport report;
  report.options = options;
  report.straubing = {StraubingTally{1}, StraubingTally{2}};
  Tallies tallies;
  PartitionCache cache;

  for (const Dfa& dfa : generate_corpus(options)) {
    const FiniteMonoid m = transition_monoid(dfa);
    MonoidChecks(options, dfa, m, cache, tallies, report).run();
  }
  if (options.count > 0 && options.word_suites) {
    WordChecks(options, cache, tallies).run();
  }
  report.properties = tallies.release();
  return report;
}

bool CorpusReport::ok() const {
  for (const auto& p : properties) {
    if (p.gating && p.failed > 0) return false;
  }
  return true;
}

const PropertyTally* CorpusReport::find(const std::string& name) const {
  for (const auto& p : properties) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

std::string CorpusReport::to_text() const {
  std::ostringstream out;
  out << "corpus: seed " << options.seed << ", count " << options.count
      << ", max_states " << options.max_states << ", letters " << options.letters
      << (options.require_da ? ", DA only" : "") << '\n';
  out << "monoids: " << monoids << ", in DA: " << in_da << '\n';
  out << "levels:";
  if (level_histogram.empty() && exceeded == 0) out << " none";
  for (std::size_t v = 0; v < level_histogram.size(); ++v) {
    if (level_histogram[v] == 0) continue;
    out << ' ' << (v == 0 ? std::string("NotFO2") : std::to_string(v)) << '='
        << level_histogram[v];
  }
  if (exceeded > 0) out << " exceeded=" << exceeded;
  out << '\n';
  out << "properties:\n";
  for (const auto& p : properties) {
    const char* status = !p.gating ? (p.failed ? "diff" : "same")
                         : p.failed ? "FAIL"
                                    : "pass";
    out << "  [" << status << "] " << p.name << ": checked " << p.checked
        << ", failed " << p.failed;
    if (p.skipped > 0) out << ", skipped " << p.skipped;
    if (!p.gating) out << " (hypothesis)";
    out << '\n';
    if (p.failed > 0) out << "    first: " << p.first_failure << '\n';
  }
  out << "straubing (experimental, interpreted recursion):\n";
  for (const auto& s : straubing) {
    out << "  m=" << s.level << ": agree " << s.agree << '/' << s.compared << " ("
        << pct(s.agree, s.compared) << ")";
    if (s.skipped > 0) out << ", skipped " << s.skipped;
    out << '\n';
  }
  out << "result: " << (ok() ? "pass" : "FAIL") << '\n';
  return out.str();
}

}  // namespace fo2

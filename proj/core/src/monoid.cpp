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

#include "fo2/monoid.hpp"

#include <sstream>
#include <unordered_map>

namespace fo2 {

FiniteMonoid::FiniteMonoid(std::size_t size, std::vector<Element> table,
                           Element identity, std::optional<Generators> gens)
    : size_(size),
      table_(std::move(table)),
      identity_(identity),
      gens_(std::move(gens)) {
  check_shape();
  // Power sequences only settle on an idempotent in an associative table.
  for (Element x = 0; x < size_; ++x) {
    for (Element y = 0; y < size_; ++y) {
      Element xy = mul(x, y);
      for (Element z = 0; z < size_; ++z) {
        if (mul(xy, z) != mul(x, mul(y, z))) {
          throw InvalidInput("table is not associative: (" + std::to_string(x) +
                             "*" + std::to_string(y) + ")*" + std::to_string(z));
        }
      }
    }
  }
  check_generated();
  compute_omega();
}

FiniteMonoid FiniteMonoid::trusted(std::size_t size, std::vector<Element> table,
                                   Element identity,
                                   std::optional<Generators> gens) {
  return FiniteMonoid(Trusted{}, size, std::move(table), identity,
                      std::move(gens));
}

FiniteMonoid::FiniteMonoid(Trusted, std::size_t size, std::vector<Element> table,
                           Element identity, std::optional<Generators> gens)
    : size_(size),
      table_(std::move(table)),
      identity_(identity),
      gens_(std::move(gens)) {
  check_shape();
  check_generated();
  compute_omega();
}

void FiniteMonoid::check_shape() const {
  if (size_ == 0) throw InvalidInput("a monoid has at least one element");
  if (table_.size() != size_ * size_) {
    throw InvalidInput("table must have size*size entries");
  }
  for (Element v : table_) {
    if (v >= size_) throw InvalidInput("table entry out of range");
  }
  if (identity_ >= size_) throw InvalidInput("identity out of range");
  for (Element x = 0; x < size_; ++x) {
    if (mul(identity_, x) != x || mul(x, identity_) != x) {
      throw InvalidInput("bad identity: " + std::to_string(identity_) +
                         " is not neutral for " + std::to_string(x));
    }
  }
  if (gens_) {
    if (gens_->images.size() != gens_->alphabet.size()) {
      throw InvalidInput("generator map does not cover the alphabet");
    }
    for (Element g : gens_->images) {
      if (g >= size_) throw InvalidInput("generator image out of range");
    }
  }
}

void FiniteMonoid::check_generated() const {
  if (!gens_) return;
  std::vector<bool> seen(size_, false);
  std::vector<Element> queue{identity_};
  seen[identity_] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Element g : gens_->images) {
      Element y = mul(queue[i], g);
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  }
  if (queue.size() != size_) {
    throw InvalidInput("generators do not generate the monoid");
  }
}

void FiniteMonoid::compute_omega() {
  omega_.resize(size_);
  for (Element x = 0; x < size_; ++x) {
    Element p = x;
    while (mul(p, p) != p) p = mul(p, x);
    omega_[x] = p;
  }
}

namespace {

struct TransformationHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

FiniteMonoid transition_monoid(const Dfa& dfa, std::size_t cap) {
  const std::size_t states = dfa.num_states();
  const std::size_t k = dfa.alphabet().size();
  using Transformation = std::vector<std::uint32_t>;

  std::vector<Transformation> elems;
  std::unordered_map<Transformation, Element, TransformationHash> index;
  std::vector<Element> parent;
  std::vector<std::size_t> last_letter;
  std::vector<Element> right;  // right Cayley graph, right[x * k + a] = x.a

  Transformation id(states);
  for (std::size_t s = 0; s < states; ++s) id[s] = static_cast<std::uint32_t>(s);
  index.emplace(id, 0);
  elems.push_back(std::move(id));
  parent.push_back(0);
  last_letter.push_back(0);

  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t a = 0; a < k; ++a) {
      Transformation t(states);
      for (std::size_t s = 0; s < states; ++s) {
        t[s] = static_cast<std::uint32_t>(dfa.next(elems[i][s], a));
      }
      auto [it, inserted] =
          index.emplace(std::move(t), static_cast<Element>(elems.size()));
      if (inserted) {
        if (elems.size() >= cap) {
          throw BudgetExceeded("transition monoid exceeds " +
                               std::to_string(cap) + " elements");
        }
        elems.push_back(it->first);
        parent.push_back(static_cast<Element>(i));
        last_letter.push_back(a);
      }
      right.push_back(it->second);
    }
  }

  const std::size_t n = elems.size();
  std::vector<Element> table(n * n);
  for (Element x = 0; x < n; ++x) {
    table[static_cast<std::size_t>(x) * n] = x;
    for (Element y = 1; y < n; ++y) {
      Element prefix = table[static_cast<std::size_t>(x) * n + parent[y]];
      table[static_cast<std::size_t>(x) * n + y] = right[prefix * k + last_letter[y]];
    }
  }

  Generators gens{dfa.alphabet(), {}};
  for (std::size_t a = 0; a < k; ++a) gens.images.push_back(right[a]);
  return FiniteMonoid::trusted(n, std::move(table), 0, std::move(gens));
}

Element eval_word(const FiniteMonoid& m, std::string_view word) {
  if (!m.has_gens()) {
    throw InvalidInput("monoid has no generator map; cannot evaluate words");
  }
  const auto& g = *m.gens();
  Element x = m.identity();
  for (char c : word) {
    int a = g.alphabet.index_of(c);
    if (a < 0) {
      throw InvalidInput(std::string("letter '") + c +
                         "' is not a generator of the monoid");
    }
    x = m.mul(x, g.images[static_cast<std::size_t>(a)]);
  }
  return x;
}

std::vector<Element> idempotents(const FiniteMonoid& m) {
  std::vector<Element> out;
  for (Element x = 0; x < m.size(); ++x) {
    if (m.is_idempotent(x)) out.push_back(x);
  }
  return out;
}

Element omega_power(const FiniteMonoid& m, Element x) { return m.omega(x); }

bool is_aperiodic(const FiniteMonoid& m) {
  for (Element x = 0; x < m.size(); ++x) {
    if (m.mul(x, m.omega(x)) != m.omega(x)) return false;
  }
  return true;
}

bool is_in_da(const FiniteMonoid& m, std::pair<Element, Element>* witness) {
  for (Element x = 0; x < m.size(); ++x) {
    for (Element y = 0; y < m.size(); ++y) {
      Element e = m.omega(m.mul(x, y));
      if (m.mul(e, x, e) != e) {
        if (witness) *witness = {x, y};
        return false;
      }
    }
  }
  return true;
}

bool is_commutative(const FiniteMonoid& m) {
  for (Element x = 0; x < m.size(); ++x) {
    for (Element y = x + 1; y < m.size(); ++y) {
      if (m.mul(x, y) != m.mul(y, x)) return false;
    }
  }
  return true;
}

bool is_in_j1(const FiniteMonoid& m) {
  for (Element x = 0; x < m.size(); ++x) {
    if (!m.is_idempotent(x)) return false;
  }
  return is_commutative(m);
}

FiniteMonoid reverse(const FiniteMonoid& m) {
  const std::size_t n = m.size();
  std::vector<Element> table(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) table[x * n + y] = m.mul(y, x);
  }
  return FiniteMonoid::trusted(n, std::move(table), m.identity(), m.gens());
}

std::vector<std::string> element_labels(const FiniteMonoid& m) {
  std::vector<std::string> labels(m.size());
  if (!m.has_gens()) {
    for (Element x = 0; x < m.size(); ++x) labels[x] = std::to_string(x);
    return labels;
  }
  const auto& g = *m.gens();
  std::vector<bool> seen(m.size(), false);
  std::vector<Element> queue{m.identity()};
  seen[m.identity()] = true;
  labels[m.identity()] = "1";
  std::vector<std::string> word(m.size());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (std::size_t a = 0; a < g.images.size(); ++a) {
      Element y = m.mul(queue[i], g.images[a]);
      if (!seen[y]) {
        seen[y] = true;
        word[y] = word[queue[i]] + g.alphabet[a];
        labels[y] = word[y];
        queue.push_back(y);
      }
    }
  }
  return labels;
}

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::size_t parse_index(const std::string& tok, std::size_t line_no) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size() || tok.empty() || tok[0] == '-' || tok[0] == '+') {
    throw ParseError("expected a non-negative integer, got '" + tok + "'",
                     line_no);
  }
  return static_cast<std::size_t>(v);
}

std::size_t keyed_value(const std::string& line, const std::string& key,
                        std::size_t line_no) {
  auto colon = line.find(':');
  auto head = split_ws(line.substr(0, colon == std::string::npos ? 0 : colon));
  if (colon == std::string::npos || head.size() != 1 || head[0] != key) {
    throw ParseError("expected '" + key + ": N'", line_no);
  }
  auto rest = split_ws(line.substr(colon + 1));
  if (rest.size() != 1) throw ParseError("expected '" + key + ": N'", line_no);
  return parse_index(rest[0], line_no);
}

}  // namespace

FiniteMonoid parse_monoid_file(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string>> lines;
  {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t no = 0;
    while (std::getline(in, line)) {
      ++no;
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      lines.emplace_back(no, line);
    }
  }
  if (lines.size() < 3) throw ParseError("truncated monoid file", lines.empty() ? 0 : lines.back().first);

  std::size_t size = keyed_value(lines[0].second, "size", lines[0].first);
  if (size == 0) throw ParseError("size must be positive", lines[0].first);
  std::size_t identity = keyed_value(lines[1].second, "identity", lines[1].first);

  std::string gen_symbols;
  std::vector<Element> gen_images;
  std::size_t i = 2;
  for (; i < lines.size(); ++i) {
    auto toks = split_ws(lines[i].second);
    if (toks.size() == 1 && toks[0] == "table") break;
    if (toks.size() != 3 || toks[0] != "gen" || toks[1].size() != 1) {
      throw ParseError("expected 'gen SYMBOL INDEX' or 'table'", lines[i].first);
    }
    if (gen_symbols.find(toks[1][0]) != std::string::npos) {
      throw ParseError("repeated generator '" + toks[1] + "'", lines[i].first);
    }
    gen_symbols += toks[1][0];
    gen_images.push_back(static_cast<Element>(parse_index(toks[2], lines[i].first)));
  }
  if (i == lines.size()) throw ParseError("missing 'table' line", lines.back().first);
  ++i;
  if (lines.size() - i != size) {
    throw ParseError("expected " + std::to_string(size) + " table rows, got " +
                         std::to_string(lines.size() - i),
                     lines.back().first);
  }
  std::vector<Element> table;
  table.reserve(size * size);
  for (; i < lines.size(); ++i) {
    auto toks = split_ws(lines[i].second);
    if (toks.size() != size) {
      throw ParseError("row has " + std::to_string(toks.size()) +
                           " entries, expected " + std::to_string(size),
                       lines[i].first);
    }
    for (const auto& t : toks) {
      table.push_back(static_cast<Element>(parse_index(t, lines[i].first)));
    }
  }
  std::optional<Generators> gens;
  if (!gen_symbols.empty()) gens = Generators{Alphabet(gen_symbols), gen_images};
  return FiniteMonoid(size, std::move(table), static_cast<Element>(identity),
                      std::move(gens));
}

std::string format_monoid_file(const FiniteMonoid& m) {
  std::ostringstream out;
  out << "size: " << m.size() << "\nidentity: " << m.identity() << "\n";
  if (m.has_gens()) {
    const auto& g = *m.gens();
    for (std::size_t a = 0; a < g.images.size(); ++a) {
      out << "gen " << g.alphabet[a] << ' ' << g.images[a] << "\n";
    }
  }
  out << "table\n";
  for (Element x = 0; x < m.size(); ++x) {
    for (Element y = 0; y < m.size(); ++y) {
      out << (y ? " " : "") << m.mul(x, y);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace fo2

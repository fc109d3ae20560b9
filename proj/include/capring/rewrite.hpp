// Word rewriting in the matrix-family group rings: reduce words over
// {z, x_i, y_i} (Heisenberg) or {x_ij} (unitriangular) to combinations of
// reduced monomials, with degree bookkeeping.
//
// A letter is identified with the canonical monomial coordinate it increments,
// so the canonical letter order is plain coordinate order. The strategy is to
// locate the leftmost out-of-order adjacent pair and apply either the
// commutation swap or the five-term relation, recursing on each summand. Every
// rewrite either lowers the inversion count at fixed letter multiset or raises
// the degree, which is bounded once exponents truncate at p; the oracle
// equivalence suite pins the result to dense algebra products.
#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "capring/algebra.hpp"
#include "capring/filtered.hpp"
#include "capring/group.hpp"

namespace capring {

struct Word {
  const FiniteGroup* group = nullptr;
  std::vector<std::uint32_t> letters;  // canonical coordinates
};

inline long long letter_weight(const FiniteGroup& g, std::uint32_t coord) {
  if (g.family() == GroupFamily::heisenberg) return coord == 0 ? 2 : 1;
  if (g.family() == GroupFamily::unitriangular) {
    auto [i, j] = g.coordinate_pair(coord);
    return (long long)j - i;
  }
  throw std::invalid_argument("words live over the matrix families");
}

inline long long word_degree(const Word& w) {
  long long d = 0;
  for (auto c : w.letters) d += letter_weight(*w.group, c);
  return d;
}

// z^p = y_i^p = x_i^p = 0 caps the reduced degree at 2n(p-1); the
// unitriangular cap is (p-1)(n^3-n)/6.
inline long long max_reduced_degree(const FiniteGroup& g) {
  return detail::max_int_degree(g);
}

inline std::string letter_name(const FiniteGroup& g, std::uint32_t coord) {
  const std::uint32_t n = g.spec().n;
  if (g.family() == GroupFamily::heisenberg) {
    if (coord == 0) return "z";
    if (coord < n) return "y" + std::to_string(coord);
    return "x" + std::to_string(coord - (n - 1));
  }
  auto [i, j] = g.coordinate_pair(coord);
  return "x" + std::to_string(i) + std::to_string(j);
}

namespace detail {

inline bool letters_commute(const FiniteGroup& g, std::uint32_t a, std::uint32_t b) {
  if (g.family() == GroupFamily::heisenberg) {
    const std::uint32_t n = g.spec().n;
    auto kind = [n](std::uint32_t c) { return c == 0 ? 0 : (c < n ? 1 : 2); };
    auto index = [n](std::uint32_t c) { return c < n ? c : c - (n - 1); };
    if (kind(a) == 0 || kind(b) == 0 || kind(a) == kind(b)) return true;
    return index(a) != index(b);
  }
  auto [i1, j1] = g.coordinate_pair(a);
  auto [i2, j2] = g.coordinate_pair(b);
  return j1 != i2 && i1 != j2;
}

// Five-term rewrite of the out-of-order noncommuting pair (a, b):
// Heisenberg  x_i y_i  ->  y_i x_i + z y_i x_i + z + z x_i + z y_i
// UT          x_ij x_jl -> x_jl x_ij + x_il + x_ij x_il + x_jl x_il + x_jl x_ij x_il
inline std::vector<std::vector<std::uint32_t>> five_term(const FiniteGroup& g, std::uint32_t a,
                                                         std::uint32_t b) {
  if (g.family() == GroupFamily::heisenberg) {
    const std::uint32_t z = 0;
    return {{b, a}, {z, b, a}, {z}, {z, a}, {z, b}};
  }
  auto [i, j1] = g.coordinate_pair(a);
  auto [j2, l] = g.coordinate_pair(b);
  if (j1 != j2) throw std::logic_error("five-term pattern mismatch");
  std::uint32_t il = 0;
  bool found = false;
  for (std::uint32_t c = 0; c < g.radix().size() && !found; ++c)
    if (g.coordinate_pair(c) == std::make_pair(i, l)) {
      il = c;
      found = true;
    }
  if (!found) throw std::logic_error("missing chain coordinate");
  return {{b, a}, {il}, {a, il}, {b, il}, {b, a, il}};
}

}  // namespace detail

// Linear combination of reduced monomials, keyed by monomial index.
using ReducedCombination = std::map<std::uint32_t, std::uint32_t>;

inline ReducedCombination reduce(const Word& w) {
  const FiniteGroup& g = *w.group;
  if (g.family() == GroupFamily::abelian)
    throw std::invalid_argument("words live over the matrix families");
  const std::uint32_t p = g.prime();
  const long long base_degree = word_degree(w);

  ReducedCombination out;
  std::vector<std::pair<std::vector<std::uint32_t>, std::uint32_t>> work;
  work.push_back({w.letters, 1});
  unsigned long long steps = 0;
  while (!work.empty()) {
    if (++steps > 200'000'000ULL) throw std::runtime_error("rewrite step guard tripped");
    auto [letters, coeff] = std::move(work.back());
    work.pop_back();

    // a run of p identical letters is a nilpotent factor
    bool dead = false;
    std::uint32_t run = 1;
    for (std::size_t i = 1; i < letters.size() && !dead; ++i) {
      run = letters[i] == letters[i - 1] ? run + 1 : 1;
      dead = run >= p;
    }
    if (dead) continue;

    std::size_t bad = letters.size();
    for (std::size_t i = 0; i + 1 < letters.size(); ++i)
      if (letters[i] > letters[i + 1]) {
        bad = i;
        break;
      }

    if (bad == letters.size()) {  // sorted: collapse to a monomial
      std::vector<std::uint32_t> exps(g.radix().size(), 0);
      bool zero = false;
      for (auto c : letters)
        if (++exps[c] >= g.radix()[c]) {
          zero = true;
          break;
        }
      if (zero) continue;
      Word mono{&g, letters};
      if (word_degree(mono) < base_degree)
        throw std::logic_error("degree dropped during rewriting");
      std::uint32_t idx = g.encode(exps);
      auto it = out.emplace(idx, 0).first;
      it->second = add_mod(it->second, coeff % p, p);
      if (it->second == 0) out.erase(it);
      continue;
    }

    if (detail::letters_commute(g, letters[bad], letters[bad + 1])) {
      std::swap(letters[bad], letters[bad + 1]);
      work.push_back({std::move(letters), coeff});
      continue;
    }

    auto terms = detail::five_term(g, letters[bad], letters[bad + 1]);
    for (auto& t : terms) {
      std::vector<std::uint32_t> next;
      next.reserve(letters.size() - 2 + t.size());
      next.insert(next.end(), letters.begin(), letters.begin() + bad);
      next.insert(next.end(), t.begin(), t.end());
      next.insert(next.end(), letters.begin() + bad + 2, letters.end());
      Word check{&g, next};
      if (word_degree(check) < base_degree)
        throw std::logic_error("degree dropped during rewriting");
      work.push_back({std::move(next), coeff});
    }
  }
  return out;
}

// Dense oracle path: multiply the letters out as algebra elements.
inline AlgebraElement evaluate(const Word& w) {
  const FiniteGroup& g = *w.group;
  AlgebraElement r = AlgebraElement::unit(g, g.prime());
  for (auto c : w.letters)
    r = r * AlgebraElement::generator_minus_one(g, c, g.prime());
  return r;
}

inline AlgebraElement expand(const FiniteGroup& g, const ReducedCombination& comb) {
  AlgebraElement r(g, g.prime());
  for (const auto& [idx, coeff] : comb) r += monomial_element(g, idx, g.prime()) * coeff;
  return r;
}

// Product of two combinations via rewriting, merging term by term.
inline ReducedCombination reduce_product(const FiniteGroup& g, const ReducedCombination& a,
                                         const ReducedCombination& b) {
  const std::uint32_t p = g.prime();
  auto letters_of = [&](std::uint32_t idx) {
    std::vector<std::uint32_t> ls;
    auto e = g.decode(idx);
    for (std::uint32_t c = 0; c < e.size(); ++c)
      for (std::uint32_t r = 0; r < e[c]; ++r) ls.push_back(c);
    return ls;
  };
  ReducedCombination out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Word w{&g, letters_of(ma)};
      auto tail = letters_of(mb);
      w.letters.insert(w.letters.end(), tail.begin(), tail.end());
      std::uint32_t scale = mul_mod(ca, cb, p);
      for (const auto& [m, c] : reduce(w)) {
        auto it = out.emplace(m, 0).first;
        it->second = add_mod(it->second, mul_mod(c, scale, p), p);
        if (it->second == 0) out.erase(it);
      }
    }
  return out;
}

struct NilpotencyReport {
  bool verified = true;
  Word counterexample;  // empty unless verified is false
  unsigned trials = 0;
};

// Random words of degree strictly above the maximal reduced degree must
// evaluate to zero; a counterexample would falsify the degree key lemma.
inline NilpotencyReport nilpotency_check(const FiniteGroup& g, unsigned trials,
                                         std::uint64_t seed) {
  const long long cap = max_reduced_degree(g);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, (std::uint32_t)g.radix().size() - 1);
  NilpotencyReport rep;
  for (unsigned t = 0; t < trials; ++t) {
    Word w{&g, {}};
    long long deg = 0;
    while (deg <= cap) {
      std::uint32_t c = pick(rng);
      w.letters.push_back(c);
      deg += letter_weight(g, c);
    }
    ++rep.trials;
    if (!evaluate(w).is_zero()) {
      rep.verified = false;
      rep.counterexample = w;
      return rep;
    }
  }
  return rep;
}

// CLI word syntax: whitespace-separated letters, "z x1 y1" or "x12 x24".
inline Word parse_word(const FiniteGroup& g, const std::string& text) {
  Word w{&g, {}};
  std::map<std::string, std::uint32_t> names;
  for (std::uint32_t c = 0; c < g.radix().size(); ++c) names[letter_name(g, c)] = c;
  std::string tok;
  std::stringstream ss(text);
  while (ss >> tok) {
    auto it = names.find(tok);
    if (it == names.end())
      throw std::invalid_argument("unknown letter '" + tok + "' for group " +
                                  g.spec().to_string());
    w.letters.push_back(it->second);
  }
  return w;
}

inline std::string word_string(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i)
    out += (i ? " " : "") + letter_name(*w.group, w.letters[i]);
  return out;
}

}  // namespace capring

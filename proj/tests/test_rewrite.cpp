#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "capring/rewrite.hpp"

using namespace capring;

namespace {

Word random_word(std::mt19937_64& rng, const FiniteGroup& g, std::size_t len) {
  std::uniform_int_distribution<std::uint32_t> pick(0, (std::uint32_t)g.radix().size() - 1);
  Word w{&g, {}};
  for (std::size_t i = 0; i < len; ++i) w.letters.push_back(pick(rng));
  return w;
}

long long monomial_degree(const FiniteGroup& g, std::uint32_t idx) {
  auto e = g.decode(idx);
  long long d = 0;
  for (std::uint32_t c = 0; c < e.size(); ++c) d += letter_weight(g, c) * e[c];
  return d;
}

}  // namespace

TEST_CASE("word degrees") {
  auto h = FiniteGroup::build("heisenberg:p=3,n=2");
  CHECK(word_degree(parse_word(h, "z x1 y1")) == 4);  // 2 + 1 + 1
  CHECK(word_degree(parse_word(h, "")) == 0);
  auto u = FiniteGroup::build("ut:n=4,p=2");
  CHECK(word_degree(parse_word(u, "x14 x23")) == 4);  // 3 + 1
  CHECK(max_reduced_degree(h) == 8);                  // 2n(p-1)
  CHECK(max_reduced_degree(u) == 10);                 // (p-1)(n^3-n)/6
}

TEST_CASE("five-term relation: x1 y1 over H_1(F_3)") {
  auto h = FiniteGroup::build("heisenberg:p=3,n=2");
  auto comb = reduce(parse_word(h, "x1 y1"));
  // y1 x1, z y1 x1, z, z x1, z y1 with coordinates (gamma, beta, alpha)
  auto idx = [&](std::uint32_t gam, std::uint32_t bet, std::uint32_t alp) {
    std::vector<std::uint32_t> e{gam, bet, alp};
    return h.encode(e);
  };
  ReducedCombination expect{
      {idx(0, 1, 1), 1}, {idx(1, 1, 1), 1}, {idx(1, 0, 0), 1}, {idx(1, 0, 1), 1},
      {idx(1, 1, 0), 1}};
  CHECK(comb == expect);
}

TEST_CASE("nilpotent powers vanish in the rewriting") {
  auto h = FiniteGroup::build("heisenberg:p=3,n=2");
  CHECK(reduce(parse_word(h, "x1 x1 x1")).empty());
  CHECK(reduce(parse_word(h, "z z z")).empty());
}

TEST_CASE("chain relation: x12 x24 over UT(4, F_2)") {
  auto u = FiniteGroup::build("ut:n=4,p=2");
  auto comb = reduce(parse_word(u, "x12 x24"));
  auto idx = [&](std::initializer_list<const char*> names) {
    std::vector<std::uint32_t> e(u.radix().size(), 0);
    for (auto nm : names) {
      auto w = parse_word(u, nm);
      e[w.letters[0]] += 1;
    }
    return u.encode(e);
  };
  ReducedCombination expect{{idx({"x24", "x12"}), 1},
                            {idx({"x14"}), 1},
                            {idx({"x12", "x14"}), 1},
                            {idx({"x24", "x14"}), 1},
                            {idx({"x24", "x12", "x14"}), 1}};
  CHECK(comb == expect);
}

TEST_CASE("oracle equivalence: exhaustive words of length <= 4 over H_1(F_3)") {
  auto h = FiniteGroup::build("heisenberg:p=3,n=2");
  const std::uint32_t letters = 3;
  for (std::size_t len = 0; len <= 4; ++len) {
    std::vector<std::uint32_t> pick(len, 0);
    while (true) {
      Word w{&h, pick};
      CHECK(expand(h, reduce(w)) == evaluate(w));
      std::size_t i = 0;
      while (i < len) {
        if (++pick[i] < letters) break;
        pick[i] = 0;
        ++i;
      }
      if (i == len) break;
    }
  }
}

TEST_CASE("oracle equivalence: seeded random words") {
  std::mt19937_64 rng(1234);
  auto h = FiniteGroup::build("heisenberg:p=3,n=2");
  for (int t = 0; t < 500; ++t) {
    auto w = random_word(rng, h, 5 + t % 4);
    CHECK(expand(h, reduce(w)) == evaluate(w));
  }
  for (const char* spec : {"ut:n=3,p=3", "ut:n=4,p=2"}) {
    auto u = FiniteGroup::build(spec);
    for (int t = 0; t < 200; ++t) {
      auto w = random_word(rng, u, 2 + t % 5);
      CHECK(expand(h /*unused*/, ReducedCombination{}).is_zero());
      CHECK(expand(u, reduce(w)) == evaluate(w));
    }
  }
}

TEST_CASE("degree monotonicity of reduction") {
  std::mt19937_64 rng(77);
  for (const char* spec : {"heisenberg:p=3,n=2", "ut:n=3,p=3", "ut:n=4,p=2"}) {
    auto g = FiniteGroup::build(spec);
    for (int t = 0; t < 100; ++t) {
      auto w = random_word(rng, g, 1 + t % 6);
      for (const auto& [m, c] : reduce(w)) CHECK(monomial_degree(g, m) >= word_degree(w));
    }
  }
}

TEST_CASE("reduction is split-invariant") {
  std::mt19937_64 rng(99);
  for (const char* spec : {"heisenberg:p=3,n=2", "ut:n=4,p=2"}) {
    auto g = FiniteGroup::build(spec);
    for (int t = 0; t < 60; ++t) {
      auto w = random_word(rng, g, 2 + t % 5);
      std::uniform_int_distribution<std::size_t> cut(0, w.letters.size());
      std::size_t c = cut(rng);
      Word head{&g, {w.letters.begin(), w.letters.begin() + c}};
      Word tail{&g, {w.letters.begin() + c, w.letters.end()}};
      CHECK(reduce(w) == reduce_product(g, reduce(head), reduce(tail)));
    }
  }
}

TEST_CASE("nilpotency key lemma: high-degree words evaluate to zero") {
  auto h = FiniteGroup::build("heisenberg:p=3,n=2");
  auto rep = nilpotency_check(h, 200, 7);
  CHECK(rep.verified);
  CHECK(rep.trials == 200);

  auto u42 = FiniteGroup::build("ut:n=4,p=2");
  CHECK(nilpotency_check(u42, 200, 8).verified);
  auto u33 = FiniteGroup::build("ut:n=3,p=3");
  CHECK(nilpotency_check(u33, 200, 9).verified);

  CHECK(evaluate(parse_word(h, "z z z")).is_zero());  // z^p = 0 outright
}

TEST_CASE("word parsing") {
  auto h = FiniteGroup::build("heisenberg:p=3,n=2");
  auto w = parse_word(h, "z x1 y1");
  CHECK(word_string(w) == "z x1 y1");
  CHECK_THROWS_AS(parse_word(h, "x2"), std::invalid_argument);  // n = 2 has only x1
  CHECK_THROWS_AS(parse_word(h, "q"), std::invalid_argument);

  auto u = FiniteGroup::build("ut:n=4,p=2");
  CHECK(word_string(parse_word(u, "x12 x24")) == "x12 x24");
  CHECK_THROWS_AS(parse_word(u, "x21"), std::invalid_argument);

  auto a = FiniteGroup::build("abelian:3");
  CHECK_THROWS_AS(reduce(Word{&a, {}}), std::invalid_argument);
}

// Brute-force ground truth and bound certification: equation-free sets,
// maximal search, k-colored product-free sets, and the constructive
// Cauchy-Davenport argument in F_p[C_p].
#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <thread>
#include <vector>

#include "capring/algebra.hpp"
#include "capring/filtered.hpp"
#include "capring/group.hpp"
#include "capring/matrix.hpp"

namespace capring {

struct EquationSpec {
  std::vector<long long> exps;  // n_1..n_k

  std::size_t k() const { return exps.size(); }

  void validate() const {
    if (exps.size() < 2) throw std::invalid_argument("equation needs k >= 2 exponents");
    long long sum = 0;
    for (auto n : exps) {
      if (n == 0) throw std::invalid_argument("equation exponents must be nonzero");
      sum += n;
    }
    if (sum != 0) throw std::invalid_argument("equation exponents must sum to zero");
  }

  static EquationSpec three_ap() { return {{1, 1, -2}}; }
};

struct ZeroProductError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CoprimalityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

// per-position power maps a -> a^{n_i}
inline std::vector<std::vector<std::uint32_t>> power_maps(const FiniteGroup& g,
                                                          const EquationSpec& eq) {
  std::vector<std::vector<std::uint32_t>> maps(eq.k());
  for (std::size_t i = 0; i < eq.k(); ++i) {
    maps[i].resize(g.order());
    for (std::uint32_t a = 0; a < g.order(); ++a) maps[i][a] = g.power(a, eq.exps[i]);
  }
  return maps;
}

}  // namespace detail

struct EquationWitness {
  bool free = true;
  std::vector<std::uint32_t> tuple;  // first violating (g_1..g_k), lexicographic
};

// Exhaustive scan of |A|^k tuples in lexicographic order over the sorted set.
inline EquationWitness check_equation_free(const FiniteGroup& g, const EquationSpec& eq,
                                           std::span<const std::uint32_t> set) {
  eq.validate();
  std::vector<std::uint32_t> a(set.begin(), set.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  for (auto e : a)
    if (e >= g.order()) throw std::invalid_argument("set element out of range");
  if (a.empty()) return {true, {}};
  auto maps = detail::power_maps(g, eq);
  const std::size_t k = eq.k();
  std::vector<std::uint32_t> tuple(k);
  EquationWitness out;
  auto rec = [&](auto&& self, std::size_t level, std::uint32_t prod, std::size_t first,
                 bool all_equal) -> bool {
    if (level == k) {
      if (all_equal || prod != 0) return true;
      out.free = false;
      out.tuple = tuple;
      return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      tuple[level] = a[i];
      std::size_t f = level == 0 ? i : first;
      if (!self(self, level + 1, g.mul(prod, maps[level][a[i]]), f,
                all_equal && (level == 0 || i == f)))
        return false;
    }
    return true;
  };
  rec(rec, 0, 0, 0, true);
  return out;
}

struct SearchBudget {
  std::uint32_t exact_cap = 30;          // exact search allowed up to this order
  bool elementary_3ap_to_81 = true;      // symmetry-pruned 3-AP search in C_p^m
  unsigned long long node_limit = 50'000'000;
  unsigned workers = 1;
};

struct SearchResult {
  std::uint32_t size = 0;
  std::vector<std::uint32_t> witness;
  bool exact = false;
  unsigned long long nodes = 0;
};

// Branch and bound over elements in index order: prune when the current size
// plus the remaining candidates cannot beat the incumbent. For abelian groups
// translation symmetry pins the lexicographically-least element to the
// identity.
inline SearchResult max_equation_free(const FiniteGroup& g, const EquationSpec& eq,
                                      const SearchBudget& budget = {}) {
  eq.validate();
  auto maps = detail::power_maps(g, eq);
  const std::size_t k = eq.k();

  bool elementary = g.family() == GroupFamily::abelian;
  for (auto N : g.radix()) elementary = elementary && N == g.prime();
  bool is_3ap = eq.exps == std::vector<long long>{1, 1, -2};
  bool exact_allowed = g.order() <= budget.exact_cap ||
                       (budget.elementary_3ap_to_81 && elementary && is_3ap && g.order() <= 81);
  bool translate = g.family() == GroupFamily::abelian;

  // adding e to a feasible set keeps it feasible iff no violating tuple uses e
  auto compatible = [&](const std::vector<std::uint32_t>& s, std::uint32_t e) {
    std::vector<std::uint32_t> ext(s);
    ext.push_back(e);
    std::vector<std::size_t> pick(k, 0);
    auto rec = [&](auto&& self, std::size_t level, std::uint32_t prod, bool used_e,
                   bool all_equal) -> bool {
      if (level == k) return all_equal || !used_e || prod != 0;
      for (std::size_t i = 0; i < ext.size(); ++i) {
        pick[level] = i;
        bool eq_here = level == 0 || i == pick[0];
        if (!self(self, level + 1, g.mul(prod, maps[level][ext[i]]), used_e || ext[i] == e,
                  all_equal && eq_here))
          return false;
      }
      return true;
    };
    return rec(rec, 0, 0, false, true);
  };

  std::atomic<std::uint32_t> best{1};  // a singleton is always free
  std::vector<std::uint32_t> best_witness{0};
  std::mutex witness_mutex;
  std::atomic<unsigned long long> nodes{0};
  std::atomic<bool> budget_hit{false};

  auto bnb = [&](auto&& self, std::vector<std::uint32_t>& s,
                 const std::vector<std::uint32_t>& cand) -> void {
    if (nodes.fetch_add(1) >= budget.node_limit) {
      budget_hit = true;
      return;
    }
    if ((std::uint32_t)s.size() > best.load()) {
      std::uint32_t cur = best.load();
      while (cur < s.size() && !best.compare_exchange_weak(cur, (std::uint32_t)s.size())) {
      }
      std::lock_guard<std::mutex> lock(witness_mutex);
      if (s.size() >= best.load()) best_witness = s;
    }
    for (std::size_t i = 0; i < cand.size(); ++i) {
      if (s.size() + (cand.size() - i) <= best.load()) break;
      if (budget_hit) return;
      std::uint32_t e = cand[i];
      if (!compatible(s, e)) continue;
      s.push_back(e);
      std::vector<std::uint32_t> next;
      for (std::size_t j = i + 1; j < cand.size(); ++j)
        if (compatible(s, cand[j])) next.push_back(cand[j]);
      self(self, s, next);
      s.pop_back();
    }
  };

  std::vector<std::uint32_t> root;
  std::vector<std::uint32_t> cand;
  if (translate) {
    root.push_back(0);  // identity fixed as the least element
    for (std::uint32_t e = 1; e < g.order(); ++e)
      if (compatible(root, e)) cand.push_back(e);
  } else {
    for (std::uint32_t e = 0; e < g.order(); ++e) cand.push_back(e);
  }

  unsigned workers = std::max(1u, budget.workers);
  if (workers == 1 || cand.size() < 2 * workers) {
    bnb(bnb, root, cand);
  } else {
    // distribute first-level branches round-robin; the incumbent is shared
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < cand.size(); i += workers) {
          std::vector<std::uint32_t> s(root);
          if (s.size() + (cand.size() - i) <= best.load()) break;
          if (!compatible(s, cand[i])) continue;
          s.push_back(cand[i]);
          std::vector<std::uint32_t> next;
          for (std::size_t j = i + 1; j < cand.size(); ++j)
            if (compatible(s, cand[j])) next.push_back(cand[j]);
          bnb(bnb, s, next);
        }
      });
    for (auto& t : pool) t.join();
  }

  SearchResult r;
  r.size = best.load();
  r.witness = best_witness;
  r.exact = exact_allowed && !budget_hit;
  r.nodes = nodes.load();
  return r;
}

struct BoundResult {
  std::uint64_t bound = 0;
  std::vector<std::size_t> representatives;  // maximal system I of non-equivalent indices
  ZeroProductReport zero_report;
};

// Theorem bound: indices i, j are equivalent when X_i = X_j and n_i = n_j; the
// bound is the codimension sum over a maximal non-equivalent system, or 2 t_1
// when everything collapses to one class.
inline BoundResult bound_equation_free(const FiniteGroup& g, const EquationSpec& eq,
                                       std::span<const FilteredSubspace> xs,
                                       unsigned workers = 1) {
  eq.validate();
  if (xs.size() != eq.k()) throw std::invalid_argument("need one subspace per factor");
  for (auto n : eq.exps)
    if (std::gcd(std::abs(n), (long long)g.order()) != 1)
      throw CoprimalityError("exponent " + std::to_string(n) + " shares a factor with |G| = " +
                             std::to_string(g.order()));
  // with gcd(n_i, |G|) = 1 the maps a -> a^{n_i} are bijections
  for (std::size_t i = 0; i < eq.k(); ++i) {
    std::vector<bool> seen(g.order(), false);
    for (std::uint32_t a = 0; a < g.order(); ++a) seen[g.power(a, eq.exps[i])] = true;
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
      throw CoprimalityError("power map is not a bijection");
  }
  BoundResult r;
  r.zero_report = verify_zero_product(xs, workers);
  if (!r.zero_report.verified)
    throw ZeroProductError("subspace product is not zero; offending tuple recorded");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    bool equivalent = false;
    for (auto j : r.representatives)
      equivalent = equivalent || (xs[i].same_span(xs[j]) && eq.exps[i] == eq.exps[j]);
    if (!equivalent) r.representatives.push_back(i);
  }
  if (r.representatives.size() >= 2)
    for (auto i : r.representatives) r.bound += xs[i].codim;
  else
    r.bound = 2 * xs[r.representatives[0]].codim;
  return r;
}

struct TricolorCheck {
  bool valid = true;
  std::vector<std::size_t> witness;  // index combo violating the iff condition
};

// tuples[a] = (x_a^{(1)}, ..., x_a^{(k)}); valid iff the product over any index
// combo is the identity exactly when all indices agree.
inline TricolorCheck tricolor_check(const FiniteGroup& g,
                                    const std::vector<std::vector<std::uint32_t>>& tuples) {
  if (tuples.empty()) return {true, {}};
  const std::size_t k = tuples[0].size();
  if (k < 2) throw std::invalid_argument("tuples need k >= 2 colors");
  for (const auto& t : tuples)
    if (t.size() != k) throw std::invalid_argument("ragged tuple list");
  std::vector<std::size_t> pick(k, 0);
  while (true) {
    std::uint32_t prod = 0;
    for (std::size_t i = 0; i < k; ++i) prod = g.mul(prod, tuples[pick[i]][i]);
    bool all_equal = std::all_of(pick.begin(), pick.end(),
                                 [&](std::size_t i) { return i == pick[0]; });
    if ((prod == 0) != all_equal) return {false, pick};
    std::size_t i = 0;
    while (i < k) {
      if (++pick[i] < tuples.size()) break;
      pick[i] = 0;
      ++i;
    }
    if (i == k) break;
  }
  return {true, {}};
}

// Exact maximum k-colored product-free set by branch and bound over the
// candidate tuples with product 1.
inline SearchResult tricolor_search(const FiniteGroup& g, std::size_t k,
                                    std::uint32_t order_cap = 12) {
  if (g.order() > order_cap)
    throw std::invalid_argument("tricolor search is capped at |G| = " +
                                std::to_string(order_cap));
  std::vector<std::vector<std::uint32_t>> cands;
  std::vector<std::size_t> pick(k - 1, 0);
  while (true) {
    std::vector<std::uint32_t> t;
    std::uint32_t prod = 0;
    for (auto i : pick) {
      t.push_back((std::uint32_t)i);
      prod = g.mul(prod, (std::uint32_t)i);
    }
    t.push_back(g.inverse(prod));
    cands.push_back(t);
    std::size_t i = 0;
    while (i < k - 1) {
      if (++pick[i] < g.order()) break;
      pick[i] = 0;
      ++i;
    }
    if (i == k - 1) break;
  }

  std::vector<std::vector<std::uint32_t>> chosen;
  SearchResult r;
  auto feasible = [&](const std::vector<std::uint32_t>& t) {
    chosen.push_back(t);
    auto chk = tricolor_check(g, chosen);
    chosen.pop_back();
    return chk.valid;
  };
  std::vector<std::uint32_t> incumbent_ids, ids;
  auto bnb = [&](auto&& self, std::size_t start) -> void {
    ++r.nodes;
    if (chosen.size() > r.size) {
      r.size = (std::uint32_t)chosen.size();
      incumbent_ids = ids;
    }
    for (std::size_t i = start; i < cands.size(); ++i) {
      if (chosen.size() + (cands.size() - i) <= r.size) break;
      if (!feasible(cands[i])) continue;
      chosen.push_back(cands[i]);
      ids.push_back((std::uint32_t)i);
      self(self, i + 1);
      ids.pop_back();
      chosen.pop_back();
    }
  };
  bnb(bnb, 0);
  r.exact = true;
  r.witness = incumbent_ids;
  return r;
}

inline std::uint64_t tricolor_bound(std::span<const FilteredSubspace> xs, unsigned workers = 1) {
  auto rep = verify_zero_product(xs, workers);
  if (!rep.verified) throw ZeroProductError("subspace product is not zero");
  std::uint64_t sum = 0;
  for (const auto& x : xs) sum += x.codim;
  return sum;
}

struct CauchyDavenportResult {
  std::vector<std::uint32_t> product;  // coefficients of the triple product
  std::vector<std::uint32_t> u, v, w;  // coefficient functions on A, B, C
  bool product_is_tau_power = false;   // product equals tau^{p-1}
  bool all_nonzero = false;
  bool sumset_full = false;  // brute-force A + B + C covers C_p
  bool verdict = false;
};

// Solves the three binomial systems for u, v, w; the product of the weighted
// sums must be exactly tau^{p-1}, whose coefficients are all nonzero, and the
// brute-force sumset cross-checks ABC = G.
inline CauchyDavenportResult cauchy_davenport(std::uint32_t p, std::vector<std::uint32_t> A,
                                              std::vector<std::uint32_t> B,
                                              std::vector<std::uint32_t> C) {
  require_prime(p);
  auto prep = [&](std::vector<std::uint32_t>& s, const char* name) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.empty()) throw std::invalid_argument(std::string(name) + " must be nonempty");
    if (s.back() >= p) throw std::invalid_argument(std::string(name) + " exponent out of range");
  };
  prep(A, "A");
  prep(B, "B");
  prep(C, "C");
  if (A.size() + B.size() + C.size() != p + 2)
    throw std::invalid_argument("|A| + |B| + |C| must equal p + 2");

  // Pascal's triangle mod p
  std::vector<std::vector<std::uint32_t>> binom(p, std::vector<std::uint32_t>(p, 0));
  for (std::uint32_t i = 0; i < p; ++i) {
    binom[i][0] = 1;
    for (std::uint32_t j = 1; j <= i; ++j)
      binom[i][j] = add_mod(binom[i - 1][j - 1], binom[i - 1][j], p);
  }

  GroupSpec spec;
  spec.kind = GroupFamily::abelian;
  spec.orders = {p};
  auto g = FiniteGroup::build(spec);

  auto weighted = [&](const std::vector<std::uint32_t>& s) {
    // coefficients with sum_i u_i binom(alpha_i, j) = [j = |S|-1]
    Matrix m(s.size(), s.size(), p);
    for (std::size_t j = 0; j < s.size(); ++j)
      for (std::size_t i = 0; i < s.size(); ++i) m(j, i) = binom[s[i]][j];
    std::vector<std::uint32_t> rhs(s.size(), 0);
    rhs.back() = 1;
    auto sol = solve(m, rhs);
    if (!sol)
      throw std::runtime_error("binomial system inconsistent; generalized Vandermonde "
                               "matrix claim falsified");
    AlgebraElement e(g, p);
    for (std::size_t i = 0; i < s.size(); ++i) e.set(s[i], sol->at(i));
    return std::make_pair(*sol, e);
  };

  auto [u, ue] = weighted(A);
  auto [v, ve] = weighted(B);
  auto [w, we] = weighted(C);
  auto prod = ue * ve * we;
  auto tau = AlgebraElement::generator_minus_one(g, 0, p);
  auto tau_top = tau.pow(p - 1);

  CauchyDavenportResult r;
  r.u = u;
  r.v = v;
  r.w = w;
  r.product.assign(prod.coeffs().begin(), prod.coeffs().end());
  r.product_is_tau_power = prod == tau_top;
  r.all_nonzero = true;
  for (std::uint32_t i = 0; i < p; ++i) r.all_nonzero = r.all_nonzero && prod[i] != 0;
  std::vector<bool> hit(p, false);
  for (auto a : A)
    for (auto b : B)
      for (auto c : C) hit[(a + b + c) % p] = true;
  r.sumset_full = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  r.verdict = r.product_is_tau_power && r.all_nonzero && r.sumset_full;
  return r;
}

}  // namespace capring

// Degree-filtered zero-product subspaces X_i of F_p[G]: monomial filters with
// exact rational thresholds, codimension counting, and exhaustive verification
// that X_1 ... X_k = 0.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "capring/algebra.hpp"
#include "capring/group.hpp"
#include "capring/rates.hpp"
#include "capring/subspace.hpp"

namespace capring {

using Rat = boost::rational<long long>;
using BigInt = boost::multiprecision::cpp_int;

inline Rat parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rat(std::stoll(text));
  return Rat(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
}

inline std::string rational_string(const Rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

struct DegreeFilter {
  std::vector<Rat> lambda;  // abelian coordinate weights; matrix families ignore them
  Rat eta = Rat(1, 3);      // this subspace's share of the maximal degree
  int k = 3;                // number of factors in the family

  void validate(const FiniteGroup& g) const {
    if (eta <= Rat(0) || eta >= Rat(1))
      throw std::invalid_argument("threshold share must lie strictly between 0 and 1");
    if (g.family() == GroupFamily::abelian) {
      if (lambda.size() != g.radix().size())
        throw std::invalid_argument("weight count must match the number of coordinates");
      for (const auto& l : lambda)
        if (l <= Rat(0)) throw std::invalid_argument("weights must be positive");
    }
  }
};

// Weights realizing the per-coordinate Chernoff optimum with one shared filter:
// 1 for homogeneous orders; log x*_j / log x*_base otherwise, where base is the
// largest order. The log ratio is snapped to a fixed-denominator rational so
// threshold comparisons stay exact.
inline std::vector<Rat> default_weights(std::span<const std::uint32_t> orders, int k) {
  constexpr long long kDen = 720720;
  bool homogeneous = true;
  std::uint32_t largest = 2;
  for (auto N : orders) {
    if (N != orders[0]) homogeneous = false;
    largest = std::max(largest, N);
  }
  std::vector<Rat> lambda(orders.size(), Rat(1));
  if (homogeneous) return lambda;
  double log_base = std::log(rate(largest, k).xstar);
  for (std::size_t j = 0; j < orders.size(); ++j) {
    if (orders[j] == 1 || orders[j] == largest) continue;
    double ratio = std::log(rate(orders[j], k).xstar) / log_base;
    long long num = std::llround(ratio * kDen);
    lambda[j] = Rat(std::max(num, 1LL), kDen);
  }
  return lambda;
}

namespace detail {

// Exact per-coordinate degree contribution minus the share, as a rational:
// abelian uses lambda_j (m_j/(N_j-1) - eta); the matrix families use their
// integer degree against eta times the maximal degree.
inline Rat abelian_margin(const DegreeFilter& f, std::span<const std::uint32_t> radix,
                          std::size_t j, std::uint32_t m) {
  long long Nm1 = (long long)radix[j] - 1;
  if (Nm1 == 0) return Rat(0);
  return f.lambda[j] * (Rat(m, Nm1) - f.eta);
}

inline long long monomial_int_degree(const FiniteGroup& g, std::span<const std::uint32_t> m) {
  long long d = 0;
  switch (g.family()) {
    case GroupFamily::heisenberg:
      for (std::size_t c = 0; c < m.size(); ++c) d += (c == 0 ? 2LL : 1LL) * m[c];
      break;
    case GroupFamily::unitriangular:
      for (std::size_t c = 0; c < m.size(); ++c) {
        auto [i, j] = g.coordinate_pair(c);
        d += (long long)(j - i) * m[c];
      }
      break;
    default:
      throw std::invalid_argument("integer degree applies to the matrix families");
  }
  return d;
}

inline long long max_int_degree(const FiniteGroup& g) {
  const long long pm1 = g.prime() - 1;
  const long long n = g.spec().n;
  if (g.family() == GroupFamily::heisenberg) return 2 * n * pm1;
  return pm1 * (n * n * n - n) / 6;
}

}  // namespace detail

inline bool filter_passes(const FiniteGroup& g, const DegreeFilter& f,
                          std::span<const std::uint32_t> m) {
  if (g.family() == GroupFamily::abelian) {
    Rat margin(0);
    for (std::size_t j = 0; j < m.size(); ++j)
      margin += detail::abelian_margin(f, g.radix(), j, m[j]);
    return margin > Rat(0);
  }
  return Rat(detail::monomial_int_degree(g, m)) > f.eta * detail::max_int_degree(g);
}

struct FilteredSubspace {
  const FiniteGroup* group = nullptr;
  DegreeFilter filter;
  std::vector<std::uint32_t> generating;  // monomial indices passing the filter
  std::uint64_t codim = 0;                // t = |G| - |generating|

  bool same_span(const FilteredSubspace& o) const {
    return group == o.group && generating == o.generating;
  }
};

inline FilteredSubspace build_filtered_subspace(const FiniteGroup& g, DegreeFilter f) {
  if (g.family() == GroupFamily::abelian && f.lambda.empty())
    f.lambda.assign(g.radix().size(), Rat(1));
  f.validate(g);
  FilteredSubspace fs;
  fs.group = &g;
  fs.filter = f;
  for (std::uint32_t idx = 0; idx < g.order(); ++idx) {
    auto m = g.decode(idx);
    if (filter_passes(g, f, m)) fs.generating.push_back(idx);
  }
  fs.codim = g.order() - fs.generating.size();
  return fs;
}

// The k subspaces of one zero-product family; shares must sum to 1.
inline std::vector<FilteredSubspace> build_filtered_family(
    const FiniteGroup& g, int k, std::vector<Rat> etas = {}, std::vector<Rat> lambda = {}) {
  if (k < 1) throw std::invalid_argument("family needs k >= 1");
  if (etas.empty()) etas.assign(k, Rat(1, k));
  if ((int)etas.size() != k) throw std::invalid_argument("need one share per factor");
  if (std::accumulate(etas.begin(), etas.end(), Rat(0)) != Rat(1))
    throw std::invalid_argument("threshold shares must sum to 1");
  if (g.family() == GroupFamily::abelian && lambda.empty())
    lambda = default_weights(g.radix(), k);
  std::vector<FilteredSubspace> out;
  for (int i = 0; i < k; ++i) {
    DegreeFilter f;
    f.lambda = lambda;
    f.eta = etas[i];
    f.k = k;
    out.push_back(build_filtered_subspace(g, f));
  }
  return out;
}

struct ZeroProductReport {
  bool verified = false;
  std::vector<std::uint32_t> witness;  // monomial indices, one per factor
  unsigned long long tuples_checked = 0;
};

// Multiplies every k-tuple of generating monomials and reports the first
// offending tuple, if any. A zero prefix settles all tuples that extend it.
inline ZeroProductReport verify_zero_product(std::span<const FilteredSubspace> xs,
                                             unsigned workers = 1) {
  if (xs.empty()) throw std::invalid_argument("no subspaces given");
  const FiniteGroup& g = *xs[0].group;
  for (const auto& x : xs)
    if (x.group != &g) throw std::invalid_argument("group mismatch");
  const std::uint32_t p = g.prime();
  const std::size_t k = xs.size();

  // monomial vectors per factor, shared between equal subspaces
  std::vector<std::vector<AlgebraElement>> mono(k);
  for (std::size_t i = 0; i < k; ++i) {
    bool reused = false;
    for (std::size_t j = 0; j < i && !reused; ++j)
      if (xs[i].same_span(xs[j])) {
        mono[i] = mono[j];
        reused = true;
      }
    if (reused) continue;
    mono[i].reserve(xs[i].generating.size());
    for (auto idx : xs[i].generating) mono[i].push_back(monomial_element(g, idx, p));
  }

  auto count_from = [&](std::size_t level) {
    unsigned long long c = 1;
    for (std::size_t i = level; i < k; ++i) c *= xs[i].generating.size();
    return c;
  };

  auto run_range = [&](std::size_t first_lo, std::size_t first_hi) {
    ZeroProductReport rep;
    rep.verified = true;
    std::vector<std::size_t> pick(k, 0);
    auto rec = [&](auto&& self, std::size_t level, const AlgebraElement& prefix) -> bool {
      if (prefix.is_zero()) {
        rep.tuples_checked += count_from(level);
        return true;
      }
      if (level == k) {
        ++rep.tuples_checked;
        for (std::size_t i = 0; i < k; ++i) rep.witness.push_back(xs[i].generating[pick[i]]);
        rep.verified = false;
        return false;
      }
      for (std::size_t i = 0; i < mono[level].size(); ++i) {
        pick[level] = i;
        if (!self(self, level + 1, prefix * mono[level][i])) return false;
      }
      return true;
    };
    for (std::size_t i0 = first_lo; i0 < first_hi; ++i0) {
      pick[0] = i0;
      if (!rec(rec, 1, mono[0][i0])) break;
    }
    return rep;
  };

  const std::size_t n0 = xs[0].generating.size();
  if (n0 == 0) return {true, {}, 0};
  workers = std::max(1u, std::min<unsigned>(workers, (unsigned)n0));
  if (workers == 1) return run_range(0, n0);

  std::vector<ZeroProductReport> parts(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t lo = n0 * w / workers, hi = n0 * (w + 1) / workers;
    pool.emplace_back([&parts, &run_range, w, lo, hi] { parts[w] = run_range(lo, hi); });
  }
  for (auto& t : pool) t.join();
  ZeroProductReport merged;
  merged.verified = true;
  for (auto& part : parts) {
    merged.tuples_checked += part.tuples_checked;
    if (!part.verified && merged.verified) {
      merged.verified = false;
      merged.witness = part.witness;
    }
  }
  return merged;
}

// Exact count of exponent tuples failing the filter, by dynamic programming
// over coordinates on integer-scaled margins. Counts are exact big integers.
inline BigInt exact_codim(std::span<const std::uint32_t> orders, int k, DegreeFilter f) {
  if (f.lambda.empty()) f.lambda = default_weights(orders, k);
  if (f.lambda.size() != orders.size())
    throw std::invalid_argument("weight count must match the number of coordinates");
  auto lcm_checked = [](long long a, long long b) {
    long long l = std::lcm(a, b);
    if (l > (1LL << 50)) throw std::invalid_argument("filter precision out of range");
    return l;
  };
  std::vector<std::vector<Rat>> margin(orders.size());
  long long scale = 1;
  for (std::size_t j = 0; j < orders.size(); ++j)
    for (std::uint32_t m = 0; m < orders[j]; ++m) {
      Rat t = orders[j] < 2 ? Rat(0) : f.lambda[j] * (Rat(m, orders[j] - 1) - f.eta);
      scale = lcm_checked(scale, t.denominator());
      margin[j].push_back(t);
    }
  std::map<long long, BigInt> dp;
  dp[0] = 1;
  for (std::size_t j = 0; j < orders.size(); ++j) {
    std::map<long long, BigInt> next;
    for (std::uint32_t m = 0; m < orders[j]; ++m) {
      long long w = margin[j][m].numerator() * (scale / margin[j][m].denominator());
      for (const auto& [sum, cnt] : dp) next[sum + w] += cnt;
    }
    dp = std::move(next);
  }
  BigInt total = 0;
  for (const auto& [sum, cnt] : dp)
    if (sum <= 0) total += cnt;
  return total;
}

inline BigInt exact_codim(std::span<const std::uint32_t> orders, int k) {
  DegreeFilter f;
  f.eta = Rat(1, k);
  f.k = k;
  return exact_codim(orders, k, f);
}

// The filtered subspace as a plain subspace of F_p^{|G|}.
inline Subspace to_subspace(const FilteredSubspace& fs) {
  const FiniteGroup& g = *fs.group;
  Matrix rows(fs.generating.size(), g.order(), g.prime());
  for (std::size_t r = 0; r < fs.generating.size(); ++r) {
    auto e = monomial_element(g, fs.generating[r], g.prime());
    for (std::uint32_t c = 0; c < g.order(); ++c) rows(r, c) = e[c];
  }
  return Subspace::span_rows(rows);
}

}  // namespace capring

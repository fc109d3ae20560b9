// The analytic rate machinery: S_N, the minimized rates a_N(k), kappa_N, and
// the Chernoff product bound on t/|G| for abelian p-groups.
#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace capring {

// N = 0 stands for the N -> infinity limit throughout this header.
constexpr std::uint32_t kOrderInf = 0;

// S_N(x) evaluated at x = exp(t); the limit is (x-1)/log x with a series
// fallback near the removable singularity at x = 1.
inline double s_rate(std::uint32_t N, double t) {
  if (N == kOrderInf) {
    if (std::fabs(t) < 1e-8) return 1.0 + t / 2.0 + t * t / 6.0;
    return std::expm1(t) / t;
  }
  if (N < 2) throw std::invalid_argument("S_N needs N >= 2");
  double s = 0.0;
  for (std::uint32_t j = 0; j < N; ++j) s += std::exp(t * j / (N - 1));
  return s / N;
}

inline double s_rate_x(std::uint32_t N, double x) { return s_rate(N, std::log(x)); }

namespace detail {

// Ternary search for the minimum of a convex function on [lo, hi].
template <class F>
inline std::pair<double, double> minimize_convex(F f, double lo, double hi, double tol) {
  for (int it = 0; it < 400 && hi - lo > tol; ++it) {
    double m1 = lo + (hi - lo) / 3.0;
    double m2 = hi - (hi - lo) / 3.0;
    if (f(m1) < f(m2))
      hi = m2;
    else
      lo = m1;
  }
  double t = (lo + hi) / 2.0;
  return {t, f(t)};
}

}  // namespace detail

struct RateResult {
  std::uint32_t N = 0;  // kOrderInf for the limit
  int k = 3;
  double value = 0.0;   // a_N(k) = min_{x in (0,1]} x^{-1/k} S_N(x)
  double xstar = 0.0;   // argmin
  double kappa = std::numeric_limits<double>::quiet_NaN();  // N * a_N(3)
};

// Minimizes x^{-1/k} S_N(x) by ternary search on log x over [-40, 0]; the
// objective is a sum (or integral) of exponentials in log x, hence convex.
inline RateResult rate(std::uint32_t N, int k) {
  if (k < 2) throw std::invalid_argument("rate needs k >= 2");
  if (N != kOrderInf && N < 2) throw std::invalid_argument("rate needs N >= 2 or the limit");
  auto objective = [N, k](double t) { return std::exp(-t / k) * s_rate(N, t); };
  auto [t, v] = detail::minimize_convex(objective, -40.0, 0.0, 1e-12);
  RateResult r;
  r.N = N;
  r.k = k;
  r.value = v;
  r.xstar = std::exp(t);
  if (N != kOrderInf) {
    double a3 = k == 3 ? v : detail::minimize_convex(
                                 [N](double s) { return std::exp(-s / 3.0) * s_rate(N, s); },
                                 -40.0, 0.0, 1e-12)
                                 .second;
    r.kappa = N * a3;
  }
  return r;
}

// kappa_N minimized straight from its own formula,
// min_{x > 0} x^{-(N-1)/3} (1 + x + ... + x^{N-1}); used as the independent
// cross-check of N * a_N(3).
inline double kappa_direct(std::uint32_t N) {
  if (N < 2) throw std::invalid_argument("kappa needs N >= 2");
  auto objective = [N](double t) {
    double s = 0.0;
    for (std::uint32_t j = 0; j < N; ++j) s += std::exp(t * (j - (N - 1) / 3.0));
    return s;
  };
  // substitution x -> x^{1/(N-1)} maps the search window accordingly
  auto [t, v] = detail::minimize_convex(objective, -40.0 / (N - 1), 0.0, 1e-13);
  (void)t;
  return v;
}

struct AnalyticBounds {
  double chernoff = 1.0;         // prod_j a_{N_j}(k), a bound on t/|G|
  double theorem_abelian = 1.0;  // prod_j kappa_{N_j}, meaningful for k = 3
};

inline AnalyticBounds analytic_bounds(std::span<const std::uint32_t> orders, int k) {
  AnalyticBounds b;
  for (auto N : orders) {
    if (N == 1) continue;  // trivial coordinate contributes factor 1
    auto r = rate(N, k);
    b.chernoff *= r.value;
    b.theorem_abelian *= r.kappa;
  }
  return b;
}

}  // namespace capring

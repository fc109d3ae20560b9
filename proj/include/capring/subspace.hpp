// Subspaces of F_p^d in reduced row echelon form: leaders, outsiders,
// intersections and spans of pointwise products.
#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "capring/matrix.hpp"

namespace capring {

// Stored canonically: basis rows in RREF with respect to the natural
// coordinate order, pivot coordinates strictly increasing.
class Subspace {
 public:
  static Subspace span_rows(const Matrix& rows) {
    auto r = rref(rows);
    Subspace s;
    s.ambient_ = rows.cols();
    s.p_ = rows.modulus();
    s.pivots_ = r.pivots;
    s.basis_ = Matrix(r.rank, rows.cols(), rows.modulus());
    for (std::size_t i = 0; i < r.rank; ++i)
      for (std::size_t j = 0; j < rows.cols(); ++j) s.basis_(i, j) = r.reduced(i, j);
    return s;
  }

  static Subspace span_rows(const std::vector<std::vector<std::uint32_t>>& rows,
                            std::size_t ambient, std::uint32_t p) {
    return span_rows(Matrix::from_rows(rows, ambient, p));
  }

  static Subspace full(std::size_t ambient, std::uint32_t p) {
    return span_rows(Matrix::identity(ambient, p));
  }

  static Subspace zero(std::size_t ambient, std::uint32_t p) {
    return span_rows(Matrix(0, ambient, p));
  }

  std::size_t ambient() const { return ambient_; }
  std::uint32_t modulus() const { return p_; }
  std::size_t dim() const { return basis_.rows(); }
  std::size_t codim() const { return ambient_ - dim(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(std::span<const std::uint32_t> v) const {
    if (v.size() != ambient_) throw std::invalid_argument("ambient mismatch");
    std::vector<std::uint32_t> r(v.begin(), v.end());
    for (auto& x : r) x %= p_;
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
      std::uint32_t f = r[pivots_[i]];
      if (!f) continue;
      for (std::size_t j = 0; j < ambient_; ++j)
        r[j] = sub_mod(r[j], mul_mod(f, basis_(i, j), p_), p_);
    }
    return std::all_of(r.begin(), r.end(), [](std::uint32_t x) { return x == 0; });
  }

  // Canonical form makes equality a plain comparison.
  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && p_ == o.p_ && basis_ == o.basis_;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  Subspace() : basis_(0, 0, 2) {}
  std::size_t ambient_ = 0;
  std::uint32_t p_ = 2;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

inline void require_same_space(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("ambient mismatch");
  if (a.modulus() != b.modulus()) throw std::invalid_argument("modulus mismatch");
}

struct LeadersOutsiders {
  std::vector<std::size_t> leaders;    // sorted coordinate labels
  std::vector<std::size_t> outsiders;  // sorted coordinate labels
};

// Leaders are the minimal nonzero coordinates reachable by elements of w under
// the given total order, outsiders the maximal ones. Leaders are the pivots of
// the RREF under `ordering`; outsiders the pivots under the reversed ordering.
inline LeadersOutsiders leaders_outsiders(const Subspace& w,
                                          std::span<const std::size_t> ordering) {
  if (ordering.size() != w.ambient()) throw std::invalid_argument("ordering size mismatch");
  auto lead = rref_ordered(w.basis(), ordering);
  std::vector<std::size_t> rev(ordering.rbegin(), ordering.rend());
  auto out = rref_ordered(w.basis(), rev);
  LeadersOutsiders r{lead.pivots, out.pivots};
  std::sort(r.leaders.begin(), r.leaders.end());
  std::sort(r.outsiders.begin(), r.outsiders.end());
  return r;
}

inline LeadersOutsiders leaders_outsiders(const Subspace& w) {
  auto ord = natural_ordering(w.ambient());
  return leaders_outsiders(w, ord);
}

// Zassenhaus: rows [A|A] and [B|0]; rows of the RREF with zero left half carry
// an intersection basis in the right half.
inline Subspace intersect(const Subspace& a, const Subspace& b) {
  require_same_space(a, b);
  const std::size_t d = a.ambient();
  const std::uint32_t p = a.modulus();
  Matrix big(a.dim() + b.dim(), 2 * d, p);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < d; ++j) {
      big(i, j) = a.basis()(i, j);
      big(i, d + j) = a.basis()(i, j);
    }
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < d; ++j) big(a.dim() + i, j) = b.basis()(i, j);
  auto r = rref(big);
  std::vector<std::vector<std::uint32_t>> rows;
  for (std::size_t i = 0; i < r.rank; ++i) {
    bool left_zero = true;
    for (std::size_t j = 0; j < d && left_zero; ++j) left_zero = r.reduced(i, j) == 0;
    if (!left_zero) continue;
    std::vector<std::uint32_t> v(d);
    for (std::size_t j = 0; j < d; ++j) v[j] = r.reduced(i, d + j);
    rows.push_back(std::move(v));
  }
  return Subspace::span_rows(rows, d, p);
}

// Exact span of all pointwise products f_1 ... f_k with f_i in x[i]: every
// tuple of basis vectors is multiplied out and the result reduced. Exponential
// in the basis sizes by design; all callers live at desk scale.
inline Subspace pointwise_product_span(std::span<const Subspace> x) {
  if (x.empty()) throw std::invalid_argument("need at least one subspace");
  for (std::size_t i = 1; i < x.size(); ++i) require_same_space(x[0], x[i]);
  const std::size_t d = x[0].ambient();
  const std::uint32_t p = x[0].modulus();
  for (const auto& s : x)
    if (s.dim() == 0) return Subspace::zero(d, p);

  std::vector<std::vector<std::uint32_t>> rows;
  std::vector<std::size_t> pick(x.size(), 0);
  while (true) {
    std::vector<std::uint32_t> prod(d, 1);
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < d; ++j)
        prod[j] = mul_mod(prod[j], x[i].basis()(pick[i], j), p);
    rows.push_back(std::move(prod));
    std::size_t i = 0;
    while (i < x.size()) {
      if (++pick[i] < x[i].dim()) break;
      pick[i] = 0;
      ++i;
    }
    if (i == x.size()) break;
  }
  return Subspace::span_rows(rows, d, p);
}

inline Subspace pointwise_product_span(std::initializer_list<Subspace> x) {
  std::vector<Subspace> v(x);
  return pointwise_product_span(std::span<const Subspace>(v));
}

}  // namespace capring

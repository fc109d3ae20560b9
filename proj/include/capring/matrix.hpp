// Dense matrices over F_p: row reduction and linear solving.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "capring/fp.hpp"

namespace capring {

class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, std::uint32_t p)
      : rows_(rows), cols_(cols), p_(p), a_(rows * cols, 0) {
    require_prime(p);
  }

  static Matrix identity(std::size_t n, std::uint32_t p) {
    Matrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<std::uint32_t>>& rows,
                          std::size_t cols, std::uint32_t p) {
    Matrix m(rows.size(), cols, p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j] % p;
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t modulus() const { return p_; }

  std::uint32_t& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  std::uint32_t operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  std::span<const std::uint32_t> row(std::size_t r) const {
    return {a_.data() + r * cols_, cols_};
  }
  std::span<std::uint32_t> row(std::size_t r) { return {a_.data() + r * cols_, cols_}; }

  void set(std::size_t r, std::size_t c, long long v) { (*this)(r, c) = norm_mod(v, p_); }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_ && a_ == o.a_;
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.p_ != y.p_) throw std::invalid_argument("modulus mismatch in matrix product");
    if (x.cols_ != y.rows_) throw std::invalid_argument("shape mismatch in matrix product");
    Matrix z(x.rows_, y.cols_, x.p_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        std::uint32_t xv = x(i, k);
        if (!xv) continue;
        for (std::size_t j = 0; j < y.cols_; ++j)
          z(i, j) = add_mod(z(i, j), mul_mod(xv, y(k, j), x.p_), x.p_);
      }
    return z;
  }

 private:
  std::size_t rows_, cols_;
  std::uint32_t p_;
  std::vector<std::uint32_t> a_;
};

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // column labels, one per nonzero row
};

// Reduced row echelon form with columns scanned in the order given by
// `ordering` (a permutation of column labels). Pivot labels come back in the
// scan order. Rows of the result are in original column coordinates.
inline RrefResult rref_ordered(Matrix m, std::span<const std::size_t> ordering) {
  const std::uint32_t p = m.modulus();
  if (ordering.size() != m.cols()) throw std::invalid_argument("ordering size mismatch");
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t oc = 0; oc < ordering.size() && rank < m.rows(); ++oc) {
    std::size_t c = ordering[oc];
    std::size_t sel = rank;
    while (sel < m.rows() && m(sel, c) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != rank)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(rank, j), m(sel, j));
    std::uint32_t inv = inv_mod(m(rank, c), p);
    for (std::size_t j = 0; j < m.cols(); ++j) m(rank, j) = mul_mod(m(rank, j), inv, p);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank) continue;
      std::uint32_t f = m(r, c);
      if (!f) continue;
      for (std::size_t j = 0; j < m.cols(); ++j)
        m(r, j) = sub_mod(m(r, j), mul_mod(f, m(rank, j), p), p);
    }
    pivots.push_back(c);
    ++rank;
  }
  return {std::move(m), rank, std::move(pivots)};
}

inline std::vector<std::size_t> natural_ordering(std::size_t n) {
  std::vector<std::size_t> o(n);
  for (std::size_t i = 0; i < n; ++i) o[i] = i;
  return o;
}

inline RrefResult rref(const Matrix& m) {
  return rref_ordered(m, natural_ordering(m.cols()));
}

// Basis of {x : m x = 0}, one row per free column of the RREF.
inline Matrix nullspace(const Matrix& m) {
  auto r = rref(m);
  const std::uint32_t p = m.modulus();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : r.pivots) is_pivot[c] = true;
  Matrix out(m.cols() - r.rank, m.cols(), p);
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    out(row, c) = 1 % p;
    for (std::size_t i = 0; i < r.rank; ++i)
      out(row, r.pivots[i]) = neg_mod(r.reduced(i, c), p);
    ++row;
  }
  return out;
}

// Any solution of m x = rhs, or nullopt when the system is inconsistent.
inline std::optional<std::vector<std::uint32_t>> solve(const Matrix& m,
                                                       std::span<const std::uint32_t> rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("rhs length mismatch");
  const std::uint32_t p = m.modulus();
  Matrix aug(m.rows(), m.cols() + 1, p);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = rhs[i] % p;
  }
  auto ord = natural_ordering(m.cols());  // never pivot on the rhs column
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t sel = rank;
    while (sel < m.rows() && aug(sel, c) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != rank)
      for (std::size_t j = 0; j <= m.cols(); ++j) std::swap(aug(rank, j), aug(sel, j));
    std::uint32_t inv = inv_mod(aug(rank, c), p);
    for (std::size_t j = 0; j <= m.cols(); ++j) aug(rank, j) = mul_mod(aug(rank, j), inv, p);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank) continue;
      std::uint32_t f = aug(r, c);
      if (!f) continue;
      for (std::size_t j = 0; j <= m.cols(); ++j)
        aug(r, j) = sub_mod(aug(r, j), mul_mod(f, aug(rank, j), p), p);
    }
    pivots.push_back(c);
    ++rank;
  }
  for (std::size_t r = rank; r < m.rows(); ++r)
    if (aug(r, m.cols()) != 0) return std::nullopt;
  std::vector<std::uint32_t> x(m.cols(), 0);
  for (std::size_t i = 0; i < rank; ++i) x[pivots[i]] = aug(i, m.cols());
  return x;
}

}  // namespace capring

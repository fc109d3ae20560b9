// Arithmetic in the group algebra F_p[G]: dense coefficient vectors indexed by
// group elements, convolution product, and the monomial bases built from
// (generator - 1) powers.
#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "capring/group.hpp"
#include "capring/matrix.hpp"

namespace capring {

class AlgebraElement {
 public:
  AlgebraElement(const FiniteGroup& g, std::uint32_t p)
      : g_(&g), p_(p), c_(g.order(), 0) {
    require_prime(p);
  }

  // zero element over the group's own prime field
  explicit AlgebraElement(const FiniteGroup& g) : AlgebraElement(g, g.prime()) {}

  static AlgebraElement unit(const FiniteGroup& g, std::uint32_t p) {
    AlgebraElement e(g, p);
    e.c_[0] = 1 % p;
    return e;
  }

  static AlgebraElement basis(const FiniteGroup& g, std::uint32_t elem, std::uint32_t p) {
    AlgebraElement e(g, p);
    e.c_[elem] = 1 % p;
    return e;
  }

  // generator - 1 for the generator sitting at canonical coordinate c
  static AlgebraElement generator_minus_one(const FiniteGroup& g, std::size_t coord,
                                            std::uint32_t p) {
    AlgebraElement e(g, p);
    e.c_[g.coordinate_generator(coord)] = add_mod(e.c_[g.coordinate_generator(coord)], 1 % p, p);
    e.c_[0] = sub_mod(e.c_[0], 1 % p, p);
    return e;
  }

  const FiniteGroup& group() const { return *g_; }
  std::uint32_t modulus() const { return p_; }
  std::size_t size() const { return c_.size(); }
  std::uint32_t operator[](std::size_t i) const { return c_[i]; }
  std::span<const std::uint32_t> coeffs() const { return c_; }
  void set(std::size_t i, long long v) { c_[i] = norm_mod(v, p_); }

  std::uint32_t identity_coefficient() const { return c_[0]; }

  // coefficient-sum functional (the augmentation)
  std::uint32_t coeff_sum() const {
    std::uint64_t s = 0;
    for (auto v : c_) s += v;
    return static_cast<std::uint32_t>(s % p_);
  }

  bool is_zero() const {
    for (auto v : c_)
      if (v) return false;
    return true;
  }

  bool operator==(const AlgebraElement& o) const {
    return g_ == o.g_ && p_ == o.p_ && c_ == o.c_;
  }
  bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = add_mod(c_[i], o.c_[i], p_);
    return *this;
  }
  AlgebraElement& operator-=(const AlgebraElement& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = sub_mod(c_[i], o.c_[i], p_);
    return *this;
  }
  AlgebraElement operator+(const AlgebraElement& o) const {
    AlgebraElement r = *this;
    return r += o;
  }
  AlgebraElement operator-(const AlgebraElement& o) const {
    AlgebraElement r = *this;
    return r -= o;
  }
  AlgebraElement operator*(std::uint32_t s) const {
    AlgebraElement r = *this;
    s %= p_;
    for (auto& v : r.c_) v = mul_mod(v, s, p_);
    return r;
  }

  // convolution: [g](a b) = sum over uv = g of [u]a [v]b
  AlgebraElement operator*(const AlgebraElement& o) const {
    check(o);
    AlgebraElement r(*g_, p_);
    std::vector<std::uint64_t> acc(c_.size(), 0);
    const std::size_t n = c_.size();
    for (std::size_t u = 0; u < n; ++u) {
      std::uint32_t av = c_[u];
      if (!av) continue;
      for (std::size_t v = 0; v < n; ++v) {
        std::uint32_t bv = o.c_[v];
        if (!bv) continue;
        acc[g_->mul((std::uint32_t)u, (std::uint32_t)v)] += (std::uint64_t)av * bv;
      }
    }
    for (std::size_t i = 0; i < n; ++i) r.c_[i] = static_cast<std::uint32_t>(acc[i] % p_);
    return r;
  }

  AlgebraElement pow(std::uint32_t e) const {
    AlgebraElement r = unit(*g_, p_);
    AlgebraElement b = *this;
    while (e) {
      if (e & 1) r = r * b;
      if (e >>= 1) b = b * b;
    }
    return r;
  }

 private:
  void check(const AlgebraElement& o) const {
    if (g_ != o.g_) throw std::invalid_argument("group mismatch");
    if (p_ != o.p_) throw std::invalid_argument("modulus mismatch");
  }

  const FiniteGroup* g_;
  std::uint32_t p_;
  std::vector<std::uint32_t> c_;
};

// The monomial for exponent tuple m: the product of (generator - 1)^{m_c} over
// the canonical coordinates, evaluated left to right. The order is part of the
// contract; the matrix-family algebras are noncommutative.
inline AlgebraElement monomial_element(const FiniteGroup& g, std::span<const std::uint32_t> m,
                                       std::uint32_t p) {
  if (m.size() != g.radix().size()) throw std::invalid_argument("monomial tuple length");
  AlgebraElement r = AlgebraElement::unit(g, p);
  for (std::size_t c = 0; c < m.size(); ++c) {
    if (m[c] >= g.radix()[c]) throw std::invalid_argument("monomial exponent out of range");
    if (m[c] == 0) continue;
    r = r * AlgebraElement::generator_minus_one(g, c, p).pow(m[c]);
  }
  return r;
}

inline AlgebraElement monomial_element(const FiniteGroup& g, std::uint32_t monomial_index,
                                       std::uint32_t p) {
  auto m = g.decode(monomial_index);
  return monomial_element(g, m, p);
}

inline AlgebraElement monomial_element(const FiniteGroup& g, std::uint32_t monomial_index) {
  return monomial_element(g, monomial_index, g.prime());
}

// All |G| monomials at once, reusing cached powers of each (generator - 1).
inline std::vector<AlgebraElement> all_monomials(const FiniteGroup& g, std::uint32_t p) {
  const auto& radix = g.radix();
  std::vector<std::vector<AlgebraElement>> pows(radix.size());
  for (std::size_t c = 0; c < radix.size(); ++c) {
    pows[c].push_back(AlgebraElement::unit(g, p));
    auto gen = AlgebraElement::generator_minus_one(g, c, p);
    for (std::uint32_t e = 1; e < radix[c]; ++e) pows[c].push_back(pows[c].back() * gen);
  }
  std::vector<AlgebraElement> out;
  out.reserve(g.order());
  for (std::uint32_t idx = 0; idx < g.order(); ++idx) {
    auto m = g.decode(idx);
    AlgebraElement r = AlgebraElement::unit(g, p);
    for (std::size_t c = 0; c < radix.size(); ++c)
      if (m[c]) r = r * pows[c][m[c]];
    out.push_back(std::move(r));
  }
  return out;
}

inline std::vector<AlgebraElement> all_monomials(const FiniteGroup& g) {
  return all_monomials(g, g.prime());
}

// |G| x |G| transition matrix from the monomial basis to the group-element
// basis; column m holds the coefficients of monomial m.
inline Matrix monomial_basis(const FiniteGroup& g, std::uint32_t p) {
  auto mono = all_monomials(g, p);
  Matrix t(g.order(), g.order(), p);
  for (std::uint32_t m = 0; m < g.order(); ++m)
    for (std::uint32_t e = 0; e < g.order(); ++e) t(e, m) = mono[m][e];
  return t;
}

inline Matrix monomial_basis(const FiniteGroup& g) { return monomial_basis(g, g.prime()); }

}  // namespace capring

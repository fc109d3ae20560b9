// Exact arithmetic in the prime field F_p.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace capring {

inline bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d <= n / d; ++d)
    if (n % d == 0) return false;
  return true;
}

inline void require_prime(std::uint32_t p) {
  if (!is_prime(p))
    throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
}

// Raw modular helpers for inner loops; inputs already reduced to [0, p).
inline std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}

inline std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + p - b;
}

inline std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((std::uint64_t)a * b % p);
}

inline std::uint32_t neg_mod(std::uint32_t a, std::uint32_t p) {
  return a == 0 ? 0 : p - a;
}

// Normalizes any signed integer into [0, p).
inline std::uint32_t norm_mod(long long v, std::uint32_t p) {
  long long r = v % (long long)p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

inline std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint32_t r = 1 % p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  if (a == 0) throw std::domain_error("inverse of 0 mod " + std::to_string(p));
  // extended Euclid
  long long t = 0, t1 = 1, r = p, r1 = a;
  while (r1 != 0) {
    long long q = r / r1;
    long long tmp = t - q * t1;
    t = t1;
    t1 = tmp;
    tmp = r - q * r1;
    r = r1;
    r1 = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

// Scalar value in [0, p); the modulus travels with the value and binary
// operations refuse to mix moduli.
class Fp {
 public:
  Fp(long long value, std::uint32_t p) : p_(p) {
    require_prime(p);
    v_ = norm_mod(value, p);
  }

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }

  Fp operator+(const Fp& o) const { return raw(add_mod(v_, check(o), p_), p_); }
  Fp operator-(const Fp& o) const { return raw(sub_mod(v_, check(o), p_), p_); }
  Fp operator*(const Fp& o) const { return raw(mul_mod(v_, check(o), p_), p_); }
  Fp operator/(const Fp& o) const { return raw(mul_mod(v_, inv_mod(check(o), p_), p_), p_); }
  Fp operator-() const { return raw(neg_mod(v_, p_), p_); }
  Fp inverse() const { return raw(inv_mod(v_, p_), p_); }
  Fp pow(std::uint64_t e) const { return raw(pow_mod(v_, e, p_), p_); }

  bool operator==(const Fp& o) const { return p_ == o.p_ && v_ == o.v_; }
  bool operator!=(const Fp& o) const { return !(*this == o); }

 private:
  static Fp raw(std::uint32_t v, std::uint32_t p) {
    Fp x;
    x.v_ = v;
    x.p_ = p;
    return x;
  }
  Fp() : v_(0), p_(2) {}
  std::uint32_t check(const Fp& o) const {
    if (o.p_ != p_)
      throw std::invalid_argument("modulus mismatch: " + std::to_string(p_) + " vs " +
                                  std::to_string(o.p_));
    return o.v_;
  }

  std::uint32_t v_;
  std::uint32_t p_;
};

}  // namespace capring

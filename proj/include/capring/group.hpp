// The three group families: finite abelian p-groups, Heisenberg groups
// H_{n-1}(F_p), and unitriangular groups UT(n, F_p). Elements are indexed by a
// mixed-radix encoding of their normal-form exponent tuple; the identity is
// index 0. Matrix-family multiplication runs on the matrix model, which is
// authoritative.
#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "capring/fp.hpp"

namespace capring {

enum class GroupFamily { abelian, heisenberg, unitriangular };

struct GroupSpec {
  GroupFamily kind = GroupFamily::abelian;
  std::vector<std::uint32_t> orders;  // abelian: N_1..N_n
  std::uint32_t p = 0;                // matrix families
  std::uint32_t n = 0;                // matrix families

  static GroupSpec parse(const std::string& text);
  std::string to_string() const;
};

struct GroupOptions {
  std::uint64_t max_order = 10000;  // hard cap on |G|
  std::uint64_t table_cap = 2048;   // dense multiplication table below this
};

namespace detail {

inline std::uint32_t abelian_prime(const std::vector<std::uint32_t>& orders) {
  std::uint32_t p = 0;
  for (std::uint32_t N : orders) {
    if (N == 0) throw std::invalid_argument("zero order in abelian spec");
    if (N == 1) continue;
    std::uint32_t q = 2;
    while (N % q != 0) ++q;
    if (p == 0) p = q;
    std::uint32_t m = N;
    while (m % p == 0) m /= p;
    if (m != 1)
      throw std::invalid_argument("abelian orders must be powers of one common prime");
  }
  return p == 0 ? 2 : p;  // trivial group: any prime serves
}

}  // namespace detail

class FiniteGroup {
 public:
  struct Generator {
    std::string name;
    std::uint32_t elem;
  };

  static FiniteGroup build(const GroupSpec& spec, const GroupOptions& opt = {}) {
    FiniteGroup g;
    g.spec_ = spec;
    switch (spec.kind) {
      case GroupFamily::abelian: {
        g.prime_ = detail::abelian_prime(spec.orders);
        g.radix_ = spec.orders;
        break;
      }
      case GroupFamily::heisenberg: {
        require_prime(spec.p);
        if (spec.n < 2) throw std::invalid_argument("heisenberg needs n >= 2");
        g.prime_ = spec.p;
        g.mat_dim_ = spec.n + 1;
        // coordinates: gamma (entry (0,n)), beta_i (entry (i,n)), alpha_i (entry (0,i))
        g.coord_pos_.push_back({0, spec.n});
        for (std::uint32_t i = 1; i < spec.n; ++i) g.coord_pos_.push_back({i, spec.n});
        for (std::uint32_t i = 1; i < spec.n; ++i) g.coord_pos_.push_back({0, i});
        g.radix_.assign(g.coord_pos_.size(), spec.p);
        break;
      }
      case GroupFamily::unitriangular: {
        require_prime(spec.p);
        if (spec.n < 2) throw std::invalid_argument("unitriangular needs n >= 2");
        g.prime_ = spec.p;
        g.mat_dim_ = spec.n;
        // normal-form generator order: column descending, then row descending
        for (std::uint32_t j = spec.n; j >= 2; --j)
          for (std::uint32_t i = j - 1; i >= 1; --i)
            g.coord_pos_.push_back({i - 1, j - 1});  // stored 0-based
        g.radix_.assign(g.coord_pos_.size(), spec.p);
        break;
      }
    }
    std::uint64_t order = 1;
    g.stride_.resize(g.radix_.size());
    for (std::size_t c = 0; c < g.radix_.size(); ++c) {
      g.stride_[c] = order;
      order *= g.radix_[c];
      if (order > opt.max_order)
        throw std::invalid_argument("group order exceeds the configured maximum of " +
                                    std::to_string(opt.max_order));
    }
    g.order_ = static_cast<std::uint32_t>(order);
    g.make_generators();
    if (order <= opt.table_cap) g.fill_tables();
    return g;
  }

  static FiniteGroup build(const std::string& spec_text, const GroupOptions& opt = {}) {
    return build(GroupSpec::parse(spec_text), opt);
  }

  const GroupSpec& spec() const { return spec_; }
  GroupFamily family() const { return spec_.kind; }
  std::uint32_t order() const { return order_; }
  std::uint32_t prime() const { return prime_; }
  const std::vector<std::uint32_t>& radix() const { return radix_; }
  const std::vector<Generator>& generators() const { return gens_; }
  bool has_table() const { return !table_.empty(); }

  // Generator whose (g - 1) occupies canonical monomial coordinate c.
  std::uint32_t coordinate_generator(std::size_t c) const { return coord_gen_[c]; }
  std::string coordinate_name(std::size_t c) const { return coord_names_[c]; }
  // unitriangular only: the 1-based (i, j) of coordinate c
  std::pair<std::uint32_t, std::uint32_t> coordinate_pair(std::size_t c) const {
    auto [i, j] = coord_pos_[c];
    return {i + 1, j + 1};
  }

  std::vector<std::uint32_t> decode(std::uint32_t idx) const {
    std::vector<std::uint32_t> e(radix_.size());
    for (std::size_t c = 0; c < radix_.size(); ++c) {
      e[c] = idx % radix_[c];
      idx /= radix_[c];
    }
    return e;
  }

  std::uint32_t encode(std::span<const std::uint32_t> exps) const {
    if (exps.size() != radix_.size()) throw std::invalid_argument("exponent tuple length");
    std::uint64_t idx = 0;
    for (std::size_t c = 0; c < radix_.size(); ++c) {
      if (exps[c] >= radix_[c]) throw std::invalid_argument("exponent out of range");
      idx += exps[c] * stride_[c];
    }
    return static_cast<std::uint32_t>(idx);
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (!table_.empty()) return table_[(std::size_t)a * order_ + b];
    return mul_raw(a, b);
  }

  std::uint32_t inverse(std::uint32_t a) const {
    if (!inv_table_.empty()) return inv_table_[a];
    return inverse_raw(a);
  }

  std::uint32_t power(std::uint32_t a, long long e) const {
    if (e < 0) {
      a = inverse(a);
      e = -e;
    }
    std::uint32_t r = 0;  // identity
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  std::uint32_t element_order(std::uint32_t a) const {
    std::uint32_t e = a, k = 1;
    while (e != 0) {
      e = mul(e, a);
      ++k;
    }
    return k;
  }

 private:
  FiniteGroup() = default;

  std::uint32_t mul_raw(std::uint32_t a, std::uint32_t b) const {
    if (spec_.kind == GroupFamily::abelian) {
      auto ea = decode(a), eb = decode(b);
      for (std::size_t c = 0; c < radix_.size(); ++c) {
        ea[c] += eb[c];
        if (ea[c] >= radix_[c]) ea[c] -= radix_[c];
      }
      return encode(ea);
    }
    auto ma = to_matrix(decode(a));
    auto mb = to_matrix(decode(b));
    std::vector<std::uint32_t> mc(mat_dim_ * mat_dim_, 0);
    for (std::uint32_t i = 0; i < mat_dim_; ++i)
      for (std::uint32_t k = 0; k < mat_dim_; ++k) {
        std::uint32_t v = ma[i * mat_dim_ + k];
        if (!v) continue;
        for (std::uint32_t j = 0; j < mat_dim_; ++j)
          mc[i * mat_dim_ + j] =
              add_mod(mc[i * mat_dim_ + j], mul_mod(v, mb[k * mat_dim_ + j], prime_), prime_);
      }
    return encode(from_matrix(mc));
  }

  std::uint32_t inverse_raw(std::uint32_t a) const {
    if (spec_.kind == GroupFamily::abelian) {
      auto e = decode(a);
      for (std::size_t c = 0; c < radix_.size(); ++c)
        if (e[c]) e[c] = radix_[c] - e[c];
      return encode(e);
    }
    // (I + N)^{-1} = sum_k (-N)^k, N strictly upper triangular
    auto m = to_matrix(decode(a));
    const std::uint32_t d = mat_dim_;
    std::vector<std::uint32_t> nneg(d * d, 0);  // -N
    for (std::uint32_t i = 0; i < d; ++i)
      for (std::uint32_t j = 0; j < d; ++j)
        if (i != j) nneg[i * d + j] = neg_mod(m[i * d + j], prime_);
    std::vector<std::uint32_t> acc(d * d, 0), pow(d * d, 0);
    for (std::uint32_t i = 0; i < d; ++i) acc[i * d + i] = pow[i * d + i] = 1;
    for (std::uint32_t k = 1; k < d; ++k) {
      std::vector<std::uint32_t> next(d * d, 0);
      for (std::uint32_t i = 0; i < d; ++i)
        for (std::uint32_t t = 0; t < d; ++t) {
          std::uint32_t v = pow[i * d + t];
          if (!v) continue;
          for (std::uint32_t j = 0; j < d; ++j)
            next[i * d + j] =
                add_mod(next[i * d + j], mul_mod(v, nneg[t * d + j], prime_), prime_);
        }
      pow = next;
      for (std::uint32_t i = 0; i < d * d; ++i) acc[i] = add_mod(acc[i], pow[i], prime_);
    }
    return encode(from_matrix(acc));
  }

  std::vector<std::uint32_t> to_matrix(const std::vector<std::uint32_t>& exps) const {
    std::vector<std::uint32_t> m(mat_dim_ * mat_dim_, 0);
    for (std::uint32_t i = 0; i < mat_dim_; ++i) m[i * mat_dim_ + i] = 1;
    for (std::size_t c = 0; c < coord_pos_.size(); ++c)
      m[coord_pos_[c].first * mat_dim_ + coord_pos_[c].second] = exps[c];
    return m;
  }

  std::vector<std::uint32_t> from_matrix(const std::vector<std::uint32_t>& m) const {
    std::vector<std::uint32_t> e(coord_pos_.size());
    for (std::size_t c = 0; c < coord_pos_.size(); ++c)
      e[c] = m[coord_pos_[c].first * mat_dim_ + coord_pos_[c].second];
    return e;
  }

  void make_generators() {
    coord_gen_.resize(radix_.size());
    coord_names_.resize(radix_.size());
    auto unit = [&](std::size_t c) {
      std::vector<std::uint32_t> e(radix_.size(), 0);
      e[c] = 1 % radix_[c];  // an order-1 coordinate only carries the identity
      return encode(e);
    };
    switch (spec_.kind) {
      case GroupFamily::abelian:
        for (std::size_t c = 0; c < radix_.size(); ++c) {
          coord_gen_[c] = unit(c);
          coord_names_[c] = "g" + std::to_string(c + 1);
          gens_.push_back({coord_names_[c], coord_gen_[c]});
        }
        break;
      case GroupFamily::heisenberg: {
        const std::uint32_t n = spec_.n;
        for (std::size_t c = 0; c < radix_.size(); ++c) coord_gen_[c] = unit(c);
        coord_names_[0] = "s";
        for (std::uint32_t i = 1; i < n; ++i) coord_names_[i] = "h" + std::to_string(i);
        for (std::uint32_t i = 1; i < n; ++i) coord_names_[n - 1 + i] = "g" + std::to_string(i);
        for (std::uint32_t i = 1; i < n; ++i)
          gens_.push_back({coord_names_[n - 1 + i], coord_gen_[n - 1 + i]});
        for (std::uint32_t i = 1; i < n; ++i) gens_.push_back({coord_names_[i], coord_gen_[i]});
        gens_.push_back({coord_names_[0], coord_gen_[0]});
        break;
      }
      case GroupFamily::unitriangular:
        for (std::size_t c = 0; c < radix_.size(); ++c) {
          coord_gen_[c] = unit(c);
          auto [i, j] = coordinate_pair(c);
          coord_names_[c] = (i <= 9 && j <= 9)
                                ? "g" + std::to_string(i) + std::to_string(j)
                                : "g" + std::to_string(i) + "_" + std::to_string(j);
          gens_.push_back({coord_names_[c], coord_gen_[c]});
        }
        break;
    }
  }

  void fill_tables() {
    table_.resize((std::size_t)order_ * order_);
    for (std::uint32_t a = 0; a < order_; ++a)
      for (std::uint32_t b = 0; b < order_; ++b) table_[(std::size_t)a * order_ + b] = mul_raw(a, b);
    inv_table_.resize(order_);
    for (std::uint32_t a = 0; a < order_; ++a) inv_table_[a] = inverse_raw(a);
  }

  GroupSpec spec_;
  std::uint32_t order_ = 1;
  std::uint32_t prime_ = 2;
  std::uint32_t mat_dim_ = 0;
  std::vector<std::uint32_t> radix_;
  std::vector<std::uint64_t> stride_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> coord_pos_;
  std::vector<std::uint32_t> coord_gen_;
  std::vector<std::string> coord_names_;
  std::vector<Generator> gens_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inv_table_;
};

inline GroupSpec GroupSpec::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("group spec needs the form family:params, got '" + text + "'");
  std::string fam = text.substr(0, colon);
  std::string rest = text.substr(colon + 1);
  GroupSpec s;
  auto parse_u32 = [](const std::string& t) -> std::uint32_t {
    std::size_t pos = 0;
    unsigned long v = std::stoul(t, &pos);
    if (pos != t.size() || v == 0 || v > 0xffffffffUL)
      throw std::invalid_argument("bad integer '" + t + "' in group spec");
    return static_cast<std::uint32_t>(v);
  };
  std::vector<std::string> parts;
  std::stringstream ss(rest);
  std::string tok;
  while (std::getline(ss, tok, ',')) parts.push_back(tok);
  if (fam == "abelian") {
    s.kind = GroupFamily::abelian;
    if (parts.empty()) throw std::invalid_argument("abelian spec needs orders");
    for (auto& t : parts) s.orders.push_back(parse_u32(t));
    detail::abelian_prime(s.orders);  // validate early
    return s;
  }
  if (fam != "heisenberg" && fam != "ut")
    throw std::invalid_argument("unknown group family '" + fam + "'");
  s.kind = fam == "heisenberg" ? GroupFamily::heisenberg : GroupFamily::unitriangular;
  for (auto& t : parts) {
    auto eq = t.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("expected key=value in group spec, got '" + t + "'");
    std::string key = t.substr(0, eq);
    std::uint32_t val = parse_u32(t.substr(eq + 1));
    if (key == "p")
      s.p = val;
    else if (key == "n")
      s.n = val;
    else
      throw std::invalid_argument("unknown key '" + key + "' in group spec");
  }
  if (s.p == 0 || s.n == 0)
    throw std::invalid_argument("matrix group spec needs both p and n");
  return s;
}

inline std::string GroupSpec::to_string() const {
  std::string out;
  switch (kind) {
    case GroupFamily::abelian:
      out = "abelian:";
      for (std::size_t i = 0; i < orders.size(); ++i)
        out += (i ? "," : "") + std::to_string(orders[i]);
      return out;
    case GroupFamily::heisenberg:
      return "heisenberg:p=" + std::to_string(p) + ",n=" + std::to_string(n);
    case GroupFamily::unitriangular:
      return "ut:n=" + std::to_string(n) + ",p=" + std::to_string(p);
  }
  return out;
}

}  // namespace capring

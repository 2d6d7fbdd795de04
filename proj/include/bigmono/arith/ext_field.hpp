#pragma once

#include <array>
#include <compare>
#include <limits>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "bigmono/arith/polynomial.hpp"
#include "bigmono/arith/prime_field.hpp"

namespace bigmono::arith {

inline constexpr std::size_t kMaxExtDegree = 24;

/// Residue class of a polynomial modulo the field's modulus, stored as its
/// little-endian coefficient vector. Unused tail digits are always zero.
struct FieldElem
{
  std::array<std::uint16_t, kMaxExtDegree> c{};

  bool operator==(const FieldElem &) const = default;
};

/// F_{p^m} = F_p[x]/(modulus) with schoolbook arithmetic.
class ExtField
{
public:
  using value_type = FieldElem;

  ExtField(PrimeField base, poly::Poly modulus) : base_(base), modulus_(std::move(modulus))
  {
    poly::trim(modulus_);
    if (modulus_.empty() || modulus_.back() != 1)
      throw std::invalid_argument("field modulus must be monic");
    m_ = static_cast<std::size_t>(poly::degree(modulus_));
    if (m_ < 1 || m_ > kMaxExtDegree)
      throw std::invalid_argument("extension degree " + std::to_string(m_) +
                                  " outside supported range 1.." +
                                  std::to_string(kMaxExtDegree));
    if (!poly::is_irreducible(base_, modulus_))
      throw std::invalid_argument("field modulus is reducible");
    order_ = 1;
    for (std::size_t i = 0; i < m_; ++i)
      order_ *= base_.p();
    build_frobenius();
  }

  /// F_{p^m} over the least irreducible modulus of degree m.
  static ExtField least(PrimeField base, std::size_t m)
  {
    return ExtField(base, poly::least_irreducible(base, m));
  }

  const PrimeField &base() const { return base_; }
  std::uint32_t p() const { return base_.p(); }
  std::size_t degree() const { return m_; }
  const poly::Poly &modulus() const { return modulus_; }
  const BigInt &order() const { return order_; }

  /// Field order as a machine integer; throws when it does not fit.
  std::uint64_t order_u64() const
  {
    if (order_ > BigInt(std::numeric_limits<std::uint64_t>::max() / 2))
      throw std::overflow_error("field order too large to enumerate");
    return static_cast<std::uint64_t>(order_);
  }

  value_type zero() const { return {}; }
  value_type one() const
  {
    FieldElem e;
    e.c[0] = 1;
    return e;
  }
  value_type from_int(std::int64_t v) const
  {
    FieldElem e;
    e.c[0] = static_cast<std::uint16_t>(base_.from_int(v));
    return e;
  }
  /// The residue class of x.
  value_type generator() const { return from_poly({0, 1}); }

  bool is_zero(const value_type &a) const { return a == FieldElem{}; }

  value_type add(const value_type &a, const value_type &b) const
  {
    FieldElem r;
    for (std::size_t i = 0; i < m_; ++i)
      r.c[i] = static_cast<std::uint16_t>(base_.add(a.c[i], b.c[i]));
    return r;
  }
  value_type sub(const value_type &a, const value_type &b) const
  {
    FieldElem r;
    for (std::size_t i = 0; i < m_; ++i)
      r.c[i] = static_cast<std::uint16_t>(base_.sub(a.c[i], b.c[i]));
    return r;
  }
  value_type neg(const value_type &a) const
  {
    FieldElem r;
    for (std::size_t i = 0; i < m_; ++i)
      r.c[i] = static_cast<std::uint16_t>(base_.neg(a.c[i]));
    return r;
  }
  value_type scale(const value_type &a, std::uint32_t s) const
  {
    FieldElem r;
    for (std::size_t i = 0; i < m_; ++i)
      r.c[i] = static_cast<std::uint16_t>(base_.mul(a.c[i], s));
    return r;
  }

  value_type mul(const value_type &a, const value_type &b) const
  {
    const std::uint64_t p = base_.p();
    std::array<std::uint64_t, 2 * kMaxExtDegree> t{};
    for (std::size_t i = 0; i < m_; ++i) {
      if (a.c[i] == 0)
        continue;
      for (std::size_t j = 0; j < m_; ++j)
        t[i + j] += static_cast<std::uint64_t>(a.c[i]) * b.c[j];
    }
    for (std::size_t k = 0; k + 1 < 2 * m_; ++k)
      t[k] %= p;
    for (std::size_t k = 2 * m_ - 2; k >= m_; --k) {
      const std::uint64_t c = t[k] % p;
      if (c != 0) {
        const std::uint64_t nc = p - c;
        for (std::size_t i = 0; i < m_; ++i)
          t[k - m_ + i] = (t[k - m_ + i] + nc * modulus_[i]) % p;
      }
      t[k] = 0;
    }
    FieldElem r;
    for (std::size_t i = 0; i < m_; ++i)
      r.c[i] = static_cast<std::uint16_t>(t[i] % p);
    return r;
  }

  value_type inv(const value_type &a) const
  {
    if (is_zero(a))
      throw std::domain_error("inverse of zero in F_" + std::to_string(p()) + "^" +
                              std::to_string(m_));
    // extended Euclid on (modulus, a)
    poly::Poly r0 = modulus_, r1 = to_poly(a);
    poly::Poly s0, s1{1};
    while (!r1.empty()) {
      auto [q, r] = poly::divmod(base_, r0, r1);
      poly::Poly s = poly::sub(base_, s0, poly::mul(base_, q, s1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s);
    }
    // r0 is a nonzero constant
    return from_poly(poly::scale(base_, s0, base_.inv(r0[0])));
  }

  template <class Exponent>
  value_type pow(value_type a, Exponent e) const
  {
    value_type r = one();
    while (e > 0) {
      if ((e & 1) != 0)
        r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  /// a^(p^k), using the precomputed matrix of the p-power map.
  value_type frobenius(value_type a, std::size_t k) const
  {
    for (std::size_t step = 0; step < k % m_; ++step) {
      FieldElem r;
      for (std::size_t j = 0; j < m_; ++j) {
        if (a.c[j] == 0)
          continue;
        for (std::size_t i = 0; i < m_; ++i)
          r.c[i] = static_cast<std::uint16_t>(
              base_.add(r.c[i], base_.mul(a.c[j], frob_[j][i])));
      }
      a = r;
    }
    return a;
  }

  poly::Poly to_poly(const value_type &a) const
  {
    poly::Poly f(a.c.begin(), a.c.begin() + static_cast<std::ptrdiff_t>(m_));
    poly::trim(f);
    return f;
  }

  value_type from_poly(const poly::Poly &f) const
  {
    poly::Poly r = poly::mod(base_, f, modulus_);
    FieldElem e;
    for (std::size_t i = 0; i < r.size(); ++i)
      e.c[i] = static_cast<std::uint16_t>(r[i]);
    return e;
  }

  /// Little-endian base-p digits (length m).
  std::vector<std::uint32_t> digits(const value_type &a) const
  {
    return {a.c.begin(), a.c.begin() + static_cast<std::ptrdiff_t>(m_)};
  }

  value_type from_digits(const std::vector<std::uint32_t> &d) const
  {
    if (d.size() != m_)
      throw std::invalid_argument("digit vector has wrong length");
    FieldElem e;
    for (std::size_t i = 0; i < m_; ++i) {
      if (d[i] >= p())
        throw std::invalid_argument("digit out of range");
      e.c[i] = static_cast<std::uint16_t>(d[i]);
    }
    return e;
  }

  /// Integer encoding sum c_i p^i. This is the canonical element order.
  std::uint64_t index(const value_type &a) const
  {
    std::uint64_t v = 0;
    for (std::size_t i = m_; i-- > 0;)
      v = v * p() + a.c[i];
    return v;
  }

  value_type from_index(std::uint64_t v) const
  {
    FieldElem e;
    for (std::size_t i = 0; i < m_; ++i) {
      e.c[i] = static_cast<std::uint16_t>(v % p());
      v /= p();
    }
    return e;
  }

  bool less(const value_type &a, const value_type &b) const
  {
    for (std::size_t i = m_; i-- > 0;)
      if (a.c[i] != b.c[i])
        return a.c[i] < b.c[i];
    return false;
  }

  template <class Rng>
  value_type random(Rng &rng) const
  {
    std::uniform_int_distribution<std::uint32_t> dist(0, p() - 1);
    FieldElem e;
    for (std::size_t i = 0; i < m_; ++i)
      e.c[i] = static_cast<std::uint16_t>(dist(rng));
    return e;
  }

  /// Least primitive r-th root of unity (r prime dividing |F|-1) in index order.
  value_type least_primitive_root_of_unity(std::uint32_t r) const
  {
    const BigInt group_order = order_ - 1;
    if (group_order % r != 0)
      throw std::invalid_argument(std::to_string(r) + " does not divide |F^x|");
    const BigInt cofactor = group_order / r;
    value_type z0{};
    bool found = false;
    for (std::uint64_t y = 1; !found; ++y) {
      value_type w = pow(from_index(y), cofactor);
      if (!(w == one())) {
        z0 = w;
        found = true;
      }
    }
    value_type best = z0, cur = z0;
    for (std::uint32_t k = 2; k < r; ++k) {
      cur = mul(cur, z0);
      if (less(cur, best))
        best = cur;
    }
    return best;
  }

  bool operator==(const ExtField &other) const
  {
    return base_ == other.base_ && modulus_ == other.modulus_;
  }

private:
  void build_frobenius()
  {
    frob_.assign(m_, std::vector<std::uint32_t>(m_, 0));
    for (std::size_t j = 0; j < m_; ++j) {
      poly::Poly xj = poly::powmod(base_, poly::monomial(j),
                                   static_cast<std::uint64_t>(base_.p()), modulus_);
      for (std::size_t i = 0; i < xj.size(); ++i)
        frob_[j][i] = xj[i];
    }
  }

  PrimeField base_;
  poly::Poly modulus_;
  std::size_t m_ = 0;
  BigInt order_;
  // frob_[j] = digits of (x^j)^p
  std::vector<std::vector<std::uint32_t>> frob_;
};

} // namespace bigmono::arith

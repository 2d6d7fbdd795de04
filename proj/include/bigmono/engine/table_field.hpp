#pragma once

// Finite field with elements stored as their canonical integer index
// (little-endian base-p digits) and arithmetic done by table lookup. Small
// fields get full addition and multiplication tables; larger ones use
// discrete logarithms with Zech logarithms for addition.

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

#include "bigmono/arith/ext_field.hpp"
#include "bigmono/arith/polynomial.hpp"

namespace bigmono::engine {

class TableField
{
public:
  using value_type = std::uint32_t;

  static constexpr std::uint32_t kMaxOrder = 1u << 16;
  static constexpr std::uint32_t kFullTableLimit = 2048;

  explicit TableField(const arith::ExtField &field) : p_(field.p()), degree_(field.degree())
  {
    if (field.order() > kMaxOrder)
      throw std::overflow_error("field too large for table arithmetic");
    q_ = static_cast<std::uint32_t>(field.order_u64());
    neg_.resize(q_);
    for (std::uint32_t a = 0; a < q_; ++a)
      neg_[a] = static_cast<std::uint16_t>(field.index(field.neg(field.from_index(a))));
    build_logs(field);
    if (q_ <= kFullTableLimit) {
      add_.resize(std::size_t{q_} * q_);
      mul_.resize(std::size_t{q_} * q_);
      for (std::uint32_t a = 0; a < q_; ++a)
        for (std::uint32_t b = 0; b < q_; ++b) {
          add_[a * q_ + b] = static_cast<std::uint16_t>(slow_add(a, b));
          mul_[a * q_ + b] = static_cast<std::uint16_t>(log_mul(a, b));
        }
    }
  }

  std::uint32_t order() const { return q_; }
  std::uint32_t p() const { return p_; }
  std::size_t degree() const { return degree_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(value_type a) const { return a == 0; }

  value_type add(value_type a, value_type b) const
  {
    if (!add_.empty())
      return add_[a * q_ + b];
    return slow_add(a, b);
  }
  value_type neg(value_type a) const { return neg_[a]; }
  value_type sub(value_type a, value_type b) const { return add(a, neg_[b]); }
  value_type mul(value_type a, value_type b) const
  {
    if (!mul_.empty())
      return mul_[a * q_ + b];
    return log_mul(a, b);
  }
  value_type inv(value_type a) const
  {
    if (a == 0)
      throw std::domain_error("inverse of zero");
    const std::uint32_t l = log_[a];
    return exp_[l == 0 ? 0 : q_ - 1 - l];
  }

  /// Base-p digits of an element, lowest first.
  std::vector<std::uint32_t> digits(value_type a) const
  {
    std::vector<std::uint32_t> d(degree_);
    for (auto &x : d) {
      x = a % p_;
      a /= p_;
    }
    return d;
  }

  const std::uint16_t *add_table() const { return add_.empty() ? nullptr : add_.data(); }
  const std::uint16_t *mul_table() const { return mul_.empty() ? nullptr : mul_.data(); }

private:
  void build_logs(const arith::ExtField &field)
  {
    // least primitive element by index
    std::vector<std::uint64_t> primes;
    for (auto r : arith::poly::prime_divisors(q_ - 1))
      primes.push_back(r);
    arith::FieldElem g;
    for (std::uint32_t c = 1;; ++c) {
      g = field.from_index(c);
      bool primitive = true;
      for (auto r : primes)
        if (field.pow(g, static_cast<std::uint64_t>((q_ - 1) / r)) == field.one()) {
          primitive = false;
          break;
        }
      if (primitive)
        break;
    }
    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    arith::FieldElem x = field.one();
    for (std::uint32_t k = 0; k < q_ - 1; ++k) {
      const auto idx = static_cast<std::uint32_t>(field.index(x));
      exp_[k] = idx;
      log_[idx] = k;
      x = field.mul(x, g);
    }
    // zech_[k] = log(1 + g^k), or -1 when 1 + g^k = 0
    zech_.resize(q_ - 1);
    for (std::uint32_t k = 0; k < q_ - 1; ++k) {
      const auto s = static_cast<std::uint32_t>(
          field.index(field.add(field.one(), field.from_index(exp_[k]))));
      zech_[k] = s == 0 ? -1 : static_cast<std::int32_t>(log_[s]);
    }
  }

  value_type log_mul(value_type a, value_type b) const
  {
    if (a == 0 || b == 0)
      return 0;
    std::uint32_t l = log_[a] + log_[b];
    if (l >= q_ - 1)
      l -= q_ - 1;
    return exp_[l];
  }

  value_type slow_add(value_type a, value_type b) const
  {
    if (a == 0)
      return b;
    if (b == 0)
      return a;
    // a + b = a (1 + b/a)
    std::uint32_t k = log_[b] + (q_ - 1) - log_[a];
    if (k >= q_ - 1)
      k -= q_ - 1;
    const std::int32_t z = zech_[k];
    if (z < 0)
      return 0;
    std::uint32_t l = log_[a] + static_cast<std::uint32_t>(z);
    if (l >= q_ - 1)
      l -= q_ - 1;
    return exp_[l];
  }

  std::uint32_t p_;
  std::size_t degree_;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> exp_, log_;
  std::vector<std::int32_t> zech_;
  std::vector<std::uint16_t> neg_, add_, mul_;
};

} // namespace bigmono::engine

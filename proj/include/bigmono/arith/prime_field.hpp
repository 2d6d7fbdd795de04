#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace bigmono {

using BigInt = boost::multiprecision::cpp_int;

namespace arith {

inline bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  if (n % 2 == 0)
    return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0)
      return false;
  return true;
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod)
{
  unsigned __int128 result = 1 % mod;
  unsigned __int128 b = base % mod;
  while (exp) {
    if (exp & 1)
      result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

inline void require_odd_prime(std::uint64_t n, const char *what)
{
  if (n < 3 || !is_prime(n))
    throw std::invalid_argument(std::string(what) + " must be an odd prime, got " +
                                std::to_string(n));
}

/// Integers modulo an odd prime. Residues are kept in [0, p).
class PrimeField
{
public:
  using value_type = std::uint32_t;

  explicit PrimeField(std::uint32_t p) : p_(p)
  {
    require_odd_prime(p, "prime field modulus");
    if (p > 65521)
      throw std::invalid_argument("prime field modulus too large: " + std::to_string(p));
  }

  std::uint32_t p() const { return p_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }

  value_type from_int(std::int64_t v) const
  {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<value_type>(r < 0 ? r + p_ : r);
  }

  value_type add(value_type a, value_type b) const
  {
    value_type s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const
  {
    return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p_);
  }

  value_type inv(value_type a) const
  {
    if (a == 0)
      throw std::domain_error("inverse of zero in F_" + std::to_string(p_));
    return static_cast<value_type>(pow_mod(a, p_ - 2, p_));
  }

  value_type pow(value_type a, std::uint64_t e) const
  {
    return static_cast<value_type>(pow_mod(a, e, p_));
  }

  bool is_zero(value_type a) const { return a == 0; }

  bool operator==(const PrimeField &) const = default;

private:
  std::uint32_t p_;
};

} // namespace arith
} // namespace bigmono

#pragma once

// Dense univariate polynomials over a prime field. Coefficients are stored
// little-endian (index i holds the coefficient of x^i) and kept trimmed, so
// the zero polynomial is the empty vector.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bigmono/arith/prime_field.hpp"

namespace bigmono::arith::poly {

using Poly = std::vector<std::uint32_t>;

inline void trim(Poly &f)
{
  while (!f.empty() && f.back() == 0)
    f.pop_back();
}

inline int degree(const Poly &f) { return static_cast<int>(f.size()) - 1; }

inline Poly monomial(std::size_t d)
{
  Poly f(d + 1, 0);
  f[d] = 1;
  return f;
}

inline Poly add(const PrimeField &F, const Poly &a, const Poly &b)
{
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = F.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(r);
  return r;
}

inline Poly sub(const PrimeField &F, const Poly &a, const Poly &b)
{
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(r);
  return r;
}

inline Poly mul(const PrimeField &F, const Poly &a, const Poly &b)
{
  if (a.empty() || b.empty())
    return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0)
      continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

inline Poly scale(const PrimeField &F, const Poly &a, std::uint32_t c)
{
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = F.mul(a[i], c);
  trim(r);
  return r;
}

/// Returns (quotient, remainder).
inline std::pair<Poly, Poly> divmod(const PrimeField &F, Poly a, const Poly &b)
{
  if (b.empty())
    throw std::domain_error("polynomial division by zero");
  trim(a);
  if (a.size() < b.size())
    return {{}, a};
  Poly q(a.size() - b.size() + 1, 0);
  const std::uint32_t lead_inv = F.inv(b.back());
  for (int k = degree(a); k >= degree(b); --k) {
    std::uint32_t c = F.mul(a[k], lead_inv);
    if (c == 0)
      continue;
    std::size_t shift = static_cast<std::size_t>(k - degree(b));
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = F.sub(a[shift + i], F.mul(c, b[i]));
  }
  trim(a);
  trim(q);
  return {q, a};
}

inline Poly mod(const PrimeField &F, const Poly &a, const Poly &b) { return divmod(F, a, b).second; }

inline Poly make_monic(const PrimeField &F, const Poly &a)
{
  if (a.empty())
    return a;
  return scale(F, a, F.inv(a.back()));
}

inline Poly gcd(const PrimeField &F, Poly a, Poly b)
{
  while (!b.empty()) {
    Poly r = mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(F, a);
}

inline Poly mulmod(const PrimeField &F, const Poly &a, const Poly &b, const Poly &m)
{
  return mod(F, mul(F, a, b), m);
}

template <class Exponent>
Poly powmod(const PrimeField &F, Poly base, Exponent e, const Poly &m)
{
  Poly result = mod(F, Poly{1}, m);
  base = mod(F, base, m);
  while (e > 0) {
    if ((e & 1) != 0)
      result = mulmod(F, result, base, m);
    base = mulmod(F, base, base, m);
    e >>= 1;
  }
  return result;
}

/// x^(p^k) mod m by k successive p-th powers.
inline Poly frobenius_x(const PrimeField &F, std::size_t k, const Poly &m)
{
  Poly r = mod(F, monomial(1), m);
  for (std::size_t i = 0; i < k; ++i)
    r = powmod(F, r, static_cast<std::uint64_t>(F.p()), m);
  return r;
}

inline std::vector<std::size_t> prime_divisors(std::size_t n)
{
  std::vector<std::size_t> out;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0)
        n /= d;
    }
  }
  if (n > 1)
    out.push_back(n);
  return out;
}

/// Rabin's irreducibility test.
inline bool is_irreducible(const PrimeField &F, const Poly &f)
{
  const int n = degree(f);
  if (n < 1)
    return false;
  if (n == 1)
    return true;
  if (f[0] == 0)
    return false;
  const Poly x = monomial(1);
  for (std::size_t r : prime_divisors(static_cast<std::size_t>(n))) {
    Poly h = sub(F, frobenius_x(F, static_cast<std::size_t>(n) / r, f), x);
    if (degree(gcd(F, h, f)) != 0)
      return false;
  }
  return mod(F, sub(F, frobenius_x(F, static_cast<std::size_t>(n), f), x), f).empty();
}

/// Least monic irreducible polynomial of degree m, where candidates are
/// ordered lexicographically on their little-endian coefficient vectors
/// (constant term compared first).
inline Poly least_irreducible(const PrimeField &F, std::size_t m)
{
  if (m == 0)
    throw std::invalid_argument("irreducible polynomial degree must be positive");
  std::vector<std::uint32_t> digits(m, 0);
  for (;;) {
    Poly f(digits.begin(), digits.end());
    f.push_back(1);
    if (is_irreducible(F, f))
      return f;
    // advance the odometer; the last coefficient varies fastest
    std::size_t i = m;
    while (i > 0) {
      --i;
      if (++digits[i] < F.p())
        break;
      digits[i] = 0;
      if (i == 0)
        throw std::logic_error("no irreducible polynomial found");
    }
  }
}

/// The l-th cyclotomic polynomial for prime l.
inline Poly cyclotomic_prime(std::uint32_t l) { return Poly(l, 1); }

/// Distinct-degree factorization of a squarefree polynomial: pairs
/// (d, product of all irreducible factors of degree d).
inline std::vector<std::pair<std::size_t, Poly>> distinct_degree_factorization(const PrimeField &F,
                                                                               Poly f)
{
  std::vector<std::pair<std::size_t, Poly>> out;
  f = make_monic(F, f);
  const Poly x = monomial(1);
  Poly h = mod(F, x, f);
  std::size_t d = 0;
  while (degree(f) >= 2 * static_cast<int>(d + 1)) {
    ++d;
    h = powmod(F, h, static_cast<std::uint64_t>(F.p()), f);
    Poly g = gcd(F, sub(F, h, x), f);
    if (degree(g) > 0) {
      out.emplace_back(d, g);
      f = divmod(F, f, g).first;
      h = mod(F, h, f);
    }
  }
  if (degree(f) > 0)
    out.emplace_back(static_cast<std::size_t>(degree(f)), f);
  return out;
}

} // namespace bigmono::arith::poly

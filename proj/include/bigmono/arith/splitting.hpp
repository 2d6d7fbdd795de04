#pragma once

// How an odd prime p decomposes in the l-th cyclotomic ring, and therefore
// which coefficient algebra (quadratic field or split product) the
// representation lives over.

#include <cstdint>
#include <stdexcept>
#include <string>

#include "bigmono/arith/polynomial.hpp"
#include "bigmono/arith/prime_field.hpp"

namespace bigmono::arith {

enum class AlgebraKind
{
  Unitary,
  Split
};

inline const char *to_string(AlgebraKind k) { return k == AlgebraKind::Unitary ? "Unitary" : "Split"; }

/// Multiplicative order of p modulo l.
inline std::uint32_t ord_mod(std::uint64_t p, std::uint64_t l)
{
  require_odd_prime(p, "p");
  require_odd_prime(l, "l");
  if (p == l)
    throw std::invalid_argument("p and l must be distinct");
  std::uint64_t x = p % l;
  std::uint32_t f = 1;
  while (x != 1) {
    x = x * (p % l) % l;
    ++f;
  }
  return f;
}

struct SplittingData
{
  std::uint32_t p = 0;
  std::uint32_t l = 0;
  std::uint32_t f = 0;
  AlgebraKind kind = AlgebraKind::Split;
  /// Order of the fixed field of the involution.
  BigInt q;
  /// Classification by the parity of (l-1)/f, reported alongside.
  AlgebraKind parity_kind = AlgebraKind::Split;

  std::uint32_t fixed_field_degree() const { return kind == AlgebraKind::Unitary ? f / 2 : f; }
};

/// Unitary iff -1 lies in the subgroup generated by p in (Z/l)^x.
inline SplittingData splitting_data(std::uint32_t p, std::uint32_t l)
{
  SplittingData sd;
  sd.p = p;
  sd.l = l;
  sd.f = ord_mod(p, l);
  bool minus_one_in_subgroup = false;
  std::uint64_t x = 1;
  for (std::uint32_t i = 0; i < sd.f; ++i) {
    if (x == l - 1)
      minus_one_in_subgroup = true;
    x = x * p % l;
  }
  sd.kind = minus_one_in_subgroup ? AlgebraKind::Unitary : AlgebraKind::Split;
  sd.q = boost::multiprecision::pow(BigInt(p), sd.fixed_field_degree());
  sd.parity_kind = ((l - 1) / sd.f) % 2 == 1 ? AlgebraKind::Unitary : AlgebraKind::Split;
  return sd;
}

/// Independent classification from the l-th cyclotomic polynomial over F_p:
/// factor degrees come from distinct-degree factorization, and the prime is
/// stable under zeta -> zeta^{-1} iff x^(p^j) * x == 1 in F_p[x]/(Phi_l) for
/// some j below the factor degree.
struct CyclotomicPattern
{
  std::uint32_t factor_degree = 0;
  std::uint32_t factor_count = 0;
  bool uniform = false;
  AlgebraKind kind = AlgebraKind::Split;
};

inline CyclotomicPattern cyclotomic_pattern(std::uint32_t p, std::uint32_t l)
{
  require_odd_prime(p, "p");
  require_odd_prime(l, "l");
  if (p == l)
    throw std::invalid_argument("p and l must be distinct");
  const PrimeField F(p);
  const poly::Poly phi = poly::cyclotomic_prime(l);
  CyclotomicPattern pat;
  auto ddf = poly::distinct_degree_factorization(F, phi);
  pat.uniform = ddf.size() == 1;
  pat.factor_degree = static_cast<std::uint32_t>(ddf.front().first);
  pat.factor_count = static_cast<std::uint32_t>(poly::degree(phi)) / pat.factor_degree;
  pat.kind = AlgebraKind::Split;
  poly::Poly xpj = poly::mod(F, poly::monomial(1), phi);
  for (std::uint32_t j = 0; j < pat.factor_degree; ++j) {
    if (poly::mulmod(F, xpj, poly::monomial(1), phi) == poly::Poly{1}) {
      pat.kind = AlgebraKind::Unitary;
      break;
    }
    xpj = poly::powmod(F, xpj, static_cast<std::uint64_t>(p), phi);
  }
  return pat;
}

} // namespace bigmono::arith

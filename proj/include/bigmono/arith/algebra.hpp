#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "bigmono/arith/ext_field.hpp"
#include "bigmono/arith/splitting.hpp"

namespace bigmono::arith {

/// Raised when inverting an element that is zero in some component.
class ZeroDivisorError : public std::domain_error
{
public:
  ZeroDivisorError(const std::string &what, std::size_t component)
    : std::domain_error(what), component_(component)
  {
  }
  std::size_t component() const { return component_; }

private:
  std::size_t component_;
};

/// Element of an involutive algebra. In the unitary case only `a` is used;
/// in the split case the element is the coordinate pair (a, b).
struct AlgElem
{
  FieldElem a;
  FieldElem b;

  bool operator==(const AlgElem &) const = default;
};

/// The coefficient algebra E_q: either F_{q^2} with x -> x^q, or
/// F_q (+) F_q with the coordinate swap.
class InvolutiveAlgebra
{
public:
  using value_type = AlgElem;

  /// Builds the algebra for the given splitting type. The field modulus is
  /// the least irreducible polynomial of degree f; zeta is the least
  /// primitive l-th root of unity (unitary) or the pair (z, z^{-1}) with z
  /// the least primitive l-th root in F_q (split).
  explicit InvolutiveAlgebra(const SplittingData &sd)
    : sd_(sd), field_(ExtField::least(PrimeField(sd.p), sd.f))
  {
    const FieldElem z = field_.least_primitive_root_of_unity(sd.l);
    if (sd.kind == AlgebraKind::Unitary) {
      half_degree_ = sd.f / 2;
      zeta_ = {z, {}};
    } else {
      zeta_ = {z, field_.inv(z)};
    }
  }

  const SplittingData &splitting() const { return sd_; }
  AlgebraKind kind() const { return sd_.kind; }
  bool is_unitary() const { return sd_.kind == AlgebraKind::Unitary; }
  const ExtField &field() const { return field_; }
  std::uint32_t p() const { return sd_.p; }
  std::uint32_t l() const { return sd_.l; }
  const BigInt &q() const { return sd_.q; }
  const AlgElem &zeta() const { return zeta_; }

  std::size_t component_count() const { return is_unitary() ? 1 : 2; }
  /// Dimension as a vector space over F_p.
  std::size_t prime_dim() const { return component_count() * field_.degree(); }
  /// Dimension of the fixed field over F_p.
  std::size_t fixed_prime_dim() const { return sd_.fixed_field_degree(); }

  value_type zero() const { return {}; }
  value_type one() const { return from_field(field_.one()); }
  value_type from_int(std::int64_t v) const { return from_field(field_.from_int(v)); }
  /// Diagonal embedding of a field element.
  value_type from_field(const FieldElem &x) const
  {
    return is_unitary() ? AlgElem{x, {}} : AlgElem{x, x};
  }
  value_type from_components(const FieldElem &x, const FieldElem &y) const
  {
    if (is_unitary())
      throw std::logic_error("unitary algebra has a single component");
    return {x, y};
  }

  const FieldElem &component(const value_type &x, std::size_t c) const { return c == 0 ? x.a : x.b; }

  bool is_zero(const value_type &x) const { return x == AlgElem{}; }

  value_type add(const value_type &x, const value_type &y) const
  {
    return {field_.add(x.a, y.a), is_unitary() ? FieldElem{} : field_.add(x.b, y.b)};
  }
  value_type sub(const value_type &x, const value_type &y) const
  {
    return {field_.sub(x.a, y.a), is_unitary() ? FieldElem{} : field_.sub(x.b, y.b)};
  }
  value_type neg(const value_type &x) const
  {
    return {field_.neg(x.a), is_unitary() ? FieldElem{} : field_.neg(x.b)};
  }
  value_type mul(const value_type &x, const value_type &y) const
  {
    return {field_.mul(x.a, y.a), is_unitary() ? FieldElem{} : field_.mul(x.b, y.b)};
  }

  bool is_unit(const value_type &x) const
  {
    return !field_.is_zero(x.a) && (is_unitary() || !field_.is_zero(x.b));
  }

  value_type inv(const value_type &x) const
  {
    if (field_.is_zero(x.a))
      throw ZeroDivisorError("inverse of a zero divisor: component 0 vanishes", 0);
    if (is_unitary())
      return {field_.inv(x.a), {}};
    if (field_.is_zero(x.b))
      throw ZeroDivisorError("inverse of a zero divisor: component 1 vanishes", 1);
    return {field_.inv(x.a), field_.inv(x.b)};
  }

  /// Integer powers; negative exponents require a unit.
  value_type pow(value_type x, std::int64_t e) const
  {
    if (e < 0) {
      x = inv(x);
      e = -e;
    }
    value_type r = one();
    while (e > 0) {
      if (e & 1)
        r = mul(r, x);
      x = mul(x, x);
      e >>= 1;
    }
    return r;
  }

  value_type involve(const value_type &x) const
  {
    if (is_unitary())
      return {field_.frobenius(x.a, half_degree_), {}};
    return {x.b, x.a};
  }

  value_type norm(const value_type &x) const { return mul(x, involve(x)); }
  value_type trace(const value_type &x) const { return add(x, involve(x)); }

  bool is_fixed(const value_type &x) const { return involve(x) == x; }
  bool is_imaginary(const value_type &x) const { return involve(x) == neg(x); }

  /// Coordinates over F_p, component 0 first.
  std::vector<std::uint32_t> to_prime_coords(const value_type &x) const
  {
    std::vector<std::uint32_t> out = field_.digits(x.a);
    if (!is_unitary()) {
      auto second = field_.digits(x.b);
      out.insert(out.end(), second.begin(), second.end());
    }
    return out;
  }

  value_type from_prime_coords(const std::uint32_t *coords) const
  {
    const std::size_t m = field_.degree();
    AlgElem x;
    for (std::size_t i = 0; i < m; ++i)
      x.a.c[i] = static_cast<std::uint16_t>(coords[i]);
    if (!is_unitary())
      for (std::size_t i = 0; i < m; ++i)
        x.b.c[i] = static_cast<std::uint16_t>(coords[m + i]);
    return x;
  }

  /// Number of elements, when it fits a machine word.
  std::uint64_t element_count() const
  {
    const std::uint64_t per = field_.order_u64();
    if (is_unitary())
      return per;
    if (per > (std::uint64_t{1} << 31))
      throw std::overflow_error("algebra too large to enumerate");
    return per * per;
  }

  /// Elements in canonical order: the integer whose little-endian base-p
  /// digits are the prime-field coordinates.
  value_type element_at(std::uint64_t index) const
  {
    if (is_unitary())
      return {field_.from_index(index), {}};
    const std::uint64_t per = field_.order_u64();
    return {field_.from_index(index % per), field_.from_index(index / per)};
  }

  std::uint64_t index_of(const value_type &x) const
  {
    if (is_unitary())
      return field_.index(x.a);
    return field_.index(x.a) + field_.order_u64() * field_.index(x.b);
  }

  template <class Rng>
  value_type random(Rng &rng) const
  {
    AlgElem x{field_.random(rng), {}};
    if (!is_unitary())
      x.b = field_.random(rng);
    return x;
  }

  template <class Rng>
  value_type random_unit(Rng &rng) const
  {
    for (;;) {
      value_type x = random(rng);
      if (is_unit(x))
        return x;
    }
  }

private:
  SplittingData sd_;
  ExtField field_;
  std::size_t half_degree_ = 0;
  AlgElem zeta_;
};

inline std::shared_ptr<const InvolutiveAlgebra> build_algebra(const SplittingData &sd)
{
  return std::make_shared<const InvolutiveAlgebra>(sd);
}

inline std::shared_ptr<const InvolutiveAlgebra> build_algebra(std::uint32_t p, std::uint32_t l)
{
  return build_algebra(splitting_data(p, l));
}

/// The l-th roots of unity as successive powers of zeta.
inline std::vector<AlgElem> roots_of_unity(const InvolutiveAlgebra &alg)
{
  std::vector<AlgElem> out;
  AlgElem z = alg.one();
  for (std::uint32_t k = 0; k < alg.l(); ++k) {
    out.push_back(z);
    z = alg.mul(z, alg.zeta());
  }
  return out;
}

} // namespace bigmono::arith

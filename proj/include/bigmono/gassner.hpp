#pragma once

// The colored, specialized reduced Gassner representation of braids on n+1
// strands over an involutive algebra, together with the invariant structure
// it carries: the skew-hermitian form, invariant vectors, spinning, and the
// transvection produced by commuting sigma_0^2 with a full twist.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "bigmono/arith/algebra.hpp"
#include "bigmono/braid.hpp"
#include "bigmono/linalg.hpp"

namespace bigmono::gassner {

using arith::AlgElem;
using arith::FieldElem;
using arith::InvolutiveAlgebra;
using AlgMatrix = linalg::Matrix<AlgElem>;
using AlgVector = std::vector<AlgElem>;
using FieldMatrix = linalg::Matrix<FieldElem>;
using FieldVector = std::vector<FieldElem>;

// ---------------------------------------------------------------------------
// Matrices over the algebra, handled componentwise where a field is needed.

inline AlgMatrix involve_transpose(const InvolutiveAlgebra &alg, const AlgMatrix &m)
{
  AlgMatrix out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(j, i) = alg.involve(m(i, j));
  return out;
}

inline FieldMatrix component(const InvolutiveAlgebra &alg, const AlgMatrix &m, std::size_t c)
{
  FieldMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(i, j) = alg.component(m(i, j), c);
  return out;
}

inline FieldVector component(const InvolutiveAlgebra &alg, const AlgVector &v, std::size_t c)
{
  FieldVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out[i] = alg.component(v[i], c);
  return out;
}

inline AlgVector combine(const InvolutiveAlgebra &alg, const std::vector<FieldVector> &parts)
{
  AlgVector out(parts.front().size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = alg.is_unitary() ? AlgElem{parts[0][i], {}} : AlgElem{parts[0][i], parts[1][i]};
  return out;
}

inline AlgMatrix combine(const InvolutiveAlgebra &alg, const std::vector<FieldMatrix> &parts)
{
  AlgMatrix out(parts.front().rows(), parts.front().cols());
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j)
      out(i, j) = alg.is_unitary() ? AlgElem{parts[0](i, j), {}}
                                   : AlgElem{parts[0](i, j), parts[1](i, j)};
  return out;
}

inline std::vector<std::size_t> component_ranks(const InvolutiveAlgebra &alg, const AlgMatrix &m)
{
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < alg.component_count(); ++c)
    out.push_back(linalg::rank(alg.field(), component(alg, m, c)));
  return out;
}

inline std::optional<AlgMatrix> inverse(const InvolutiveAlgebra &alg, const AlgMatrix &m)
{
  std::vector<FieldMatrix> parts;
  for (std::size_t c = 0; c < alg.component_count(); ++c) {
    auto inv = linalg::inverse(alg.field(), component(alg, m, c));
    if (!inv)
      return std::nullopt;
    parts.push_back(std::move(*inv));
  }
  return combine(alg, parts);
}

inline AlgElem determinant(const InvolutiveAlgebra &alg, const AlgMatrix &m)
{
  const FieldElem d0 = linalg::determinant(alg.field(), component(alg, m, 0));
  if (alg.is_unitary())
    return {d0, {}};
  return {d0, linalg::determinant(alg.field(), component(alg, m, 1))};
}

/// A submodule of E^n given by per-component bases. When every component
/// has the same dimension the bases are zipped into algebra vectors.
struct ModuleBasis
{
  std::vector<std::size_t> component_dims;
  std::vector<AlgVector> basis;

  bool uniform() const
  {
    return std::adjacent_find(component_dims.begin(), component_dims.end(),
                              std::not_equal_to<>()) == component_dims.end();
  }
  std::size_t dimension() const { return uniform() ? component_dims.front() : 0; }
};

/// {x : m x = 0}
inline ModuleBasis kernel(const InvolutiveAlgebra &alg, const AlgMatrix &m)
{
  ModuleBasis out;
  std::vector<std::vector<FieldVector>> per;
  for (std::size_t c = 0; c < alg.component_count(); ++c) {
    per.push_back(linalg::nullspace(alg.field(), component(alg, m, c)));
    out.component_dims.push_back(per.back().size());
  }
  if (out.uniform())
    for (std::size_t k = 0; k < out.component_dims.front(); ++k) {
      std::vector<FieldVector> parts;
      for (auto &b : per)
        parts.push_back(b[k]);
      out.basis.push_back(combine(alg, parts));
    }
  return out;
}

/// True when u and w are nonzero and span the same line in every component.
inline bool proportional(const InvolutiveAlgebra &alg, const AlgVector &u, const AlgVector &w)
{
  for (std::size_t c = 0; c < alg.component_count(); ++c) {
    auto uc = component(alg, u, c), wc = component(alg, w, c);
    if (linalg::is_zero_vector(alg.field(), uc) || linalg::is_zero_vector(alg.field(), wc))
      return false;
    FieldMatrix m(2, uc.size());
    for (std::size_t i = 0; i < uc.size(); ++i) {
      m(0, i) = uc[i];
      m(1, i) = wc[i];
    }
    if (linalg::rank(alg.field(), m) != 1)
      return false;
  }
  return true;
}

inline AlgVector basis_vector(const InvolutiveAlgebra &alg, std::size_t n, std::size_t i)
{
  AlgVector v(n, alg.zero());
  v[i] = alg.one();
  return v;
}

// ---------------------------------------------------------------------------
// Context and colored evaluation.

/// Colors t_i = zeta^{k_i} on strands 0..n; the representation has dimension n.
class GassnerContext
{
public:
  GassnerContext(std::shared_ptr<const InvolutiveAlgebra> alg, std::vector<std::uint32_t> exponents)
    : alg_(std::move(alg)), exponents_(std::move(exponents))
  {
    if (!alg_)
      throw std::invalid_argument("null algebra");
    if (exponents_.size() < 3)
      throw std::invalid_argument("need at least three strands (n >= 2)");
    for (auto k : exponents_)
      if (k == 0 || k >= alg_->l())
        throw std::invalid_argument("monodromy exponents must lie in 1..l-1, got " +
                                    std::to_string(k));
    zeta_powers_ = arith::roots_of_unity(*alg_);
  }

  const InvolutiveAlgebra &algebra() const { return *alg_; }
  const std::shared_ptr<const InvolutiveAlgebra> &algebra_ptr() const { return alg_; }
  const std::vector<std::uint32_t> &exponents() const { return exponents_; }
  std::size_t strands() const { return exponents_.size(); }
  std::size_t dimension() const { return exponents_.size() - 1; }

  const AlgElem &zeta_power(std::uint64_t k) const { return zeta_powers_[k % alg_->l()]; }
  const AlgElem &color(std::size_t i) const { return zeta_power(exponents_[i]); }

  std::uint32_t exponent_sum_mod_l() const
  {
    std::uint64_t s = 0;
    for (auto k : exponents_)
      s += k;
    return static_cast<std::uint32_t>(s % alg_->l());
  }
  /// t_0 ... t_n == 1, i.e. the form is degenerate.
  bool product_is_one() const { return exponent_sum_mod_l() == 0; }

private:
  std::shared_ptr<const InvolutiveAlgebra> alg_;
  std::vector<std::uint32_t> exponents_;
  std::vector<AlgElem> zeta_powers_;
};

template <class Rng>
std::vector<std::uint32_t> random_exponents(Rng &rng, std::uint32_t l, std::size_t strands)
{
  std::uniform_int_distribution<std::uint32_t> dist(1, l - 1);
  std::vector<std::uint32_t> k(strands);
  for (auto &x : k)
    x = dist(rng);
  return k;
}

/// Matrix of a braid word together with the strand permutation. `source`
/// holds the color exponents the word was evaluated from.
struct ColoredElement
{
  AlgMatrix matrix;
  braid::Permutation perm;
  std::vector<std::uint32_t> source;

  std::vector<std::uint32_t> target() const
  {
    std::vector<std::uint32_t> out(source.size());
    for (std::size_t s = 0; s < source.size(); ++s)
      out[s] = source[perm[s]];
    return out;
  }

  bool operator==(const ColoredElement &) const = default;
};

/// The single crossing sigma_i with color x in slot i: identity except the
/// rows (1,0,0),(x,-x,1),(0,0,1) on positions i-1, i, i+1 clipped to [0, n-1].
inline AlgMatrix crossing_matrix(const InvolutiveAlgebra &alg, std::size_t n, std::size_t i,
                                 const AlgElem &x)
{
  AlgMatrix m = linalg::identity(alg, n);
  if (i > 0)
    m(i, i - 1) = x;
  m(i, i) = alg.neg(x);
  if (i + 1 < n)
    m(i, i + 1) = alg.one();
  return m;
}

/// Inverse of crossing_matrix: row i becomes (1, -1/x, 1/x).
inline AlgMatrix crossing_matrix_inverse(const InvolutiveAlgebra &alg, std::size_t n,
                                         std::size_t i, const AlgElem &x)
{
  const AlgElem xi = alg.inv(x);
  AlgMatrix m = linalg::identity(alg, n);
  if (i > 0)
    m(i, i - 1) = alg.one();
  m(i, i) = alg.neg(xi);
  if (i + 1 < n)
    m(i, i + 1) = xi;
  return m;
}

/// Closed form of sigma_i^2 with colors a, b in slots i, i+1: row i is
/// (a(1-b), ab, 1-a) on positions i-1, i, i+1, clipped.
inline AlgMatrix square_closed_form(const InvolutiveAlgebra &alg, std::size_t n, std::size_t i,
                                    const AlgElem &a, const AlgElem &b)
{
  AlgMatrix m = linalg::identity(alg, n);
  if (i > 0)
    m(i, i - 1) = alg.mul(a, alg.sub(alg.one(), b));
  m(i, i) = alg.mul(a, b);
  if (i + 1 < n)
    m(i, i + 1) = alg.sub(alg.one(), a);
  return m;
}

inline ColoredElement identity_element(const GassnerContext &ctx)
{
  return {linalg::identity(ctx.algebra(), ctx.dimension()),
          braid::identity_permutation(ctx.strands()), ctx.exponents()};
}

/// Product of colored elements; b must start where a ends.
inline ColoredElement compose(const InvolutiveAlgebra &alg, const ColoredElement &a,
                              const ColoredElement &b)
{
  if (b.source != a.target())
    throw std::invalid_argument("colored elements are not composable");
  return {linalg::multiply(alg, a.matrix, b.matrix), braid::compose(a.perm, b.perm), a.source};
}

inline ColoredElement evaluate_word(const braid::BraidWord &w, const GassnerContext &ctx)
{
  if (w.strands() != ctx.strands())
    throw std::invalid_argument("word has " + std::to_string(w.strands()) +
                                " strands, context has " + std::to_string(ctx.strands()));
  const auto &alg = ctx.algebra();
  const std::size_t n = ctx.dimension();
  ColoredElement out = identity_element(ctx);
  std::vector<std::uint32_t> slot = ctx.exponents();
  for (const auto &x : w.letters()) {
    const std::size_t i = x.generator;
    AlgMatrix step = x.inverse ? crossing_matrix_inverse(alg, n, i, ctx.zeta_power(slot[i + 1]))
                               : crossing_matrix(alg, n, i, ctx.zeta_power(slot[i]));
    out.matrix = linalg::multiply(alg, out.matrix, step);
    std::swap(slot[i], slot[i + 1]);
    std::swap(out.perm[i], out.perm[i + 1]);
  }
  return out;
}

/// sigma_i at the context's colors.
inline ColoredElement generator_matrix(const GassnerContext &ctx, std::uint32_t i)
{
  if (i >= ctx.dimension())
    throw std::out_of_range("generator index out of range");
  return evaluate_word(braid::BraidWord(ctx.strands()).append(i), ctx);
}

/// Image of a pure braid; rejects non-pure words.
inline AlgMatrix pure_image(const braid::BraidWord &w, const GassnerContext &ctx)
{
  auto e = evaluate_word(w, ctx);
  if (!braid::is_identity(e.perm))
    throw std::invalid_argument("word is not a pure braid");
  return std::move(e.matrix);
}

inline std::vector<AlgMatrix> square_generator_images(const GassnerContext &ctx)
{
  std::vector<AlgMatrix> out;
  for (std::uint32_t i = 0; i < ctx.dimension(); ++i)
    out.push_back(pure_image(braid::generator_square(i, ctx.strands()), ctx));
  return out;
}

/// Images of the standard generators A_ij of the pure braid group.
inline std::vector<AlgMatrix> pure_generator_images(const GassnerContext &ctx)
{
  std::vector<AlgMatrix> out;
  for (const auto &w : braid::pure_generators(ctx.dimension()))
    out.push_back(pure_image(w, ctx));
  return out;
}

// ---------------------------------------------------------------------------
// Invariant skew-hermitian form.

struct HermitianForm
{
  AlgMatrix gram;
  std::vector<std::size_t> component_ranks;
  ModuleBasis kernel;
  /// Dimension over F_p of the space of invariant skew-hermitian forms.
  std::size_t solution_prime_dim = 0;
  /// "squares" when the sigma_i^2 constraints sufficed, otherwise "pure".
  std::string constraint_set;

  std::size_t rank() const { return component_ranks.front(); }
  bool degenerate() const { return rank() < gram.rows(); }
};

namespace detail {

// Rows of the F_p-linear map G -> M^* G M - G in prime coordinates.
inline void add_invariance_rows(const InvolutiveAlgebra &alg, const AlgMatrix &m,
                                const std::vector<AlgElem> &basis,
                                linalg::EchelonBasis<arith::PrimeField> &rows)
{
  const std::size_t n = m.rows(), D = basis.size();
  const std::size_t unknowns = n * n * D;
  const AlgMatrix ms = involve_transpose(alg, m);
  // block[(i*n + j)*D + t][u] is coordinate t of entry (i, j) for unknown u
  std::vector<std::vector<std::uint32_t>> block(n * n * D, std::vector<std::uint32_t>(unknowns, 0));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t d = 0; d < D; ++d) {
        const std::size_t u = (r * n + c) * D + d;
        for (std::size_t i = 0; i < n; ++i) {
          const AlgElem left = alg.mul(ms(i, r), basis[d]);
          for (std::size_t j = 0; j < n; ++j) {
            AlgElem val = alg.mul(left, m(c, j));
            if (i == r && j == c)
              val = alg.sub(val, basis[d]);
            if (alg.is_zero(val))
              continue;
            const auto coords = alg.to_prime_coords(val);
            for (std::size_t t = 0; t < D; ++t)
              block[(i * n + j) * D + t][u] = coords[t];
          }
        }
      }
  for (auto &row : block)
    rows.insert(row);
}

inline void add_skew_rows(const InvolutiveAlgebra &alg, std::size_t n,
                          const std::vector<AlgElem> &basis,
                          linalg::EchelonBasis<arith::PrimeField> &rows)
{
  const arith::PrimeField &F = alg.field().base();
  const std::size_t D = basis.size();
  const std::size_t unknowns = n * n * D;
  // (G^* + G)_{ij} = involve(G_{ji}) + G_{ij}
  std::vector<std::vector<std::uint32_t>> block(n * n * D, std::vector<std::uint32_t>(unknowns, 0));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t d = 0; d < D; ++d) {
        const std::size_t u = (r * n + c) * D + d;
        const auto direct = alg.to_prime_coords(basis[d]);
        const auto swapped = alg.to_prime_coords(alg.involve(basis[d]));
        for (std::size_t t = 0; t < D; ++t) {
          auto &a = block[(r * n + c) * D + t][u];
          a = F.add(a, direct[t]);
          auto &b = block[(c * n + r) * D + t][u];
          b = F.add(b, swapped[t]);
        }
      }
  for (auto &row : block)
    rows.insert(row);
}

inline std::vector<std::vector<std::uint32_t>> echelon_nullspace(
    const arith::PrimeField &F, const linalg::EchelonBasis<arith::PrimeField> &rows,
    std::size_t unknowns)
{
  linalg::Matrix<std::uint32_t> m(std::max<std::size_t>(rows.dimension(), 1), unknowns, 0);
  for (std::size_t r = 0; r < rows.dimension(); ++r)
    for (std::size_t j = 0; j < unknowns; ++j)
      m(r, j) = rows.rows()[r][j];
  return linalg::nullspace(F, m);
}

} // namespace detail

/// Solves M^* G M = G with G^* = -G over F_p, first for the sigma_i^2 images
/// and, if the solution is not unique up to fixed-field scalars, for all
/// pure generators A_ij.
inline HermitianForm invariant_form(const GassnerContext &ctx)
{
  const auto &alg = ctx.algebra();
  const arith::PrimeField &F = alg.field().base();
  const std::size_t n = ctx.dimension(), D = alg.prime_dim();
  const std::size_t unknowns = n * n * D;

  std::vector<AlgElem> basis;
  for (std::size_t d = 0; d < D; ++d) {
    std::vector<std::uint32_t> e(D, 0);
    e[d] = 1;
    basis.push_back(alg.from_prime_coords(e.data()));
  }

  linalg::EchelonBasis<arith::PrimeField> rows(F, unknowns);
  detail::add_skew_rows(alg, n, basis, rows);
  for (const auto &m : square_generator_images(ctx))
    detail::add_invariance_rows(alg, m, basis, rows);

  HermitianForm form;
  form.constraint_set = "squares";
  auto null = detail::echelon_nullspace(F, rows, unknowns);
  if (null.size() != alg.fixed_prime_dim()) {
    for (const auto &m : pure_generator_images(ctx))
      detail::add_invariance_rows(alg, m, basis, rows);
    form.constraint_set = "pure";
    null = detail::echelon_nullspace(F, rows, unknowns);
  }
  form.solution_prime_dim = null.size();
  if (null.size() != alg.fixed_prime_dim())
    throw std::runtime_error("invariant form space has F_p-dimension " +
                             std::to_string(null.size()) + ", expected " +
                             std::to_string(alg.fixed_prime_dim()));

  form.gram = AlgMatrix(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      form.gram(r, c) = alg.from_prime_coords(null.front().data() + (r * n + c) * D);
  form.component_ranks = component_ranks(alg, form.gram);
  form.kernel = kernel(alg, form.gram);
  return form;
}

/// True when M^* G M == G.
inline bool preserves_form(const InvolutiveAlgebra &alg, const AlgMatrix &m, const AlgMatrix &gram)
{
  return linalg::multiply(alg, linalg::multiply(alg, involve_transpose(alg, m), gram), m) == gram;
}

/// Candidate closed forms for the invariant/kernel vector:
/// inclusive x_i = 1 - t_0...t_i, exclusive x_i = 1 - t_0...t_{i-1}.
inline AlgVector kernel_closed_form(const GassnerContext &ctx, bool inclusive)
{
  const auto &alg = ctx.algebra();
  AlgVector v(ctx.dimension());
  std::uint64_t partial = 0;
  for (std::size_t i = 0; i < ctx.dimension(); ++i) {
    if (inclusive)
      partial += ctx.exponents()[i];
    v[i] = alg.sub(alg.one(), ctx.zeta_power(partial));
    if (!inclusive)
      partial += ctx.exponents()[i];
  }
  return v;
}

/// Common fixed space of the sigma_i^2 images.
inline ModuleBasis invariant_vectors(const GassnerContext &ctx)
{
  const auto &alg = ctx.algebra();
  const std::size_t n = ctx.dimension();
  const auto gens = square_generator_images(ctx);
  AlgMatrix stacked(n * gens.size(), n);
  const AlgMatrix id = linalg::identity(alg, n);
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        stacked(g * n + i, j) = alg.sub(gens[g](i, j), id(i, j));
  return kernel(alg, stacked);
}

// ---------------------------------------------------------------------------
// Spinning.

enum class SpinMode
{
  Algebra,
  PrimeField
};

struct SpanResult
{
  /// Algebra mode: dimension of each component over F_q (or F_{q^2}).
  /// Prime-field mode: a single entry, the dimension over F_p.
  std::vector<std::size_t> dims;
  std::size_t ambient = 0;

  bool full() const
  {
    return std::all_of(dims.begin(), dims.end(), [&](std::size_t d) { return d == ambient; });
  }
};

/// Smallest subspace containing v and stable under the pure generators and
/// their inverses.
inline SpanResult spin_span(const GassnerContext &ctx, const AlgVector &v, SpinMode mode)
{
  const auto &alg = ctx.algebra();
  if (v.size() != ctx.dimension())
    throw std::invalid_argument("vector has wrong dimension");
  if (linalg::is_zero_vector(alg, v))
    throw std::invalid_argument("cannot spin the zero vector");

  std::vector<AlgMatrix> gens = pure_generator_images(ctx);
  const std::size_t count = gens.size();
  for (std::size_t g = 0; g < count; ++g)
    gens.push_back(*inverse(alg, gens[g]));

  SpanResult out;
  if (mode == SpinMode::Algebra) {
    out.ambient = ctx.dimension();
    for (std::size_t c = 0; c < alg.component_count(); ++c) {
      std::vector<FieldMatrix> cg;
      for (const auto &g : gens)
        cg.push_back(component(alg, g, c));
      linalg::EchelonBasis<arith::ExtField> span(alg.field(), ctx.dimension());
      std::vector<FieldVector> queue;
      FieldVector start = component(alg, v, c);
      if (span.insert(start))
        queue.push_back(start);
      while (!queue.empty()) {
        FieldVector w = std::move(queue.back());
        queue.pop_back();
        for (const auto &g : cg) {
          FieldVector gw = linalg::apply(alg.field(), g, w);
          if (span.insert(gw))
            queue.push_back(std::move(gw));
        }
      }
      out.dims.push_back(span.dimension());
    }
    return out;
  }

  const arith::PrimeField &F = alg.field().base();
  const std::size_t D = alg.prime_dim();
  out.ambient = ctx.dimension() * D;
  auto flatten = [&](const AlgVector &x) {
    std::vector<std::uint32_t> flat;
    for (const auto &e : x) {
      auto co = alg.to_prime_coords(e);
      flat.insert(flat.end(), co.begin(), co.end());
    }
    return flat;
  };
  linalg::EchelonBasis<arith::PrimeField> span(F, out.ambient);
  std::vector<AlgVector> queue;
  if (span.insert(flatten(v)))
    queue.push_back(v);
  while (!queue.empty()) {
    AlgVector w = std::move(queue.back());
    queue.pop_back();
    for (const auto &g : gens) {
      AlgVector gw = linalg::apply(alg, g, w);
      if (span.insert(flatten(gw)))
        queue.push_back(std::move(gw));
    }
  }
  out.dims.push_back(span.dimension());
  return out;
}

// ---------------------------------------------------------------------------
// Transvections.

struct Transvection
{
  AlgVector direction;
  /// Row vector phi with M - 1 = direction * phi.
  AlgVector functional;
  AlgMatrix matrix;
};

/// M is a transvection when, in every component, M - 1 has rank one and
/// squares to zero.
inline std::optional<Transvection> is_transvection(const InvolutiveAlgebra &alg, const AlgMatrix &m)
{
  const std::size_t n = m.rows();
  const AlgMatrix nil = linalg::subtract(alg, m, linalg::identity(alg, n));
  std::vector<FieldVector> dirs, funcs;
  for (std::size_t c = 0; c < alg.component_count(); ++c) {
    const FieldMatrix nc = component(alg, nil, c);
    if (linalg::rank(alg.field(), nc) != 1)
      return std::nullopt;
    if (!linalg::is_zero_matrix(alg.field(), linalg::multiply(alg.field(), nc, nc)))
      return std::nullopt;
    std::size_t col = 0;
    while (linalg::is_zero_vector(alg.field(), nc.col(col)))
      ++col;
    FieldVector dir = nc.col(col);
    std::size_t row = 0;
    while (alg.field().is_zero(dir[row]))
      ++row;
    const FieldElem scale = alg.field().inv(dir[row]);
    FieldVector func = nc.row(row);
    for (auto &x : func)
      x = alg.field().mul(x, scale);
    dirs.push_back(std::move(dir));
    funcs.push_back(std::move(func));
  }
  return Transvection{combine(alg, dirs), combine(alg, funcs), m};
}

/// Result of evaluating [sigma_0^2, D'^2] where D' is the half twist on
/// strands 1..n.
struct CommutatorReport
{
  AlgMatrix commutator;
  std::optional<Transvection> transvection;
  bool nontrivial = false;
  bool direction_spans_kernel = false;
  /// The kernel vector has a unit eps_0 coefficient, so <eps_1..eps_{n-1}>
  /// is a complement and the functional is determined there.
  bool complement_is_valid = false;
  /// xi(eps_j) for j = 1..n-1, relative to v = sum (1 - t_0...t_i) eps_i.
  std::vector<AlgElem> functional_values;
  AlgElem quoted_value{};
  bool quoted_value_matches = false;
  /// The same formula with strands labelled from 1: xi(eps_1) against
  /// t_0^-1 t_1^-1 (1 - t_0).
  AlgElem shifted_value{};
  bool shifted_value_matches = false;
  /// Same functional for the reversed commutator convention a^-1 b^-1 a b.
  std::vector<AlgElem> reversed_functional_values;
  bool reversed_quoted_value_matches = false;
  /// With the twist taken over all strands it is central, so the commutator is trivial.
  bool full_twist_commutator_trivial = false;
  std::vector<std::string> findings;
};

namespace detail {

inline std::vector<AlgElem> functional_along(const InvolutiveAlgebra &alg, const AlgMatrix &m,
                                             const AlgVector &v, bool &proportional_ok)
{
  const std::size_t n = m.rows();
  const AlgElem v0inv = alg.inv(v[0]);
  std::vector<AlgElem> values;
  proportional_ok = true;
  for (std::size_t j = 1; j < n; ++j) {
    AlgVector col(n);
    for (std::size_t i = 0; i < n; ++i)
      col[i] = alg.sub(m(i, j), i == j ? alg.one() : alg.zero());
    const AlgElem xi = alg.mul(col[0], v0inv);
    for (std::size_t i = 0; i < n; ++i)
      if (!(alg.mul(xi, v[i]) == col[i]))
        proportional_ok = false;
    values.push_back(xi);
  }
  return values;
}

} // namespace detail

inline CommutatorReport prop21_commutator(const GassnerContext &ctx)
{
  const auto &alg = ctx.algebra();
  if (!ctx.product_is_one())
    throw std::invalid_argument("commutator transvection requires t_0 ... t_n = 1");
  const AlgElem one_minus_t0 = alg.sub(alg.one(), ctx.color(0));
  if (!alg.is_unit(one_minus_t0))
    throw std::invalid_argument("commutator transvection requires 1 - t_0 to be a unit");

  const std::size_t strands = ctx.strands(), n = ctx.dimension();
  const braid::BraidWord a = braid::generator_square(0, strands);
  const braid::BraidWord twist =
      braid::power(braid::half_twist(1, static_cast<std::uint32_t>(n - 1), strands), 2);

  CommutatorReport rep;
  rep.commutator = pure_image(braid::commutator(a, twist), ctx);
  rep.nontrivial = !(rep.commutator == linalg::identity(alg, n));
  rep.transvection = is_transvection(alg, rep.commutator);

  const AlgVector v = kernel_closed_form(ctx, true);
  const HermitianForm form = invariant_form(ctx);
  rep.complement_is_valid = alg.is_unit(v[0]);
  if (rep.transvection) {
    const bool kernel_line = form.kernel.dimension() == 1;
    rep.direction_spans_kernel =
        kernel_line && proportional(alg, rep.transvection->direction, form.kernel.basis.front());
  }
  if (!rep.nontrivial)
    rep.findings.push_back("commutator is trivial at these parameters");
  else if (!rep.transvection)
    rep.findings.push_back("commutator is not a transvection");
  else if (!rep.direction_spans_kernel)
    rep.findings.push_back("transvection direction is not the form kernel");

  if (n >= 3) {
    const AlgElem t1 = ctx.color(1), t2 = ctx.color(2);
    rep.quoted_value = alg.mul(alg.mul(alg.inv(t1), alg.inv(t2)), alg.sub(alg.one(), t1));
  }
  {
    const AlgElem t0 = ctx.color(0), t1 = ctx.color(1);
    rep.shifted_value = alg.mul(alg.mul(alg.inv(t0), alg.inv(t1)), alg.sub(alg.one(), t0));
  }
  if (rep.complement_is_valid && rep.transvection) {
    bool ok = false;
    rep.functional_values = detail::functional_along(alg, rep.commutator, v, ok);
    if (!ok)
      rep.findings.push_back("columns of M - 1 are not multiples of the kernel vector");
    const AlgMatrix reversed =
        pure_image(braid::commutator(braid::invert(a), braid::invert(twist)), ctx);
    rep.reversed_functional_values = detail::functional_along(alg, reversed, v, ok);
    rep.shifted_value_matches = rep.functional_values[0] == rep.shifted_value;
    if (!rep.shifted_value_matches)
      rep.findings.push_back("xi(eps_1) differs from t_0^-1 t_1^-1 (1 - t_0)");
    if (n >= 3) {
      rep.quoted_value_matches = rep.functional_values[1] == rep.quoted_value;
      rep.reversed_quoted_value_matches = rep.reversed_functional_values[1] == rep.quoted_value;
      if (!rep.quoted_value_matches && !rep.reversed_quoted_value_matches)
        rep.findings.push_back(
            "with zero-based labels xi(eps_2) is not t_1^-1 t_2^-1 (1 - t_1) under either "
            "commutator convention");
    }
  }

  const braid::BraidWord full =
      braid::power(braid::half_twist(0, static_cast<std::uint32_t>(n - 1), strands), 2);
  rep.full_twist_commutator_trivial =
      pure_image(braid::commutator(a, full), ctx) == linalg::identity(alg, n);
  return rep;
}

// ---------------------------------------------------------------------------
// Determinants.

struct DeterminantSubgroup
{
  /// det of sigma_i^2, i = 0..n-1.
  std::vector<AlgElem> generators;
  /// Whether each generator equals t_i t_{i+1}.
  bool generators_match_closed_form = true;
  /// The generated subgroup, in canonical element order.
  std::vector<AlgElem> elements;
  bool equals_mu_l = false;
};

inline DeterminantSubgroup determinant_subgroup(const GassnerContext &ctx)
{
  const auto &alg = ctx.algebra();
  DeterminantSubgroup out;
  const auto gens = square_generator_images(ctx);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    out.generators.push_back(determinant(alg, gens[i]));
    if (!(out.generators.back() == alg.mul(ctx.color(i), ctx.color(i + 1))))
      out.generators_match_closed_form = false;
  }
  std::vector<AlgElem> elems{alg.one()};
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (const auto &g : out.generators) {
      AlgElem x = alg.mul(elems[k], g);
      if (std::find(elems.begin(), elems.end(), x) == elems.end())
        elems.push_back(x);
    }
  std::sort(elems.begin(), elems.end(), [&](const AlgElem &x, const AlgElem &y) {
    return alg.index_of(x) < alg.index_of(y);
  });
  out.elements = std::move(elems);
  const auto mu = arith::roots_of_unity(alg);
  out.equals_mu_l = out.elements.size() == mu.size() &&
                    std::all_of(mu.begin(), mu.end(), [&](const AlgElem &z) {
                      return std::find(out.elements.begin(), out.elements.end(), z) !=
                             out.elements.end();
                    });
  return out;
}

} // namespace bigmono::gassner

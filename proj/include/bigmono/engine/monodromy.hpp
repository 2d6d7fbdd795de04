#pragma once

// Turns monodromy images over the involutive algebra into engine matrix
// groups and runs the group-level checks: image order and containment of
// the transvection radical.

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bigmono/engine/group.hpp"
#include "bigmono/engine/stabilizer_chain.hpp"
#include "bigmono/engine/table_field.hpp"
#include "bigmono/gassner.hpp"
#include "bigmono/unitary.hpp"

namespace bigmono::engine {

using gassner::AlgMatrix;

enum class EmbeddingMode
{
  /// Unitary algebra: matrices over F_{q^2} as they are.
  Direct,
  /// Split algebra, nondegenerate form: the first component determines the second.
  FirstComponent,
  /// Split algebra, degenerate form: block-diagonal pair action.
  Pair
};

inline const char *to_string(EmbeddingMode m)
{
  switch (m) {
  case EmbeddingMode::Direct:
    return "direct";
  case EmbeddingMode::FirstComponent:
    return "first-component";
  case EmbeddingMode::Pair:
    return "pair";
  }
  return "?";
}

struct EmbeddedGroup
{
  MatrixGroup group;
  EmbeddingMode mode = EmbeddingMode::Direct;
};

/// M_2 == (G_1^T)^{-1} (M_1^{-1})^T G_1^T for a split-case isometry.
inline bool dual_determined(const arith::InvolutiveAlgebra &alg, const AlgMatrix &m,
                            const AlgMatrix &gram)
{
  if (alg.is_unitary())
    throw std::invalid_argument("dual determination concerns the split algebra");
  const auto &F = alg.field();
  const auto g1t = linalg::transpose(gassner::component(alg, gram, 0));
  const auto g1t_inv = linalg::inverse(F, g1t);
  const auto m1_inv = linalg::inverse(F, gassner::component(alg, m, 0));
  if (!g1t_inv || !m1_inv)
    return false;
  const auto predicted =
      linalg::multiply(F, linalg::multiply(F, *g1t_inv, linalg::transpose(*m1_inv)), g1t);
  return predicted == gassner::component(alg, m, 1);
}

inline std::shared_ptr<const TableField> table_field(const arith::InvolutiveAlgebra &alg)
{
  return std::make_shared<const TableField>(alg.field());
}

/// Embeds images into an engine group. For the split algebra with a
/// nondegenerate form every image must pass the dual-determination check;
/// a failure throws std::logic_error.
inline EmbeddedGroup embed(const arith::InvolutiveAlgebra &alg, const std::vector<AlgMatrix> &images,
                           const gassner::HermitianForm &form,
                           std::shared_ptr<const TableField> field = nullptr)
{
  if (!field)
    field = table_field(alg);
  const std::size_t n = form.gram.rows();
  EmbeddedGroup out;
  if (alg.is_unitary())
    out.mode = EmbeddingMode::Direct;
  else
    out.mode = form.degenerate() ? EmbeddingMode::Pair : EmbeddingMode::FirstComponent;
  const std::size_t dim = out.mode == EmbeddingMode::Pair ? 2 * n : n;
  out.group.ops = std::make_shared<const MatrixOps>(field, dim);
  const auto &F = alg.field();
  for (const auto &m : images) {
    if (out.mode == EmbeddingMode::FirstComponent && !dual_determined(alg, m, form.gram))
      throw std::logic_error("second component is not determined by the first");
    Element e{};
    for (std::size_t c = 0; c < (out.mode == EmbeddingMode::Pair ? 2u : 1u); ++c)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          e[(c * n + i) * dim + c * n + j] =
              static_cast<std::uint16_t>(F.index(alg.component(m(i, j), c)));
    out.group.generators.push_back(e);
  }
  return out;
}

inline Element embed_element(const arith::InvolutiveAlgebra &alg, const AlgMatrix &m,
                             const EmbeddedGroup &g)
{
  const std::size_t n = m.rows();
  const std::size_t dim = g.group.ops->dim();
  Element e{};
  for (std::size_t c = 0; c < (g.mode == EmbeddingMode::Pair ? 2u : 1u); ++c)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        e[(c * n + i) * dim + c * n + j] =
            static_cast<std::uint16_t>(alg.field().index(alg.component(m(i, j), c)));
  return e;
}

// ---------------------------------------------------------------------------
// Image order.

struct ImageResult
{
  bool overflow = false;
  std::string overflow_reason;
  BigInt order;
  std::vector<std::uint64_t> orbit_sizes;
  std::size_t strong_generators = 0;
  std::uint64_t schreier_checked = 0;
  EmbeddingMode mode = EmbeddingMode::Direct;
  std::size_t generator_count = 0;
};

inline EmbeddedGroup monodromy_group(const gassner::GassnerContext &ctx,
                                     const gassner::HermitianForm &form)
{
  return embed(ctx.algebra(), gassner::pure_generator_images(ctx), form);
}

inline ImageResult image_order(const gassner::GassnerContext &ctx, const ChainOptions &opt = {})
{
  const gassner::HermitianForm form = gassner::invariant_form(ctx);
  ImageResult res;
  const EmbeddedGroup g = monodromy_group(ctx, form);
  res.mode = g.mode;
  res.generator_count = g.group.generators.size();
  try {
    StabilizerChain chain(g.group, opt);
    res.order = chain.order();
    res.orbit_sizes = chain.orbit_sizes();
    res.strong_generators = chain.strong_generator_count();
    res.schreier_checked = chain.schreier_generators_checked();
  } catch (const ChainOverflow &e) {
    res.overflow = true;
    res.overflow_reason = e.what();
  }
  return res;
}

// ---------------------------------------------------------------------------
// Radical containment.

struct RadicalContainment
{
  std::uint64_t tested = 0;
  std::uint64_t contained = 0;
  bool exhaustive = false;
  bool commutator_contained = false;
  /// Split case: contained elements whose functional vanishes in one
  /// component, and whether the contained set looks like the graph of an
  /// isomorphism between the two components.
  std::uint64_t contained_first_only = 0;
  std::uint64_t contained_second_only = 0;
  std::uint64_t tested_first_only = 0;
  std::uint64_t tested_second_only = 0;
  bool graph_pattern = false;
  BigInt group_order;
  std::vector<std::string> findings;

  bool full() const { return contained == tested; }
};

/// Tests every radical element (when there are at most `exhaustive_limit`)
/// or a random sample together with a spanning set, for membership in the
/// monodromy image of a degenerate context.
template <class Rng>
RadicalContainment radical_containment(const gassner::GassnerContext &ctx, Rng &rng,
                                       std::uint64_t exhaustive_limit = 200'000,
                                       std::size_t samples = 2000, const ChainOptions &opt = {})
{
  const auto &alg = ctx.algebra();
  if (!ctx.product_is_one())
    throw std::invalid_argument("radical containment needs t_0 ... t_n = 1");
  const gassner::HermitianForm form = gassner::invariant_form(ctx);
  const unitary::RadicalDescription rad = unitary::radical_transvections(ctx, form);
  const EmbeddedGroup g = monodromy_group(ctx, form);
  StabilizerChain chain(g.group, opt);

  RadicalContainment rep;
  rep.group_order = chain.order();
  const std::size_t params = rad.parameters;
  const std::uint64_t per = alg.element_count();
  std::uint64_t total = 1;
  bool small = true;
  for (std::size_t i = 0; i < params; ++i) {
    if (total > exhaustive_limit / per) {
      small = false;
      break;
    }
    total *= per;
  }
  rep.exhaustive = small;

  auto test = [&](const gassner::AlgVector &values) {
    const AlgMatrix t = rad.element(alg, values);
    const bool in = chain.contains(embed_element(alg, t, g));
    ++rep.tested;
    rep.contained += in;
    if (!alg.is_unitary()) {
      bool zero0 = true, zero1 = true;
      for (const auto &v : values) {
        zero0 = zero0 && alg.field().is_zero(v.a);
        zero1 = zero1 && alg.field().is_zero(v.b);
      }
      if (zero1 && !zero0) {
        ++rep.tested_first_only;
        rep.contained_first_only += in;
      }
      if (zero0 && !zero1) {
        ++rep.tested_second_only;
        rep.contained_second_only += in;
      }
    }
  };

  if (small) {
    gassner::AlgVector values(params, alg.zero());
    std::vector<std::uint64_t> digits(params, 0);
    for (std::uint64_t k = 0; k < total; ++k) {
      for (std::size_t i = 0; i < params; ++i)
        values[i] = alg.element_at(digits[i]);
      test(values);
      for (std::size_t i = 0; i < params && ++digits[i] == per; ++i)
        digits[i] = 0;
    }
  } else {
    // spanning set over F_p, then random elements
    for (std::size_t i = 0; i < params; ++i)
      for (std::size_t t = 0; t < alg.prime_dim(); ++t) {
        gassner::AlgVector values(params, alg.zero());
        std::vector<std::uint32_t> e(alg.prime_dim(), 0);
        e[t] = 1;
        values[i] = alg.from_prime_coords(e.data());
        test(values);
      }
    for (std::size_t s = 0; s < samples; ++s) {
      gassner::AlgVector values(params);
      for (auto &v : values)
        v = alg.random(rng);
      test(values);
    }
  }

  if (!alg.is_unit(alg.sub(alg.one(), ctx.color(0)))) {
    rep.findings.push_back("1 - t_0 is not a unit; commutator check skipped");
  } else {
    const auto comm = gassner::prop21_commutator(ctx);
    rep.commutator_contained = rad.contains(alg, comm.commutator) &&
                               chain.contains(embed_element(alg, comm.commutator, g));
  }
  if (!alg.is_unitary() && !rep.full()) {
    rep.graph_pattern = rep.contained_first_only == 0 && rep.contained_second_only == 0 &&
                        rep.contained > 1;
    rep.findings.push_back(rep.graph_pattern
                               ? "radical intersection has the graph-of-an-isomorphism pattern"
                               : "radical is only partially contained");
  }
  if (alg.is_unitary() && !rep.full())
    rep.findings.push_back("radical is not contained in the image");
  return rep;
}

} // namespace bigmono::engine

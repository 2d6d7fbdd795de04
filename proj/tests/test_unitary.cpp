#include <random>

#include <gtest/gtest.h>

#include "bigmono/unitary.hpp"
#include "oracles.hpp"

using namespace bigmono;
using namespace bigmono::unitary;

TEST(ClassicalOrders, MatchProductFormulas)
{
  for (unsigned q : {3u, 5u, 7u, 9u, 11u, 25u, 27u})
    for (unsigned m = 1; m <= 6; ++m) {
      EXPECT_EQ(classical_group_order(ClassicalKind::SL, m, q), oracle::sl_order(m, q));
      EXPECT_EQ(classical_group_order(ClassicalKind::SU, m, q), oracle::su_order(m, q));
    }
  EXPECT_EQ(classical_group_order(ClassicalKind::Sp, 2, 7), oracle::sl_order(2, 7));
  EXPECT_THROW(classical_group_order(ClassicalKind::SL, 2, 4), std::invalid_argument);
  EXPECT_THROW(classical_group_order(ClassicalKind::Sp, 3, 5), std::invalid_argument);
}

TEST(ClassicalOrders, KnownValues)
{
  EXPECT_EQ(classical_group_order(ClassicalKind::SL, 2, 5), 120);
  EXPECT_EQ(classical_group_order(ClassicalKind::SU, 2, 3), 24);
  EXPECT_EQ(classical_group_order(ClassicalKind::SU, 3, 5), 378000);
  EXPECT_EQ(classical_group_order(ClassicalKind::SU, 4, 5), BigInt("29484000000"));
  EXPECT_EQ(classical_group_order(ClassicalKind::SL, 3, 11), 212427600);
}

TEST(Subsequence, CertificatesAreValidAndAgreeWithExhaustiveSearch)
{
  std::mt19937_64 rng(31);
  for (std::uint32_t d : {3u, 5u, 7u}) {
    std::uniform_int_distribution<std::uint32_t> val(1, d - 1);
    for (int t = 0; t < 400; ++t) {
      std::uniform_int_distribution<std::size_t> len(3, 12);
      std::vector<std::uint32_t> k(len(rng));
      for (auto &x : k)
        x = val(rng);
      const auto c = find_degenerate_subsequence(k, d);
      if (c) {
        EXPECT_TRUE(is_valid_certificate(k, d, *c));
      } else {
        // the pigeonhole argument always succeeds from d + 1 entries on
        EXPECT_LT(k.size(), d + 1);
      }
      if (k.size() >= d + 1) {
        EXPECT_TRUE(c.has_value());
      }
      if (!exhaustive_degenerate_subsequence(k, d, false)) {
        EXPECT_FALSE(c.has_value());
      }
    }
  }
}

TEST(Subsequence, ExtremalFamilyHasNoCertificate)
{
  for (std::uint32_t l : {3u, 5u, 7u, 11u, 13u}) {
    std::vector<std::uint32_t> k(l - 1, 1);
    k.push_back(l - 1);
    EXPECT_FALSE(find_degenerate_subsequence(k, l).has_value()) << l;
    EXPECT_FALSE(exhaustive_degenerate_subsequence(k, l, true).has_value()) << l;
  }
}

TEST(Subsequence, InvalidCertificatesAreRejected)
{
  const std::vector<std::uint32_t> k{1, 1, 1, 2};
  EXPECT_TRUE(is_valid_certificate(k, 3, {{0, 1, 2}, ""}));
  EXPECT_FALSE(is_valid_certificate(k, 3, {{0, 1}, ""}));
  EXPECT_FALSE(is_valid_certificate(k, 3, {{0, 1, 3}, ""}));
  EXPECT_FALSE(is_valid_certificate(k, 3, {{1, 0, 2}, ""}));
}

TEST(ExpectedImage, TargetGroups)
{
  const auto u = expected_image(arith::splitting_data(5, 3), {1, 1, 1, 1});
  EXPECT_EQ(u.kind, ImageKind::SlU);
  EXPECT_EQ(u.order, 1134000);
  ASSERT_TRUE(u.hypotheses.certificate.has_value());
  EXPECT_EQ(u.hypotheses.certificate->indices.size(), 3u);
  EXPECT_TRUE(u.hypotheses.satisfied());

  EXPECT_EQ(expected_image(arith::splitting_data(5, 3), {1, 1, 1, 1, 1}).order,
            BigInt("88452000000"));
  const auto s = expected_image(arith::splitting_data(11, 5), {1, 1, 3, 2});
  EXPECT_EQ(s.kind, ImageKind::SlL);
  EXPECT_EQ(s.order, 1062138000);

  EXPECT_THROW(expected_image(arith::splitting_data(5, 3), {1, 1, 1}), std::invalid_argument);
}

TEST(Norms, NormEquationOverF25)
{
  const auto alg = arith::build_algebra(5, 3);
  const auto &A = *alg;
  // xi = 1 + 2x is imaginary; xi conj(xi) / 4 = 2, so eta conj(eta) = 4 and the least eta is 2
  const auto xi = A.from_field(A.field().from_poly({1, 2}));
  ASSERT_TRUE(A.is_imaginary(xi));
  EXPECT_EQ(solve_norm_equation(A, xi), A.from_int(2));
  const auto quarter = A.inv(A.from_int(4));
  for (const auto &x : imaginary_elements(A)) {
    const auto eta = solve_norm_equation(A, x);
    EXPECT_EQ(A.add(A.mul(A.norm(x), quarter), A.norm(eta)), A.one());
  }
  EXPECT_EQ(imaginary_elements(A).size(), 5u);
}

TEST(Extension, IdentitiesHoldOnRandomTrials)
{
  std::mt19937_64 rng(32);
  for (auto [p, l] : {std::pair{5u, 3u}, {3u, 7u}}) {
    const auto alg = arith::build_algebra(p, l);
    for (std::size_t m : {4u, 5u, 6u}) {
      const auto rep = verify_extension_identities(*alg, m, 100, rng);
      EXPECT_TRUE(rep.all_pass()) << p << "," << l << " m=" << m;
      EXPECT_EQ(rep.displayed_inverse_matches, rep.trials);
    }
  }
}

TEST(Extension, DisplayedShapeIsUnitaryForTheModelForm)
{
  std::mt19937_64 rng(33);
  const auto alg = arith::build_algebra(5, 3);
  const auto &A = *alg;
  const std::size_t m = 5;
  for (int t = 0; t < 50; ++t) {
    const AlgVector alpha = random_normalized_vector(A, m - 2, rng);
    const AlgElem lambda = A.add(A.inv(A.from_int(2)), random_imaginary(A, rng));
    const AlgElem corner = random_fixed(A, rng);
    const auto h = extension_gram(A, m, corner);
    EXPECT_TRUE(gassner::preserves_form(A, extension_matrix(A, alpha, lambda), h));
    // a real shift of lambda breaks it
    EXPECT_FALSE(gassner::preserves_form(A, extension_matrix(A, alpha, A.add(lambda, A.one())), h));
  }
}

TEST(Extension, NormConstructionGivesMinusXi)
{
  const auto alg = arith::build_algebra(5, 3);
  const auto &A = *alg;
  for (const auto &xi : imaginary_elements(A)) {
    const auto c = norm_construction(A, xi, 4);
    EXPECT_TRUE(c.normalized);
    EXPECT_TRUE(c.entry_is_commutator);
    EXPECT_EQ(c.entry, A.neg(xi));
    EXPECT_EQ(c.swapped_entry, xi);
  }
  EXPECT_THROW(norm_construction(A, imaginary_elements(A).back(), 3), std::invalid_argument);
}

TEST(Radical, CommutatorLiesInTheRadical)
{
  std::mt19937_64 rng(34);
  for (auto [p, l, k] : {std::tuple{5u, 3u, std::vector<std::uint32_t>{1, 1, 2, 2}},
                         {11u, 5u, std::vector<std::uint32_t>{1, 1, 3}},
                         {5u, 3u, std::vector<std::uint32_t>{1, 1, 1, 1, 2}}}) {
    const auto alg = arith::build_algebra(p, l);
    const gassner::GassnerContext ctx(alg, k);
    const auto form = gassner::invariant_form(ctx);
    const auto rad = radical_transvections(ctx, form);
    EXPECT_EQ(rad.parameters, ctx.dimension() - 1);
    EXPECT_TRUE(rad.contains(*alg, gassner::prop21_commutator(ctx).commutator));
    for (int t = 0; t < 20; ++t) {
      AlgVector values(rad.parameters);
      for (auto &v : values)
        v = alg->random(rng);
      const auto e = rad.element(*alg, values);
      EXPECT_TRUE(rad.contains(*alg, e));
      EXPECT_TRUE(gassner::preserves_form(*alg, e, form.gram));
    }
    EXPECT_FALSE(rad.contains(*alg, gassner::square_generator_images(ctx)[0]));
  }
}

#include <random>

#include <gtest/gtest.h>

#include "bigmono/braid.hpp"

using namespace bigmono::braid;

TEST(Braid, ParseFormatRoundTrip)
{
  const auto w = parse_word("0 -1 2 +1 -0", 4);
  EXPECT_EQ(w.size(), 5u);
  EXPECT_TRUE(w.letters()[1].inverse);
  EXPECT_FALSE(w.letters()[3].inverse);
  EXPECT_EQ(format_word(w), "0 -1 2 1 -0");
  EXPECT_THROW(parse_word("0 x", 4), std::invalid_argument);
  EXPECT_THROW(parse_word("3", 4), std::out_of_range);
}

TEST(Braid, InverseCancelsUnderFreeReduction)
{
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    const auto w = random_word(rng, 5, 20);
    EXPECT_TRUE(free_reduce(concat(w, invert(w))).empty());
    EXPECT_EQ(invert(invert(w)), w);
  }
}

TEST(Braid, PermutationOfConcatenationComposes)
{
  std::mt19937_64 rng(12);
  for (int t = 0; t < 50; ++t) {
    const auto a = random_word(rng, 6, 9), b = random_word(rng, 6, 7);
    EXPECT_EQ(underlying_permutation(concat(a, b)),
              compose(underlying_permutation(a), underlying_permutation(b)));
  }
}

TEST(Braid, PureGeneratorsArePure)
{
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto gens = pure_generators(n);
    EXPECT_EQ(gens.size(), n * (n + 1) / 2);
    for (const auto &g : gens)
      EXPECT_TRUE(is_pure(g));
  }
  // A_{i,i+1} is sigma_i^2
  EXPECT_EQ(pure_generator(1, 2, 4), generator_square(1, 5));
  EXPECT_THROW(pure_generator(2, 2, 4), std::out_of_range);
}

TEST(Braid, HalfTwistReversesStrandsAndSquaresToPure)
{
  for (std::size_t strands = 3; strands <= 7; ++strands) {
    const auto d = half_twist(0, static_cast<std::uint32_t>(strands - 2), strands);
    const auto perm = underlying_permutation(d);
    for (std::size_t s = 0; s < strands; ++s)
      EXPECT_EQ(perm[s], strands - 1 - s);
    EXPECT_TRUE(is_pure(power(d, 2)));
    EXPECT_EQ(d.size(), strands * (strands - 1) / 2);
  }
  // partial twist on slots 1..3 of five strands
  const auto perm = underlying_permutation(half_twist(1, 2, 5));
  EXPECT_EQ(perm, (Permutation{0, 3, 2, 1, 4}));
}

TEST(Braid, CommutatorOfPureBraidsIsPure)
{
  const auto a = generator_square(0, 4);
  const auto b = power(half_twist(1, 2, 4), 2);
  const auto c = commutator(a, b);
  EXPECT_TRUE(is_pure(c));
  EXPECT_EQ(c.size(), 2 * (a.size() + b.size()));
}

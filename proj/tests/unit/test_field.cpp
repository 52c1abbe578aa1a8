#include <gtest/gtest.h>

#include "frobkit/error.hpp"
#include "frobkit/field.hpp"
#include "frobkit/verify/oracles.hpp"

using namespace frobkit;

TEST(Field, PrimeFieldArithmetic) {
  const auto k = Field::prime(7);
  EXPECT_EQ(k->order(), 7u);
  EXPECT_EQ(k->add(k->element(5), k->element(4)).code, 2u);
  EXPECT_EQ(k->mul(k->element(3), k->element(5)).code, 1u);
  EXPECT_EQ(k->inv(k->element(3)).code, 5u);
  EXPECT_EQ(k->from_int(-1).code, 6u);
  EXPECT_THROW(k->inv(k->zero()), DivisionByZero);
}

TEST(Field, FrobeniusOnF4) {
  // F_4 = F_2[t]/(t^2 + t + 1); codes pack c_0 + 2 c_1.
  const auto k = Field::create({2, 2, {1, 1, 1}});
  const FieldElement t = k->generator();
  EXPECT_EQ(t.code, 2u);
  EXPECT_EQ(k->frobenius(t).code, 3u);       // t + 1
  EXPECT_EQ(k->frobenius_root(k->element(3)), t);
  EXPECT_EQ(k->frobenius(k->one()), k->one());
  EXPECT_EQ(k->frobenius(k->zero()), k->zero());
  EXPECT_EQ(k->to_string(k->element(3)), "(t + 1)");
  EXPECT_EQ(k->to_string(k->element(3), "a"), "(a + 1)");
}

TEST(Field, FrobeniusIdentityOnPrimeFields) {
  for (std::uint32_t p : {2u, 3u, 5u, 97u}) {
    const auto k = Field::prime(p);
    for (std::uint64_t c = 0; c < std::min<std::uint64_t>(p, 20); ++c) {
      EXPECT_EQ(k->frobenius(k->element(c)).code, c);
      EXPECT_EQ(k->frobenius_root(k->element(c)).code, c);
    }
  }
}

TEST(Field, RootAndFrobeniusInverseExhaustively) {
  for (auto [p, e] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}, {2u, 4u}, {5u, 2u}, {7u, 2u}, {3u, 4u}, {2u, 6u}}) {
    const auto k = Field::extension(p, e);
    for (std::uint64_t c = 0; c < k->order(); ++c) {
      const FieldElement a = k->element(c);
      ASSERT_EQ(k->frobenius(k->frobenius_root(a)), a);
      ASSERT_EQ(k->frobenius_root(k->frobenius(a)), a);
      ASSERT_EQ(k->frobenius_root(a), verify::brute_frobenius_root(*k, a));
    }
  }
}

TEST(Field, FrobeniusIsAHomomorphism) {
  const auto k = Field::extension(3, 2);
  for (std::uint64_t x = 0; x < k->order(); ++x) {
    for (std::uint64_t y = 0; y < k->order(); ++y) {
      const FieldElement a = k->element(x), b = k->element(y);
      ASSERT_EQ(k->frobenius(k->mul(a, b)), k->mul(k->frobenius(a), k->frobenius(b)));
      ASSERT_EQ(k->frobenius(k->add(a, b)), k->add(k->frobenius(a), k->frobenius(b)));
    }
  }
}

TEST(Field, FieldAxiomsOnF9) {
  const auto k = Field::extension(3, 2);
  for (std::uint64_t x = 1; x < k->order(); ++x) {
    const FieldElement a = k->element(x);
    EXPECT_EQ(k->mul(a, k->inv(a)), k->one());
    EXPECT_EQ(k->pow(a, k->order() - 1), k->one());
    EXPECT_EQ(k->add(a, k->neg(a)), k->zero());
  }
}

TEST(Field, RejectsBadSpecs) {
  EXPECT_THROW(Field::create({4, 1, {}}), InvalidArgument);
  EXPECT_THROW(Field::create({2, 2, {1, 0, 1}}), InvalidArgument);  // t^2 + 1 = (t + 1)^2
  EXPECT_THROW(Field::create({2, 2, {1, 1, 0}}), InvalidArgument);  // not monic
  EXPECT_THROW(Field::create({2, 2, {1, 1}}), InvalidArgument);     // wrong length
}

TEST(Field, SmallestIrreducible) {
  EXPECT_EQ(Field::smallest_irreducible(2, 2), (std::vector<std::uint32_t>{1, 1, 1}));
  const auto m = Field::smallest_irreducible(3, 3);
  EXPECT_TRUE(Field::is_irreducible(3, m));
}

#include <gtest/gtest.h>

#include "frobkit/frobenius.hpp"
#include "frobkit/verify/random.hpp"
#include "support.hpp"

using namespace frobkit;
using namespace frobkit::test;

TEST(Exponents, IndexRoundTrip) {
  EXPECT_EQ(basis_size(3, 2), 9u);
  for (std::uint64_t i = 0; i < 27; ++i) EXPECT_EQ(exponent_index(exponent_from_index(i, 3, 3), 3, 3), i);
  EXPECT_EQ(exponent_index(mono({1, 2}), 3, 2), 7u);  // first variable is the low digit
  EXPECT_EQ(top_exponent(5, 2), mono({4, 4}));
}

TEST(Decompose, SmallExamples) {
  const auto r = ring(2, {"x", "y"});
  const auto d = pth_root_decompose(P(r, "x^2 + x*y"));
  EXPECT_EQ(d.part(mono({0, 0})), P(r, "x"));
  EXPECT_EQ(d.part(mono({1, 1})), P(r, "1"));
  EXPECT_TRUE(d.part(mono({1, 0})).is_zero());
  EXPECT_EQ(d.parts.size(), 2u);

  const auto r3 = ring(3);
  const auto e = pth_root_decompose(P(r3, "x^3"));
  ASSERT_EQ(e.parts.size(), 1u);
  EXPECT_EQ(e.part(mono({0})), P(r3, "x"));
}

TEST(Decompose, RecomposesOverF9) {
  const auto k = Field::extension(3, 2);
  const auto r = Ring::create(k, {"x", "y"});
  verify::Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    const Polynomial f = verify::random_polynomial(rng, r, 9, 8);
    ASSERT_EQ(pth_root_decompose(f).recompose(), f) << f.to_string();
  }
}

TEST(CartierVolume, MonomialFormula) {
  const auto r = ring(3);
  EXPECT_EQ(cartier_volume(P(r, "x^2")), P(r, "1"));
  EXPECT_TRUE(cartier_volume(P(r, "x")).is_zero());
  EXPECT_EQ(cartier_volume(P(r, "x^5")), P(r, "x"));
  EXPECT_EQ(cartier_volume_formula(P(r, "x^5 + 2*x^8 + x")), P(r, "x + 2*x^2"));
  EXPECT_EQ(kappa_x({P(r, "x^5")}).coefficient, P(r, "x"));
}

TEST(CartierVolume, CoefficientsTakeRoots) {
  const auto k = Field::create({2, 2, {1, 1, 1}});
  const auto r = Ring::create(k, {"x"});
  // (t x^3) -> t^{1/2} x = (t + 1) x.
  const Polynomial f = parse_polynomial(r, "t*x^3");
  EXPECT_EQ(cartier_volume(f), parse_polynomial(r, "(t + 1)*x"));
  EXPECT_EQ(cartier_volume_formula(f), cartier_volume(f));
}

TEST(CartierVolume, AgreesWithFormulaOnRandomPolynomials) {
  verify::Rng rng(3);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const auto r = ring(p, {"x", "y", "z"});
    for (int i = 0; i < 40; ++i) {
      const Polynomial f = verify::random_polynomial(rng, r, 3 * p, 10);
      ASSERT_EQ(cartier_volume(f), cartier_volume_formula(f));
    }
  }
}

TEST(DualBasis, Evaluation) {
  const auto r = ring(3, {"x", "y"});
  for (std::uint64_t a = 0; a < 9; ++a) {
    for (std::uint64_t b = 0; b < 9; ++b) {
      const Monomial ma = exponent_from_index(a, 3, 2), mb = exponent_from_index(b, 3, 2);
      const Polynomial v = dual_basis_eval(ma, Polynomial::monomial(r, mb, r->field().one()));
      EXPECT_EQ(v, Polynomial::constant(r, a == b ? 1 : 0));
    }
  }
  const auto r2 = ring(2);
  EXPECT_EQ(dual_basis_eval(mono({1}), P(r2, "x^3")), P(r2, "x"));
}

TEST(TensorForm, KappaFunctionalIsTheTopDelta) {
  const auto r = ring(3, {"x", "y"});
  std::vector<std::pair<Monomial, FreeVector>> table;
  for (std::uint64_t a = 0; a < 9; ++a) {
    const Monomial m = exponent_from_index(a, 3, 2);
    table.push_back({m, FreeVector({cartier_volume(Polynomial::monomial(r, m, r->field().one()))})});
  }
  const TensorForm form = can_inverse_table(1, table);
  ASSERT_EQ(form.terms.size(), 1u);
  EXPECT_EQ(form.terms[0].first, top_exponent(3, 2));
  // The tensor form evaluates to kappa_X everywhere.
  for (const char* s : {"x^2*y^2", "x^5*y^8 + x", "x^3*y"}) {
    EXPECT_EQ(can_apply(form, r, P(r, s))[0], cartier_volume(P(r, s)));
  }
  EXPECT_TRUE(can_inverse_table(1, {}).terms.empty());
}

TEST(TensorForm, RoundTripsRandomTables) {
  verify::Rng rng(5);
  const auto r = ring(2, {"x", "y"});
  for (int i = 0; i < 20; ++i) {
    std::vector<std::pair<Monomial, FreeVector>> table;
    for (std::uint64_t a = 0; a < 4; ++a) table.push_back({exponent_from_index(a, 2, 2), verify::random_vector(rng, r, 2, 3, 3)});
    std::erase_if(table, [](const auto& t) { return t.second.is_zero(); });
    const auto back = can_table(can_inverse_table(2, table), r);
    ASSERT_EQ(back.size(), table.size());
    for (std::size_t a = 0; a < table.size(); ++a) {
      EXPECT_EQ(back[a].first, table[a].first);
      EXPECT_EQ(back[a].second, table[a].second);
    }
  }
}

#include <gtest/gtest.h>

#include "frobkit/gamma.hpp"
#include "frobkit/verify/random.hpp"
#include "support.hpp"

using namespace frobkit;
using namespace frobkit::test;

namespace {

PolyMatrix one_by_one(const Polynomial& a) {
  PolyMatrix m(a.ring(), 1, 1);
  m.at(0, 0) = a;
  return m;
}

}  // namespace

TEST(GammaSheaf, RejectsMatricesThatIgnoreRelations) {
  const auto r = ring(2, {"x", "y"});
  const auto ambient = QuotientContext::ambient(r);
  // gamma(x e) = x A e must vanish in F*N = P / (x^2): fails for A = 1.
  EXPECT_THROW(GammaSheaf::create(ambient, 1, {V(r, 1, "x")}, one_by_one(P(r, "1"))), InvalidArgument);
  EXPECT_NO_THROW(GammaSheaf::create(ambient, 1, {V(r, 1, "x")}, one_by_one(P(r, "x"))));
  EXPECT_TRUE(gamma_violations(ambient, module_buchberger(r, std::vector<FreeVector>{V(r, 1, "x")}, 1),
                               one_by_one(P(r, "x")))
                  .empty());
}

TEST(GammaIterate, IdentityStaysIdentity) {
  const auto r = ring(3, {"x"});
  const auto n = GammaSheaf::create(QuotientContext::ambient(r), 2, {}, PolyMatrix::identity(r, 2));
  EXPECT_EQ(gamma_iterate(n, 4).matrix, PolyMatrix::identity(r, 2));
  const auto m = GammaSheaf::create(QuotientContext::ambient(r), 1, {}, one_by_one(P(r, "x")));
  EXPECT_EQ(gamma_iterate(m, 3).matrix.at(0, 0), P(r, "x^13"));  // x^{1 + 3 + 9}
}

TEST(GammaNilpotence, Examples) {
  const auto r = ring(2);
  const auto ambient = QuotientContext::ambient(r);
  const auto zero = gamma_is_nilpotent(GammaSheaf::create(ambient, 1, {}, one_by_one(P(r, "0"))), 4);
  EXPECT_EQ(zero.verdict, NilVerdict::Nilpotent);
  EXPECT_EQ(zero.index, 1u);
  const auto x2 = QuotientContext::create(r, Ps(r, {"x^2"}));
  const auto nx = gamma_is_nilpotent(GammaSheaf::create(x2, 1, {}, one_by_one(P(r, "x"))), 2);
  EXPECT_EQ(nx.verdict, NilVerdict::Nilpotent);
  EXPECT_EQ(nx.index, 2u);
  const auto point = QuotientContext::create(r, Ps(r, {"x"}));
  EXPECT_EQ(gamma_is_nilpotent(GammaSheaf::unit(point), 1).verdict, NilVerdict::NotNilpotent);
  // Infinite-dimensional: only a bounded verdict.
  EXPECT_EQ(gamma_is_nilpotent(GammaSheaf::unit(ambient), 3).verdict, NilVerdict::NotNilpotentUpTo);
}

TEST(Twist, Examples) {
  for (std::uint32_t p : {2u, 3u}) {
    const auto r = ring(p, {"x", "y"});
    const auto ambient = QuotientContext::ambient(r);
    EXPECT_EQ(twist_to_cartier(GammaSheaf::unit(ambient)), CartierModule::omega(r));
    EXPECT_EQ(twist_to_gamma(CartierModule::omega(r)), GammaSheaf::unit(ambient));
    const auto zero = GammaSheaf::create(ambient, 1, {}, one_by_one(P(r, "0")));
    EXPECT_TRUE(twist_to_cartier(zero).entries().empty());
    EXPECT_EQ(twist_to_gamma(CartierModule::zero(ambient, 1)), zero);
  }
}

TEST(Twist, RoundTripsAndDualBasisRoute) {
  verify::Rng rng(21);
  for (std::uint32_t p : {2u, 3u}) {
    const auto r = ring(p, {"x", "y"});
    for (int i = 0; i < 8; ++i) {
      const std::size_t s = 1 + i % 3;
      const auto n = GammaSheaf::create(QuotientContext::ambient(r), s, {}, verify::random_poly_matrix(rng, r, s, 4, 3));
      const auto m = twist_to_cartier(n);
      EXPECT_TRUE(validate_cartier_structure(m).ok);
      EXPECT_EQ(twist_to_gamma(m), n);
      EXPECT_EQ(twist_to_cartier_dual_basis(n), m);
    }
  }
}

TEST(Twist, QuotientRingUsesTheDualizingFactor) {
  const auto r = ring(3, {"x"});
  const auto seq = Ps(r, {"x^2"});
  const auto ctx = QuotientContext::create(r, seq);
  const auto m = twist_to_cartier(GammaSheaf::unit(ctx), seq);
  EXPECT_TRUE(validate_cartier_structure(m).ok);
  EXPECT_EQ(m, twist_to_cartier_dual_basis(GammaSheaf::unit(ctx), seq));
  // kappa(e) = kappa_X(x^{2(p-1)}) = kappa_X(x^4) = 0, kappa(x e) = kappa_X(x^5) = x.
  EXPECT_EQ(kappa_apply(m, V(r, 1, "1")), V(r, 1, "0"));
  EXPECT_EQ(kappa_apply(m, V(r, 1, "x")), V(r, 1, "x"));
}

TEST(Gen, Examples) {
  const auto r = ring(2);
  const auto point = QuotientContext::create(r, Ps(r, {"x"}));
  EXPECT_EQ(gen_stable_dimension(GammaSheaf::unit(point)), 1u);
  const auto x2 = QuotientContext::create(r, Ps(r, {"x^2"}));
  EXPECT_EQ(gen_stable_dimension(GammaSheaf::create(x2, 1, {}, one_by_one(P(r, "x")))), 0u);
  for (std::size_t s = 1; s <= 3; ++s)
    EXPECT_EQ(gen_stable_dimension(GammaSheaf::create(point, s, {}, PolyMatrix::identity(r, s))), s);
  const auto r2 = ring(2, {"x", "y"});
  const auto box = QuotientContext::create(r2, Ps(r2, {"x^2", "y^2"}));
  EXPECT_EQ(gen_stable_dimension(GammaSheaf::unit(box)), 4u);
  EXPECT_THROW(gen_stable_dimension(GammaSheaf::unit(QuotientContext::ambient(r))), InfiniteDimensional);
}

TEST(FrobeniusTwistRoot, Examples) {
  const auto r = ring(3);
  const auto ambient = QuotientContext::ambient(r);
  EXPECT_EQ(frobenius_twist_root(GammaSheaf::unit(ambient)), GammaSheaf::unit(ambient));
  const auto x = frobenius_twist_root(GammaSheaf::create(ambient, 1, {}, one_by_one(P(r, "x"))));
  EXPECT_EQ(x.matrix().at(0, 0), P(r, "x^3"));
  // Relations are twisted as well.
  const auto n = GammaSheaf::create(ambient, 1, {V(r, 1, "x")}, one_by_one(P(r, "x^2")));
  EXPECT_TRUE(frobenius_twist_root(n).relations().contains(V(r, 1, "x^3")));
  EXPECT_FALSE(frobenius_twist_root(n).relations().contains(V(r, 1, "x")));
}

TEST(LocalizedGamma, AgreesWithTheLocalizedTwist) {
  verify::Rng rng(4);
  const auto r = ring(2, {"x", "y"});
  const Polynomial h = P(r, "x + y");
  for (int i = 0; i < 5; ++i) {
    const auto n = GammaSheaf::create(QuotientContext::ambient(r), 1, {}, verify::random_poly_matrix(rng, r, 1, 2, 3));
    const auto direct = gamma_restrict_open(n, h);
    const auto via = restrict_to_principal_open(twist_to_cartier(n), h);
    for (std::uint32_t s = 0; s < 4; ++s) {
      const Fraction f{verify::random_vector(rng, r, 1, 3, 3), s};
      EXPECT_TRUE(via.equal(direct.twisted_kappa(f), via.kappa(f)));
    }
  }
}

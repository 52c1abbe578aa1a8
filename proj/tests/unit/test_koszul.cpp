#include <gtest/gtest.h>

#include "frobkit/koszul.hpp"
#include "frobkit/verify/random.hpp"
#include "support.hpp"

using namespace frobkit;
using namespace frobkit::test;

TEST(ClosedImmersion, RequiresARegularSequence) {
  const auto r = ring(2, {"x", "y"});
  EXPECT_THROW(ClosedImmersion::create(QuotientContext::ambient(r), Ps(r, {"x", "x"})), InvalidArgument);
  const auto im = ClosedImmersion::create(QuotientContext::ambient(r), Ps(r, {"x", "y"}));
  EXPECT_EQ(im.koszul_factor(), P(r, "x*y"));
  EXPECT_TRUE(im.target().ideal.contains(P(r, "x + y")));
}

TEST(Pullback, ZeroStaysZero) {
  const auto r = ring(3);
  const auto im = ClosedImmersion::create(QuotientContext::ambient(r), Ps(r, {"x"}));
  const auto m = cartier_pullback(CartierModule::zero(QuotientContext::ambient(r), 1), im);
  EXPECT_TRUE(m.entries().empty());
  EXPECT_TRUE(validate_cartier_structure(m).ok);
}

TEST(Pullback, RandomOutputsAreWellDefined) {
  verify::Rng rng(9);
  for (std::uint32_t p : {2u, 3u}) {
    const auto r = ring(p, {"x", "y"});
    for (const auto& seq : {Ps(r, {"x"}), Ps(r, {"x^2 + y"}), Ps(r, {"x", "y^2"})}) {
      const auto im = ClosedImmersion::create(QuotientContext::ambient(r), seq);
      for (int i = 0; i < 4; ++i) {
        const auto m = verify::random_free_cartier(rng, r, 1 + i % 2, 3);
        EXPECT_TRUE(validate_cartier_structure(cartier_pullback(m, im)).ok);
      }
    }
  }
}

TEST(Transition, Determinants) {
  const auto r = ring(3, {"x", "y"});
  const auto ctx = QuotientContext::ambient(r);
  const auto xy = Ps(r, {"x", "y"});
  EXPECT_EQ(transition_factor(xy, Ps(r, {"y", "x"}), ctx).det, P(r, "2"));
  EXPECT_EQ(transition_factor(xy, xy, ctx).det, P(r, "1"));
  const auto t = transition_factor(xy, Ps(r, {"x", "x + y"}), ctx);
  EXPECT_EQ(t.det, P(r, "1"));
  EXPECT_EQ(t.c.at(1, 0), P(r, "1"));
  EXPECT_EQ(t.c.at(1, 1), P(r, "1"));
  EXPECT_THROW(transition_factor(xy, Ps(r, {"x", "y^2"}), ctx), InvalidArgument);
}

TEST(Transition, DeterminantIntertwinesRawPullbacks) {
  verify::Rng rng(2);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const auto r = ring(p, {"x", "y"});
    const auto ctx = QuotientContext::ambient(r);
    for (const auto& [f, g] : {std::pair{Ps(r, {"x", "y"}), Ps(r, {"y", "x"})},
                               std::pair{Ps(r, {"x", "y"}), Ps(r, {"x + y", "y"})},
                               std::pair{Ps(r, {"x", "y^2"}), Ps(r, {"x + y^2", "y^2"})}}) {
      const auto imf = ClosedImmersion::create(ctx, f);
      const auto img = ClosedImmersion::create(ctx, g);
      const auto t = transition_factor(f, g, ctx);
      EXPECT_TRUE(koszul_factors_congruent(imf, img, t.det));
      const auto m = verify::random_free_cartier(rng, r, 2, 3);
      EXPECT_TRUE(intertwined_by(cartier_pullback(m, imf), cartier_pullback(m, img), t.det));
    }
  }
}

TEST(Dualizing, Examples) {
  const auto r = ring(2);
  const auto im = ClosedImmersion::create(QuotientContext::ambient(r), Ps(r, {"x"}));
  const auto w = dualizing_module(im);
  EXPECT_EQ(kappa_apply(w, V(r, 1, "1")), V(r, 1, "1"));
  const auto x2 = dualizing_module(ClosedImmersion::create(QuotientContext::ambient(r), Ps(r, {"x^2"})));
  EXPECT_EQ(kappa_apply(x2, V(r, 1, "1")), V(r, 1, "0"));
  EXPECT_EQ(kappa_apply(x2, V(r, 1, "x")), V(r, 1, "x"));
  for (std::uint32_t p : {2u, 3u}) {
    const auto r3 = ring(p, {"x", "y", "z"});
    const auto full = dualizing_module(ClosedImmersion::create(QuotientContext::ambient(r3), Ps(r3, {"x", "y", "z"})));
    EXPECT_EQ(to_semilinear(full).u, Matrix::identity(1));
  }
}

TEST(GammaPullback, Reduction) {
  const auto r = ring(2, {"x", "y"});
  const auto ambient = QuotientContext::ambient(r);
  PolyMatrix a(r, 1, 1);
  a.at(0, 0) = P(r, "x + y");
  const auto im = ClosedImmersion::create(ambient, Ps(r, {"x"}));
  EXPECT_EQ(gamma_pullback(GammaSheaf::create(ambient, 1, {}, a), im).matrix().at(0, 0), P(r, "y"));
  a.at(0, 0) = P(r, "x");
  EXPECT_TRUE(gamma_pullback(GammaSheaf::create(ambient, 1, {}, a), im).matrix().at(0, 0).is_zero());
}

TEST(Commutation, UnitAndZero) {
  for (std::uint32_t p : {2u, 3u}) {
    const auto r = ring(p, {"x", "y"});
    const auto ambient = QuotientContext::ambient(r);
    for (const auto& seq : {Ps(r, {"x"}), Ps(r, {"y"}), Ps(r, {"x", "y"}), Ps(r, {"x^2 - y"})}) {
      const auto im = ClosedImmersion::create(ambient, seq);
      EXPECT_TRUE(check_pullback_commutation(GammaSheaf::unit(ambient), im).equal);
      EXPECT_EQ(cartier_pullback(CartierModule::omega(r), im), dualizing_module(im));
      PolyMatrix z(r, 1, 1);
      EXPECT_TRUE(check_pullback_commutation(GammaSheaf::create(ambient, 1, {}, z), im).equal);
    }
  }
}

TEST(Commutation, RandomSheaves) {
  verify::Rng rng(17);
  for (std::uint32_t p : {2u, 3u}) {
    const auto r = ring(p, {"x", "y"});
    const auto ambient = QuotientContext::ambient(r);
    const auto im = ClosedImmersion::create(ambient, Ps(r, {"x", "y"}));
    for (int i = 0; i < 6; ++i) {
      const auto n = GammaSheaf::create(ambient, 2, {}, verify::random_poly_matrix(rng, r, 2, 3, 3));
      const auto report = check_pullback_commutation(n, im);
      EXPECT_TRUE(report.equal);
      EXPECT_TRUE(report.discrepancies.empty());
    }
  }
}

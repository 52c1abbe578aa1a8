#include <gtest/gtest.h>

#include "frobkit/cartier.hpp"
#include "frobkit/koszul.hpp"
#include "frobkit/verify/oracles.hpp"
#include "frobkit/verify/random.hpp"
#include "support.hpp"

using namespace frobkit;
using namespace frobkit::test;

namespace {

Matrix mat(const Field& k, std::vector<std::vector<std::uint64_t>> rows) {
  Matrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = k.element(rows[i][j]);
  }
  return m;
}

CartierModule zero_table(const RingPtr& r) { return CartierModule::zero(QuotientContext::ambient(r), 1); }

}  // namespace

TEST(CartierModule, OmegaIsValidAndMatchesTheVolume) {
  const auto r = ring(3, {"x", "y"});
  const auto w = CartierModule::omega(r);
  EXPECT_TRUE(validate_cartier_structure(w).ok);
  EXPECT_EQ(kappa_apply(w, V(r, 1, "x^5*y^2 + x")), V(r, 1, "x"));
  EXPECT_EQ(kappa_power(w, 2, V(r, 1, "x^8*y^8")), V(r, 1, "1"));
}

TEST(CartierModule, ValidationReportsInconsistentTables) {
  for (std::uint32_t p : {2u, 3u}) {
    const auto r = ring(p);
    const auto ctx = QuotientContext::create(r, Ps(r, {"x"}));
    std::vector<KappaEntry> entries{{0, mono({0}), V(r, 1, "1")}, {0, mono({p - 1}), V(r, 1, "1")}};
    const auto bad = CartierModule::create(ctx, 1, {}, entries);
    const auto report = validate_cartier_structure(bad);
    EXPECT_FALSE(report.ok);
    EXPECT_FALSE(report.violations.empty());
    // kappa(e) = e alone is fine: kappa(x^p e) = x e lies in the relations.
    const auto good = CartierModule::create(ctx, 1, {}, {{0, mono({0}), V(r, 1, "1")}});
    EXPECT_TRUE(validate_cartier_structure(good).ok);
  }
}

TEST(CartierModule, Semilinearity) {
  verify::Rng rng(1);
  for (std::uint32_t p : {2u, 3u}) {
    const auto r = ring(p, {"x", "y"});
    const auto m = verify::random_free_cartier(rng, r, 2, 3);
    for (int i = 0; i < 10; ++i) {
      const Polynomial h = verify::random_polynomial(rng, r, 2, 3);
      const FreeVector v = verify::random_vector(rng, r, 2, 4, 4);
      EXPECT_EQ(kappa_apply(m, h.pow(p) * v), h * kappa_apply(m, v));
    }
  }
}

TEST(StableImage, Examples) {
  const auto r = ring(2);
  const auto z = stable_image(zero_table(r));
  EXPECT_EQ(z.index, 1u);
  EXPECT_TRUE(z.stable.is_zero());
  const auto w = stable_image(CartierModule::omega(r));
  EXPECT_TRUE(w.stable.is_full());
}

TEST(Nilpotence, WorkedExamples) {
  const auto r = ring(2);
  const auto z = is_nilpotent(zero_table(r));
  EXPECT_EQ(z.verdict, NilVerdict::Nilpotent);
  EXPECT_EQ(z.index, 1u);
  EXPECT_EQ(is_nilpotent(CartierModule::omega(r)).verdict, NilVerdict::NotNilpotent);
  const auto& k = *Field::prime(2);
  const auto upper = is_nilpotent(CartierModule::from_matrix(r, mat(k, {{0, 1}, {0, 0}})));
  EXPECT_EQ(upper.verdict, NilVerdict::Nilpotent);
  EXPECT_EQ(upper.index, 2u);
  EXPECT_EQ(is_nilpotent(CartierModule::from_matrix(r, mat(k, {{0, 1}, {1, 0}}))).verdict, NilVerdict::NotNilpotent);
  EXPECT_EQ(crystal_is_zero(zero_table(r)).verdict, NilVerdict::Nilpotent);
}

TEST(Support, Examples) {
  const auto r = ring(3, {"x", "y"});
  const auto xs = Ps(r, {"x"});
  const auto torsion = CartierModule::create(QuotientContext::ambient(r), 1, {V(r, 1, "x")},
                                             {{0, mono({0, 2}), V(r, 1, "1")}});
  ASSERT_TRUE(validate_cartier_structure(torsion).ok);
  EXPECT_TRUE(is_crystal_supported_on(torsion, xs));
  EXPECT_FALSE(is_crystal_supported_on(CartierModule::omega(r), xs));
  EXPECT_TRUE(is_crystal_supported_on(zero_table(r), xs));
  EXPECT_FALSE(is_crystal_supported_on(CartierModule::omega(r), Ps(r, {"1"})));  // V(1) is empty
}

TEST(Localization, KappaOnFractions) {
  const auto r = ring(2);
  const auto loc = restrict_to_principal_open(CartierModule::omega(r), P(r, "x"));
  // kappa(e / x) = kappa(x e) / x = e / x.
  const Fraction f = loc.kappa({V(r, 1, "1"), 1});
  EXPECT_TRUE(loc.equal(f, {V(r, 1, "1"), 1}));
  EXPECT_TRUE(loc.equal({V(r, 1, "x"), 2}, {V(r, 1, "1"), 1}));
  EXPECT_FALSE(loc.equal({V(r, 1, "1"), 2}, {V(r, 1, "1"), 1}));
  const auto ctx = QuotientContext::create(r, Ps(r, {"x^2"}));
  EXPECT_THROW(restrict_to_principal_open(CartierModule::zero(ctx, 1), P(r, "x^3")), InvalidArgument);
}

TEST(Localization, KillsTorsion) {
  const auto r = ring(2, {"x", "y"});
  const auto m = CartierModule::create(QuotientContext::ambient(r), 1, {V(r, 1, "x*y")}, {});
  const auto loc = restrict_to_principal_open(m, P(r, "x"));
  EXPECT_TRUE(loc.equal({V(r, 1, "y"), 0}, {V(r, 1, "0"), 0}));
  EXPECT_FALSE(loc.equal({V(r, 1, "x"), 0}, {V(r, 1, "0"), 0}));
}

TEST(Semilinear, ToSemilinearOfAKoszulPullback) {
  const auto r = ring(2);
  const auto im = ClosedImmersion::create(QuotientContext::ambient(r), Ps(r, {"x^2"}));
  const auto m = cartier_pullback(CartierModule::omega(r), im);
  const SemilinearEndo t = to_semilinear(m);
  ASSERT_EQ(t.dim(), 2u);
  // kappa(e) = kappa_X(x^2) = 0 and kappa(x e) = kappa_X(x^3) = x e.
  StaircaseBasis basis(m.relations());
  const Vec xe = basis.coordinates(V(r, 1, "x")), e = basis.coordinates(V(r, 1, "1"));
  EXPECT_EQ(t.apply(xe), xe);
  EXPECT_EQ(t.apply(e), Vec(2));
  EXPECT_TRUE(to_semilinear(CartierModule::zero(QuotientContext::create(r, Ps(r, {"x^2"})), 1)).u.is_zero());
}

TEST(Semilinear, NilpotenceExamples) {
  const auto k = Field::prime(2);
  const auto z = semilinear_nilpotent({k, Matrix(2, 2), Direction::Inverse});
  EXPECT_EQ(z.verdict, NilVerdict::Nilpotent);
  EXPECT_EQ(z.index, 1u);
  EXPECT_EQ(semilinear_nilpotent({k, Matrix::identity(3), Direction::Inverse}).verdict, NilVerdict::NotNilpotent);
  const SemilinearEndo swap{k, mat(*k, {{0, 1}, {1, 0}}), Direction::Inverse};
  EXPECT_EQ(semilinear_nilpotent(swap).verdict, NilVerdict::NotNilpotent);
  EXPECT_EQ(verify::brute_semilinear_nilpotent(swap).verdict, NilVerdict::NotNilpotent);
}

TEST(Semilinear, NilpotenceOverF4UsesRoots) {
  // U = [[0, t], [0, 0]] is nilpotent in either direction; the swap with
  // a generator entry is not.
  const auto k = Field::extension(2, 2);
  for (Direction d : {Direction::Inverse, Direction::Forward}) {
    const SemilinearEndo n{k, mat(*k, {{0, 2}, {0, 0}}), d};
    EXPECT_EQ(semilinear_nilpotent(n).verdict, NilVerdict::Nilpotent);
    const SemilinearEndo s{k, mat(*k, {{0, 2}, {3, 0}}), d};
    const auto a = semilinear_nilpotent(s), b = verify::brute_semilinear_nilpotent(s);
    EXPECT_EQ(a.verdict, b.verdict);
    EXPECT_EQ(a.index, b.index);
  }
}

TEST(Hom, Examples) {
  for (std::uint32_t p : {2u, 3u}) {
    for (std::uint32_t e : {1u, 2u}) {
      const auto k = e == 1 ? Field::prime(p) : Field::extension(p, e);
      const SemilinearEndo one{k, Matrix::identity(1), Direction::Inverse};
      EXPECT_EQ(hom_commuting(one, one).size(), 1u);
    }
  }
  const auto f2 = Field::prime(2);
  const SemilinearEndo id2{f2, Matrix::identity(2), Direction::Inverse};
  EXPECT_EQ(hom_commuting(id2, id2).size(), 4u);
  EXPECT_EQ(verify::brute_hom_count(id2, id2), 16u);
  // T_N = 0 against an invertible T_M leaves only phi = 0.
  const SemilinearEndo zero{f2, Matrix(2, 2), Direction::Inverse};
  EXPECT_EQ(hom_commuting(id2, zero).size(), 0u);
  EXPECT_EQ(verify::brute_hom_count(id2, zero), 1u);
  const SemilinearEndo fwd{f2, Matrix::identity(2), Direction::Forward};
  EXPECT_THROW(hom_commuting(id2, fwd), InvalidArgument);
}

TEST(Hom, MatchesExhaustiveSearch) {
  verify::Rng rng(8);
  const auto k = Field::extension(2, 2);
  for (int i = 0; i < 20; ++i) {
    const std::size_t dm = verify::uniform(rng, 1, 2), dn = verify::uniform(rng, 1, 2);
    const SemilinearEndo m{k, verify::random_matrix(rng, *k, dm, dm), Direction::Inverse};
    const SemilinearEndo n{k, verify::random_matrix(rng, *k, dn, dn), Direction::Inverse};
    const std::uint64_t count = verify::brute_hom_count(m, n);
    std::uint64_t expected = 1;
    for (std::size_t j = 0; j < hom_commuting(m, n).size(); ++j) expected *= 2;
    EXPECT_EQ(count, expected);
  }
}

TEST(NilIsomorphism, Examples) {
  const auto k = Field::prime(2);
  const SemilinearEndo id{k, Matrix::identity(2), Direction::Inverse};
  EXPECT_TRUE(nil_isomorphism_test(Matrix::identity(2), id, id));
  EXPECT_FALSE(nil_isomorphism_test(Matrix(2, 2), id, id));
  const SemilinearEndo t{k, mat(*k, {{1, 1, 0}, {0, 0, 1}, {0, 0, 0}}), Direction::Inverse};
  const StableSubspace s = stable_subspace(t);
  EXPECT_LT(s.op.dim(), 3u);
  EXPECT_TRUE(nil_isomorphism_test(s.inclusion, s.op, t));
  const SemilinearEndo swap{k, mat(*k, {{0, 1}, {1, 0}}), Direction::Inverse};
  EXPECT_THROW(nil_isomorphism_test(mat(*k, {{1, 0}, {0, 0}}), swap, swap), InvalidArgument);
}

TEST(Staircase, Coordinates) {
  const auto r = ring(3, {"x", "y"});
  const auto gb = module_buchberger(r, std::vector<FreeVector>{V(r, 2, "[x^2, 0]"), V(r, 2, "[y, 0]"),
                                                                 V(r, 2, "[0, x]"), V(r, 2, "[0, y]")},
                                    2);
  StaircaseBasis b(gb);
  EXPECT_EQ(b.dim(), 3u);
  const FreeVector v = V(r, 2, "[2*x + 1 + y, 2 + x]");
  EXPECT_EQ(b.vector(b.coordinates(v)), gb.normal_form(v));
  EXPECT_THROW(StaircaseBasis(buchberger(r, Ps(r, {"x"}))), InfiniteDimensional);
}

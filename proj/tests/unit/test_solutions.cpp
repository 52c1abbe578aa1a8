#include <gtest/gtest.h>

#include "frobkit/solutions.hpp"
#include "frobkit/verify/oracles.hpp"
#include "frobkit/verify/random.hpp"
#include "support.hpp"

using namespace frobkit;
using namespace frobkit::test;

namespace {

std::vector<std::uint64_t> codes(const std::vector<RationalPoint>& pts) {
  std::vector<std::uint64_t> out;
  for (const auto& pt : pts) out.push_back(pt.coords[0].code);
  return out;
}

}  // namespace

TEST(Points, Examples) {
  const auto r = ring(2);
  EXPECT_EQ(codes(enumerate_points(QuotientContext::create(r, Ps(r, {"x"})), 1)), (std::vector<std::uint64_t>{0}));
  EXPECT_EQ(codes(enumerate_points(QuotientContext::create(r, Ps(r, {"x^2 + x"})), 1)),
            (std::vector<std::uint64_t>{0, 1}));
  EXPECT_TRUE(enumerate_points(QuotientContext::create(r, Ps(r, {"1"})), 1).empty());
  EXPECT_EQ(enumerate_points(QuotientContext::ambient(r), 3).size(), 8u);
}

TEST(Points, MatchBruteForce) {
  const auto r = ring(3, {"x", "y"});
  const auto gens = Ps(r, {"x^2 + y^2 - 1"});
  for (std::uint32_t m : {1u, 2u}) {
    const auto pts = enumerate_points(QuotientContext::create(r, gens), m);
    EXPECT_EQ(pts.size(), verify::brute_points(r, gens, m).size());
  }
}

TEST(Points, GuardIsEnforced) {
  const auto r = ring(2, {"x", "y", "z"});
  Budget tiny;
  tiny.point_guard = 10;
  EXPECT_THROW(enumerate_points(QuotientContext::ambient(r), 2, tiny), BudgetExceeded);
}

TEST(PointField, ExtensionFieldsAllowOnlyDegreeOne) {
  const auto k = Field::extension(2, 2);
  EXPECT_EQ(point_field(*k, 1)->order(), 4u);
  EXPECT_THROW(point_field(*k, 2), InvalidArgument);
  EXPECT_EQ(point_field(*Field::prime(3), 2)->order(), 9u);
}

TEST(Solutions, Examples) {
  const auto r = ring(2);
  const auto ambient = QuotientContext::ambient(r);
  PolyMatrix zero(r, 1, 1);
  const auto pts = enumerate_points(ambient, 2);
  EXPECT_EQ(solutions_at_point(GammaSheaf::create(ambient, 1, {}, zero), pts[1]).dim, 0u);

  const auto f4 = Field::create({2, 2, {1, 1, 1}});
  const auto r4 = Ring::create(f4, {"x"});
  PolyMatrix c(r4, 1, 1);
  c.at(0, 0) = Polynomial::constant(r4, f4->generator());
  const auto root = GammaSheaf::create(QuotientContext::ambient(r4), 1, {}, c);
  const RationalPoint pt{1, f4, {f4->zero()}};
  const auto sol = solutions_at_point(root, pt);
  ASSERT_EQ(sol.dim, 1u);
  // The nonzero solution is c^{-1}.
  EXPECT_EQ(sol.basis[0][0], f4->inv(f4->generator()));
}

TEST(Solutions, ArtinSchreierAnchor) {
  for (std::uint64_t q : {2u, 3u, 4u, 8u, 9u, 25u, 27u, 64u, 81u}) EXPECT_EQ(artin_schreier_kernel(q), 1u) << q;
  EXPECT_THROW(artin_schreier_kernel(12), InvalidArgument);
  const auto r = ring(3);
  for (const auto& row : solution_profile(GammaSheaf::unit(QuotientContext::ambient(r)), 2)) EXPECT_EQ(row.dim, 1u);
  EXPECT_EQ(solution_profile(GammaSheaf::unit(QuotientContext::ambient(r)), 2).size(), 3u + 9u);
}

TEST(Solutions, MatchesEnumeration) {
  verify::Rng rng(6);
  for (std::uint32_t p : {2u, 3u}) {
    const auto r = ring(p, {"x", "y"});
    const auto ambient = QuotientContext::ambient(r);
    for (int i = 0; i < 6; ++i) {
      const std::size_t s = 1 + i % 2;
      const auto root = GammaSheaf::create(ambient, s, {}, verify::random_poly_matrix(rng, r, s, 2, 3));
      for (const auto& pt : enumerate_points(ambient, 2)) {
        const auto sol = solutions_at_point(root, pt);
        EXPECT_LE(sol.dim, s);
        EXPECT_EQ(verify::prime_span(*pt.field, s, sol.basis), verify::brute_solutions(root, pt));
      }
    }
  }
}

TEST(Solutions, RelationsMustVanish) {
  const auto r = ring(2);
  const auto ctx = QuotientContext::create(r, Ps(r, {"x^2 + x"}));
  const auto root = GammaSheaf::unit(ctx);
  const auto f4 = point_field(r->field(), 2);
  EXPECT_THROW(solutions_at_point(root, {2, f4, {f4->generator()}}), InvalidArgument);
}

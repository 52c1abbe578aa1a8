#include <gtest/gtest.h>

#include "frobkit/groebner.hpp"
#include "support.hpp"

using namespace frobkit;
using namespace frobkit::test;

TEST(Polynomial, ArithmeticAndCanonicalText) {
  const auto r = ring(3, {"x", "y"});
  const Polynomial f = P(r, "x + y"), g = P(r, "x - y");
  EXPECT_EQ((f * g).to_string(), "x^2 + 2*y^2");
  EXPECT_EQ(f.pow(3), P(r, "x^3 + y^3"));
  EXPECT_TRUE((f - f).is_zero());
  EXPECT_EQ(P(r, "0").to_string(), "0");
  EXPECT_EQ(P(r, "4*x*y^2 + 3").to_string(), "x*y^2");
}

TEST(Polynomial, ParseErrorsCarryColumns) {
  const auto r = ring(2, {"x", "y"});
  try {
    P(r, "x + z");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 5u);
  }
  EXPECT_THROW(P(r, "x +"), ParseError);
  EXPECT_THROW(P(r, "x^"), ParseError);
  EXPECT_THROW(V(r, 2, "[x]"), RankMismatch);
}

TEST(Polynomial, ExtensionGenerator) {
  const auto k = Field::create({2, 2, {1, 1, 1}});
  const auto r = Ring::create(k, {"x"});
  const Polynomial f = parse_polynomial(r, "a*x + a^2", "a");
  EXPECT_EQ(f.to_string("a"), "(a)*x + (a + 1)");
  EXPECT_EQ(f.frobenius_twist(), parse_polynomial(r, "(a + 1)*x^2 + a", "a"));
}

TEST(Polynomial, Evaluate) {
  const auto r = ring(5, {"x", "y"});
  const auto k = Field::prime(5);
  std::vector<FieldElement> pt{k->element(2), k->element(3)};
  EXPECT_EQ(P(r, "x^2*y + 1").evaluate(*k, pt).code, 3u);
}

TEST(Groebner, NormalFormExample) {
  const auto r = ring(2, {"x", "y"});
  const auto gens = Ps(r, {"x^2 - y", "y^2"});
  const auto gb = buchberger(r, gens);
  EXPECT_EQ(gb.normal_form(P(r, "x^3")), P(r, "x*y"));
  EXPECT_TRUE(verify_groebner(gb));
}

TEST(Groebner, ReducedBasisOfCyclic3) {
  const auto r = ring(7, {"x", "y", "z"});
  const auto gb = buchberger(r, Ps(r, {"x + y + z", "x*y + y*z + z*x", "x*y*z - 1"}));
  EXPECT_TRUE(verify_groebner(gb));
  // Each input lies in the ideal and the quotient has dimension 6.
  for (const auto& f : Ps(r, {"x + y + z", "x*y + y*z + z*x", "x*y*z - 1"})) EXPECT_TRUE(gb.contains(f));
  ASSERT_TRUE(gb.staircase().has_value());
  EXPECT_EQ(gb.staircase()->size(), 6u);
}

TEST(Groebner, LexAndGrevlexAgreeOnMembership) {
  const auto lex = ring(3, {"x", "y"}, MonomialOrder::Lex);
  const auto grl = ring(3, {"x", "y"});
  const auto a = buchberger(lex, Ps(lex, {"x^2 + y", "x*y - 1"}));
  const auto b = buchberger(grl, Ps(grl, {"x^2 + y", "x*y - 1"}));
  EXPECT_TRUE(a.contains(P(lex, "y^3 + 1")));
  EXPECT_TRUE(b.contains(P(grl, "y^3 + 1")));
  EXPECT_FALSE(b.contains(P(grl, "y - 1")));
}

TEST(Groebner, SubmoduleEquality) {
  const auto r = ring(2, {"x", "y"});
  auto ideal = [&](std::initializer_list<const char*> g) { return buchberger(r, Ps(r, g)); };
  EXPECT_TRUE(submodule_equal(ideal({"x"}), ideal({"x", "x^2"})));
  EXPECT_FALSE(submodule_equal(ideal({"x"}), ideal({"x^2"})));
  EXPECT_TRUE(submodule_equal(ideal({"x + y", "y"}), ideal({"x", "y"})));
}

TEST(Groebner, ModuleBasis) {
  const auto r = ring(3, {"x", "y"});
  std::vector<FreeVector> gens{V(r, 2, "[x, y]"), V(r, 2, "[y, 0]")};
  const auto gb = module_buchberger(r, gens, 2);
  EXPECT_TRUE(verify_groebner(gb));
  EXPECT_TRUE(gb.contains(V(r, 2, "[x*y, y^2]")));
  EXPECT_TRUE(gb.contains(V(r, 2, "[0, y^2]")));
  EXPECT_FALSE(gb.contains(V(r, 2, "[0, y]")));
  const auto other = module_buchberger(r, std::vector<FreeVector>{V(r, 2, "[x, y]")}, 2);
  EXPECT_THROW(submodule_equal(gb, buchberger(r, Ps(r, {"x"}))), RankMismatch);
  EXPECT_TRUE(submodule_contains(gb, other));
  EXPECT_FALSE(submodule_contains(other, gb));
}

TEST(Groebner, Staircase) {
  const auto r = ring(2, {"x", "y"});
  const auto gb = buchberger(r, Ps(r, {"x^2", "y^2"}));
  ASSERT_TRUE(gb.staircase().has_value());
  EXPECT_EQ(gb.staircase()->size(), 4u);
  EXPECT_FALSE(buchberger(r, Ps(r, {"x^2"})).staircase().has_value());
}

TEST(Groebner, QuotientsAndSaturation) {
  const auto r = ring(2, {"x", "y"});
  const auto x = buchberger(r, Ps(r, {"x"}));
  EXPECT_TRUE(ideal_quotient(x, P(r, "x")).is_full());
  const auto i = buchberger(r, Ps(r, {"x^2*y", "x*y^2"}));
  EXPECT_TRUE(submodule_equal(ideal_quotient(i, P(r, "x")), buchberger(r, Ps(r, {"x*y", "y^2"}))));
  EXPECT_TRUE(submodule_equal(saturate(i, P(r, "x")), buchberger(r, Ps(r, {"y"}))));
  // Module quotient in rank 2.
  const auto n = module_buchberger(r, std::vector<FreeVector>{V(r, 2, "[x^2, 0]"), V(r, 2, "[0, x*y]")}, 2);
  const auto q = module_quotient(n, P(r, "x"));
  EXPECT_TRUE(q.contains(V(r, 2, "[x, 0]")));
  EXPECT_TRUE(q.contains(V(r, 2, "[0, y]")));
  EXPECT_FALSE(q.contains(V(r, 2, "[1, 0]")));
}

TEST(Groebner, Lift) {
  const auto r = ring(3, {"x", "y"});
  const auto gens = Ps(r, {"x^2 - y", "x*y"});
  const Polynomial g = P(r, "x^3 + x*y");
  const auto c = lift(r, gens, g);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ((*c)[0] * gens[0] + (*c)[1] * gens[1], g);
  EXPECT_FALSE(lift(r, gens, P(r, "x")).has_value());
}

TEST(Groebner, RegularSequences) {
  const auto r2 = ring(2, {"x", "y"});
  EXPECT_TRUE(is_regular_sequence(Ps(r2, {"x", "y"}), r2));
  EXPECT_FALSE(is_regular_sequence(Ps(r2, {"x", "x"}), r2));
  EXPECT_FALSE(is_regular_sequence(Ps(r2, {"1"}), r2));
  const auto r3 = ring(2, {"x", "y", "z"});
  EXPECT_FALSE(is_regular_sequence(Ps(r3, {"x*y", "x*z"}), r3));
  EXPECT_TRUE(is_regular_sequence(Ps(r3, {"x^2", "y-z"}), r3));
}

TEST(Groebner, BudgetIsEnforced) {
  const auto r = ring(7, {"x", "y", "z"});
  Budget tiny;
  tiny.spair_limit = 1;
  EXPECT_THROW(buchberger(r, Ps(r, {"x + y + z", "x*y + y*z + z*x", "x*y*z - 1"}), tiny), BudgetExceeded);
}

TEST(Groebner, DivideExact) {
  const auto r = ring(5, {"x", "y"});
  EXPECT_EQ(divide_exact(P(r, "x^2 - y^2"), P(r, "x + y")), P(r, "x - y"));
  EXPECT_THROW(divide_exact(P(r, "x^2 + 1"), P(r, "x + y")), InvalidArgument);
}

TEST(QuotientContext, ReducesModuloTheIdeal) {
  const auto r = ring(3, {"x"});
  const auto ctx = QuotientContext::create(r, Ps(r, {"x^2"}));
  EXPECT_FALSE(ctx.is_ambient());
  EXPECT_EQ(ctx.reduce(P(r, "x^3 + x + 1")), P(r, "x + 1"));
  EXPECT_TRUE(QuotientContext::ambient(r).is_ambient());
}

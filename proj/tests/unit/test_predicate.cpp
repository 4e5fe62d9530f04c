#include <gtest/gtest.h>

#include "nilbc/error.hpp"
#include "nilbc/parser.hpp"
#include "nilbc/predicate.hpp"

using namespace nilbc;

TEST(Expression, Arithmetic) {
  const auto b = parse_binding("D=1/2+i; lambda=2");
  EXPECT_EQ(evaluate_expression("D+conj(D)", b), Gaussian(1));
  EXPECT_EQ(evaluate_expression("-1-lambda^2+D+conj(D)", b), Gaussian(-4));
  EXPECT_EQ(evaluate_expression("absq(D)", b), Gaussian::rational(5, 4));
  EXPECT_EQ(evaluate_expression("2*(D-1)", b), Gaussian(-1) + Gaussian::i() * Gaussian(2));
  EXPECT_EQ(evaluate_expression("im(D) / re(D)", b), Gaussian(2));
  EXPECT_EQ(evaluate_expression("4i*i", b), Gaussian(-4));
  EXPECT_EQ(evaluate_expression("(1+i)^2", b), Gaussian::i() * Gaussian(2));
  EXPECT_THROW(evaluate_expression("E+1", b), ValidationError);
  EXPECT_THROW(evaluate_expression("1+", b), ParseError);
  EXPECT_THROW(evaluate_expression("1/(D-D)", b), ArithmeticError);
}

TEST(Expression, SInvariant) {
  // S(B,c) = c^4 - 2(|B|^2+1)c^2 + (|B|^2-1)^2
  EXPECT_EQ(s_invariant(1, 2), Rational(0));
  EXPECT_EQ(s_invariant(4, 1), Rational(1 - 10 + 9));
  const auto b = parse_binding("B=1; c=2");
  EXPECT_EQ(evaluate_expression("S(B,c)", b), Gaussian(0));
}

TEST(Predicate, ClausesAlternativesAndChains) {
  const Predicate p("im(D) > 0; re(D) != 1; 0 < im(D) < 1 or D = 5i");
  EXPECT_TRUE(p.holds(parse_binding("D=2+1/2i")));
  EXPECT_TRUE(p.holds(parse_binding("D=5i")));
  const auto v = p.violations(parse_binding("D=1+2i"));
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(v[0], "re(D) != 1");
  EXPECT_TRUE(Predicate("").holds({}));
  EXPECT_TRUE(Predicate("lambda = 0 & D = 1/2").holds(parse_binding("lambda=0; D=1/2")));
  EXPECT_FALSE(Predicate("lambda = 0 & D = 1/2").holds(parse_binding("lambda=0; D=1")));
}

TEST(Predicate, OrderingNeedsRealOperands) {
  EXPECT_THROW(Predicate("D > 0").holds(parse_binding("D=i")), ValidationError);
  EXPECT_TRUE(Predicate("D = i").holds(parse_binding("D=i")));
  EXPECT_THROW(Predicate("D >> 0"), ParseError);
}

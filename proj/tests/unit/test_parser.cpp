#include <gtest/gtest.h>

#include <random>

#include "nilbc/error.hpp"
#include "nilbc/parser.hpp"

using namespace nilbc;

namespace {

// Expects a ParseError at line:column.
void expect_error_at(const std::function<void()>& fn, int line, int column,
                     const std::string& fragment = "") {
  try {
    fn();
    ADD_FAILURE() << "no ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(static_cast<int>(e.line()), line) << e.what();
    EXPECT_EQ(static_cast<int>(e.column()), column) << e.what();
    if (!fragment.empty()) EXPECT_NE(e.message().find(fragment), std::string::npos) << e.what();
  }
}

}  // namespace

TEST(ParseRealAlgebra, Shorthand) {
  const RealAlgebra a = parse_real_algebra("(0^4,13+42,14+23)");
  EXPECT_EQ(a.dim(), 6);
  EXPECT_EQ(render(a), "(0,0,0,0,13+42,14+23)");
  // 42 is stored as -24.
  EXPECT_EQ(a.d_of_e()[4].coefficient(BasisElement::from_indices({2, 4}, {})), Gaussian(-1));
  EXPECT_EQ(render(parse_real_algebra("( 0 , 0 , 0 , 12 , 23 , 14 - 35 )")), "(0,0,0,12,23,14+53)");
}

TEST(ParseRealAlgebra, RationalFactors) {
  const RealAlgebra a = parse_real_algebra("(0,0,0,1/2*12,2*13+34)");
  EXPECT_EQ(a.d_of_e()[3].coefficient(BasisElement::from_indices({1, 2}, {})), Gaussian::rational(1, 2));
  EXPECT_EQ(render(a), "(0,0,0,1/2*12,2*13+34)");
  EXPECT_EQ(render(parse_real_algebra("(0,0,-2*21)")), "(0,0,2*12)");
}

TEST(ParseRealAlgebra, Errors) {
  expect_error_at([] { parse_real_algebra("(0,0,0,0,12+11,0)"); }, 1, 14, "duplicate");
  expect_error_at([] { parse_real_algebra("(0,0,17)"); }, 1, 7, "out of range");
  expect_error_at([] { parse_real_algebra("(0,0,12"); }, 1, 8);
  expect_error_at([] { parse_real_algebra("(0,0,1x)"); }, 1, 7);
  EXPECT_THROW(parse_real_algebra("(0,0,12)", 6), ParseError);
  expect_error_at([] { parse_real_algebra("(0,0,12+21)"); }, 1, 9, "repeated");
}

TEST(ParseRealAlgebra, SourceOffsetsShiftErrors) {
  expect_error_at([] { parse_real_algebra(SourceText("(0,0,0,0,12+11,0)", 4, 10)); }, 4, 23);
}

TEST(ParseComplexStructure, TermsAndParameters) {
  const auto t = parse_complex_structure("(0, 0, w12 + w1~1 + lambda*w1~2 + D*w2~2)");
  EXPECT_EQ(t.n, 3);
  EXPECT_EQ(render(t), "(0,0,w12+w1~1+lambda*w1~2+D*w2~2)");
  const auto u = parse_complex_structure("(0,w1~3,w21-conj(B)*w1~2+abs(B-1)*w2~2)");
  EXPECT_EQ(render(u), "(0,w1~3,-w12-conj(B)*w1~2+abs(B-1)*w2~2)");
}

TEST(ParseComplexStructure, LiteralSignsBindToTheLeadingPart) {
  const auto t = parse_complex_structure("(0,0,w12-1+i*w1~1-i*w2~2+2-3i*w1~2)");
  const auto& e = t.d_of_omega[2];
  ASSERT_EQ(e.size(), 4u);
  EXPECT_EQ(std::get<Gaussian>(e[1].coeff), Gaussian(-1) + Gaussian::i());
  EXPECT_EQ(std::get<Gaussian>(e[2].coeff), -Gaussian::i());
  EXPECT_EQ(std::get<Gaussian>(e[3].coeff), Gaussian(2) - Gaussian::i() * Gaussian(3));
}

TEST(ParseComplexStructure, Errors) {
  expect_error_at([] { parse_complex_structure("(0,0,w~1~2)"); }, 1, 6, "(0,2)");
  expect_error_at([] { parse_complex_structure("(0,0,w11)"); }, 1, 8, "duplicate");
  expect_error_at([] { parse_complex_structure("(0,0,w14)"); }, 1, 8, "out of range");
  expect_error_at([] { parse_complex_structure("(0,0,D w12)"); }, 1, 8);
  expect_error_at([] { parse_complex_structure("(0,0,i*w12+conj(i)*w1~1)"); }, 1, 17);
  EXPECT_THROW(parse_complex_structure("(0,0,w12"), ParseError);
  EXPECT_THROW(parse_complex_structure("(0,0,w12) x"), ParseError);
}

TEST(ParseComplexStructure, RenderRoundTripOnRandomTemplates) {
  std::mt19937_64 rng(17);
  const std::vector<std::string> coeffs = {"", "2*", "1/3*", "i*", "1-i*", "1+2i*", "1/2i*",
                                           "D*", "conj(D)*", "abs(B)*", "abs(B-1)*", "lambda*"};
  const std::vector<std::string> factors = {"w12", "w1~1", "w1~2", "w2~1", "w2~2"};
  for (int trial = 0; trial < 200; ++trial) {
    std::string entry;
    for (const auto& f : factors) {
      if (rng() % 2) continue;
      const std::string sign = entry.empty() ? (rng() % 2 ? "-" : "") : (rng() % 2 ? "-" : "+");
      entry += sign + coeffs[rng() % coeffs.size()] + f;
    }
    if (entry.empty()) entry = "0";
    const std::string text = "(0,0," + entry + ")";
    const auto t = parse_complex_structure(text);
    const std::string once = render(t);
    EXPECT_EQ(parse_complex_structure(once), t) << text << " -> " << once;
    EXPECT_EQ(render(parse_complex_structure(once)), once);
  }
}

TEST(ParseBinding, ValuesAndModuli) {
  const auto b = parse_binding("D = -2/5+4/5i; lambda=0; absBm1 = 1");
  EXPECT_EQ(b.values.at("D"), Gaussian::rational(-2, 5) + Gaussian::i() * Gaussian::rational(4, 5));
  EXPECT_EQ(b.values.at("lambda"), Gaussian(0));
  EXPECT_EQ(b.moduli.at("absBm1"), Gaussian(1));
  EXPECT_EQ(parse_binding("D=-i").values.at("D"), -Gaussian::i());
  EXPECT_TRUE(parse_binding("").empty());
  EXPECT_TRUE(parse_binding("   ").empty());
}

TEST(ParseBinding, Errors) {
  EXPECT_THROW(parse_binding("D=1; D=2"), ParseError);
  EXPECT_THROW(parse_binding("i=1"), ParseError);
  EXPECT_THROW(parse_binding("D="), ParseError);
  EXPECT_THROW(parse_binding("D 1"), ParseError);
}

TEST(ParseBinding, RoundTrip) {
  for (const char* text : {"D=1/2+i; lambda=13/5", "B=-1-i; absB=3/2", "t=0; E=i"}) {
    const auto b = parse_binding(text);
    EXPECT_EQ(parse_binding(render(b)), b) << text;
  }
}

TEST(ParseGaussian, Literals) {
  EXPECT_EQ(parse_gaussian("1/4i"), Gaussian::i() * Gaussian::rational(1, 4));
  EXPECT_EQ(parse_gaussian("-3+i"), Gaussian(-3) + Gaussian::i());
  EXPECT_EQ(parse_gaussian("7"), Gaussian(7));
  EXPECT_THROW(parse_gaussian("1/0"), Error);
  EXPECT_THROW(parse_gaussian("x"), ParseError);
}

#include <gtest/gtest.h>

#include "nilbc/error.hpp"
#include "nilbc/model.hpp"
#include "nilbc/parser.hpp"

using namespace nilbc;

namespace {

BasisElement el(std::vector<int> h, std::vector<int> a = {}) { return BasisElement::from_indices(h, a); }

ComplexStructure iwasawa() { return parse_structure("(0,0,w12)"); }

}  // namespace

TEST(ComplexStructure, DifferentialOfConjugates) {
  const ComplexStructure cs = iwasawa();
  EXPECT_EQ(cs.d_holo(3), Form::monomial(3, el({1, 2})));
  EXPECT_EQ(cs.d_anti(3), Form::monomial(3, el({}, {1, 2})));
  // d(w3 ^ wb3) = w12 ^ wb3 - w3 ^ wb12
  Form want(3);
  want.add_term(el({1, 2}, {3}), 1);
  want.add_term(el({3}, {1, 2}), -1);
  EXPECT_EQ(cs.differential(Form::monomial(3, el({3}, {3}))), want);
}

TEST(ComplexStructure, RejectsZeroTwoComponents) {
  std::vector<Form> d(3, Form(3));
  d[2] = Form::monomial(3, el({}, {1, 2}));
  EXPECT_THROW(ComplexStructure(3, d), ValidationError);
  d[2] = Form::holomorphic(3, 1);
  EXPECT_THROW(ComplexStructure(3, d), ValidationError);
}

TEST(ComplexStructure, Abelian) {
  EXPECT_FALSE(iwasawa().is_abelian());
  EXPECT_TRUE(parse_structure("(0,0,w1~1+w2~2)").is_abelian());
  EXPECT_TRUE(parse_structure("(0,0,0)").is_abelian());
}

TEST(RealAlgebra, Validation) {
  std::vector<Form> d(2, Form(2));
  d[1] = Form::monomial(2, el({1, 2}), Gaussian::i());
  EXPECT_THROW(RealAlgebra(2, d), ValidationError);
  d[1] = Form::holomorphic(2, 1);
  EXPECT_THROW(RealAlgebra(2, d), ValidationError);
  d[1] = Form::monomial(2, el({1}, {2}));
  EXPECT_THROW(RealAlgebra(2, d), ValidationError);
}

TEST(DSquared, NonJacobiAlgebraHasLocatedResidual) {
  const RealAlgebra a = parse_real_algebra("(0,0,0,12,34,0)");
  const auto report = check_d_squared(a);
  ASSERT_EQ(report.residuals.size(), 1u);
  EXPECT_EQ(report.residuals[0].generator, "d(de5)");
  EXPECT_EQ(report.residuals[0].value, Form::monomial(6, el({1, 2, 3}), -1));
  EXPECT_TRUE(check_d_squared(parse_real_algebra("(0,0,0,0,13+42,14+23)")).ok());
}

TEST(DSquared, ComplexResidual) {
  const auto t = parse_complex_structure("(0,w1~1,w2~2)");
  try {
    instantiate(t, {});
    FAIL() << "expected d^2 != 0";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("d(dw3)"), std::string::npos) << e.what();
  }
}

TEST(Nilpotency, ClassificationAlgebrasAndCounterexample) {
  for (const char* text : {"(0,0,0,0,0,0)", "(0,0,0,0,13+42,14+23)", "(0,0,12,13,23,14+25)",
                           "(0,0,0,12,23,14-35)", "(0,0,0,12,13,14)"}) {
    EXPECT_TRUE(check_nilpotency(parse_real_algebra(text))) << text;
  }
  // de2 = e12: [e1,e2] is a multiple of e2, so the series never ends.
  EXPECT_FALSE(check_nilpotency(parse_real_algebra("(0,12)")));
}

TEST(Realify, IwasawaGivesH5) {
  EXPECT_EQ(render(realify(iwasawa())), "(0,0,0,0,13+42,14+23)");
  EXPECT_EQ(render(realify(parse_structure("(0,0,0)"))), "(0,0,0,0,0,0)");
  for (const char* s : {"(0,0,w12+w1~1+w1~2+2*w2~2)", "(0,w1~1,w12+w1~2)"}) {
    const RealAlgebra a = realify(parse_structure(s));
    EXPECT_TRUE(check_d_squared(a).ok()) << s;
    EXPECT_TRUE(check_nilpotency(a)) << s;
  }
}

TEST(ProductWithTorus, AddsClosedGenerator) {
  const ComplexStructure p = product_with_torus(iwasawa());
  EXPECT_EQ(p.n(), 4);
  EXPECT_TRUE(p.d_holo(4).is_zero());
  EXPECT_EQ(p.d_holo(3), Form::monomial(4, el({1, 2})));
}

TEST(Template, ParamsAndUnboundNames) {
  const auto t = parse_complex_structure("(0,0,w12+w1~1+lambda*w1~2+D*w2~2+conj(D)*w2~1)");
  EXPECT_EQ(t.params(), (std::vector<std::string>{"lambda", "D"}));
  EXPECT_EQ(unbound_names(t, parse_binding("D=i")), (std::vector<std::string>{"lambda"}));
  try {
    instantiate(t, parse_binding("lambda=0"));
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("D"), std::string::npos);
  }
}

TEST(Template, ModulusConsistency) {
  const auto t = parse_complex_structure("(0,0,w12+abs(B)*w1~1)");
  ASSERT_EQ(t.moduli().size(), 1u);
  EXPECT_EQ(t.moduli()[0].name(), "absB");
  EXPECT_EQ(unbound_names(t, parse_binding("B=3/5+4/5i")), (std::vector<std::string>{"absB"}));
  EXPECT_NO_THROW(instantiate(t, parse_binding("B=3/5+4/5i; absB=1")));
  EXPECT_THROW(instantiate(t, parse_binding("B=3/5+4/5i; absB=2")), ValidationError);
  EXPECT_THROW(instantiate(t, parse_binding("B=1; absB=-1")), ValidationError);

  const auto shifted = parse_complex_structure("(0,0,abs(B-1)*w12)");
  EXPECT_EQ(shifted.moduli()[0].name(), "absBm1");
  EXPECT_EQ(shifted.moduli()[0].to_source(), "abs(B-1)");
  EXPECT_NO_THROW(instantiate(shifted, parse_binding("B=4+4i; absBm1=5")));
}

TEST(Template, ResolveModulusName) {
  const auto b = parse_binding("B=1; Bx=2");
  const auto m = resolve_modulus_name("absBxm1", b);
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->param, "Bx");
  EXPECT_FALSE(resolve_modulus_name("absC", b).has_value());
}

TEST(Binding, RenderingIsSorted) {
  EXPECT_EQ(parse_binding("lambda=0; D=1/2+i").to_string(), "D=1/2+i; lambda=0");
  EXPECT_EQ(parse_binding("").to_string(), "");
}

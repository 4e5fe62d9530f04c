#include <gtest/gtest.h>

#include <map>
#include <set>

#include "nilbc/catalog.hpp"
#include "nilbc/error.hpp"
#include "nilbc/parser.hpp"

using namespace nilbc;

TEST(Catalog, CaseCounts) {
  const Catalog& c = Catalog::builtin();
  EXPECT_EQ(c.list(3).size(), 51u);
  EXPECT_EQ(c.list(4).size(), 21u);
  EXPECT_EQ(c.cases().size(), 72u);
  std::set<std::string> ids;
  for (const auto& k : c.cases()) EXPECT_TRUE(ids.insert(k.id).second) << k.id;
}

TEST(Catalog, AlgebraNames) {
  const std::map<std::string, std::string> want = {
      {"00", "h1"},  {"01a", "h2"},  {"02c", "h2"},  {"03", "h3"},   {"04", "h3"},
      {"05", "h4"},  {"06b", "h4"},  {"07a", "h5"},  {"08", "h5"},   {"09c", "h5"},
      {"10", "h6"},  {"11", "h7"},   {"12", "h8"},   {"13", "h9"},   {"14", "h10"},
      {"15a", "h11"}, {"16b", "h12"}, {"17c", "h13"}, {"18b", "h14"}, {"20a", "h15"},
      {"21e", "h15"}, {"22", "h16"},  {"23", "h19-"}, {"24", "h19-"}, {"25", "h26+"},
      {"26", "h26+"}, {"08_8D", "h5xT2"}, {"00_8D", "h1xT2"}};
  for (const auto& [id, name] : want) {
    const auto* k = Catalog::builtin().find(id);
    ASSERT_NE(k, nullptr) << id;
    EXPECT_EQ(k->algebra_name(), name) << id;
  }
  for (const auto& k : Catalog::builtin().cases()) EXPECT_NE(k.algebra_name(), "?") << k.id;
}

TEST(Catalog, RealisedAlgebraMatchesDeclared) {
  // The real algebra under each structure has the declared Betti numbers.
  for (const auto* k : Catalog::builtin().list(3)) {
    const RealAlgebra a = k->algebra();
    const RealAlgebra r = realify(k->structure());
    for (int j = 1; j <= 3; ++j) EXPECT_EQ(real_betti(a, j), real_betti(r, j)) << k->id;
    EXPECT_TRUE(check_nilpotency(r)) << k->id;
  }
}

TEST(Catalog, BcColumns) {
  const auto c3 = bc_columns(3);
  ASSERT_EQ(c3.size(), 14u);
  EXPECT_EQ(c3.front(), std::make_pair(1, 0));
  EXPECT_EQ(c3[3], std::make_pair(1, 1));
  EXPECT_EQ(c3.back(), std::make_pair(2, 3));
  const auto c4 = bc_columns(4);
  ASSERT_EQ(c4.size(), 13u);
  EXPECT_EQ(c4[5], std::make_pair(4, 0));
  EXPECT_EQ(c4.back(), std::make_pair(4, 3));
}

TEST(Catalog, SamplePending09d8D) {
  // (Im D)^2 = lambda^2 - 1 and 0 < Im D < (lambda^2 - 1)/2 at a rational point.
  const auto& k = Catalog::builtin().at("09d_8D");
  const auto b = k.sample();
  const Gaussian lambda = b.values.at("lambda"), d = b.values.at("D");
  EXPECT_EQ(d.im() * d.im(), lambda.re() * lambda.re() - 1);
  EXPECT_GT(d.im(), 0);
  EXPECT_LT(d.im(), (lambda.re() * lambda.re() - 1) / 2);
}

TEST(Catalog, ParseErrors) {
  EXPECT_THROW(Catalog::parse("x | y\n"), ParseError);
  const std::string row =
      "08 | (0,0,0,0,13+42,14+23) | (0,0,w12) |  |  | 2 2 3 4 3 1 6 6 1 2 8 2 3 3 | 4 8 10 | 2 6 8 | 0\n";
  EXPECT_EQ(Catalog::parse("# comment\n\n" + row).cases().size(), 1u);
  EXPECT_THROW(Catalog::parse(row + row), ValidationError);
  std::string bad = row;
  bad.replace(bad.find("2 6 8"), 5, "2 6 x");
  EXPECT_THROW(Catalog::parse(bad), ParseError);
  std::string shortrow = row;
  shortrow.replace(shortrow.find("4 8 10"), 6, "4 8");
  EXPECT_THROW(Catalog::parse(shortrow), ValidationError);
  // A sample outside its region is rejected.
  const std::string region =
      "01b | (0,0,0,0,12,34) | (0,0,w1~1+D*w2~2) | D=2i | im(D) = 1 | 2 2 1 4 1 1 6 6 1 3 7 3 3 3 | 4 8 10 | 2 3 8 | 1\n";
  EXPECT_THROW(Catalog::parse(region), ValidationError);
  EXPECT_THROW(Catalog::builtin().at("99z"), ValidationError);
}

TEST(Catalog, EvaluateReportsDiffs) {
  const std::string row =
      "08 | (0,0,0,0,13+42,14+23) | (0,0,w12) |  |  | 2 2 3 4 3 1 6 6 1 2 7 2 3 3 | 4 8 10 | 2 6 8 | 1\n";
  const Catalog c = Catalog::parse(row);
  const Evaluation e = evaluate(c.cases()[0]);
  ASSERT_EQ(e.diffs.size(), 2u);
  EXPECT_EQ(e.diffs[0], "h_BC^{2,2}: expected 7, got 8");
  EXPECT_EQ(e.diffs[1], "skt: expected yes, got no");
  EXPECT_TRUE(evaluate(Catalog::builtin().at("08")).matches());
}

TEST(Catalog, ParallelEvaluationKeepsOrder) {
  const auto cases = Catalog::builtin().list(3);
  const auto serial = evaluate_all(cases, 1);
  const auto parallel = evaluate_all(cases, 4);
  ASSERT_EQ(serial.size(), parallel.size());
  for (std::size_t k = 0; k < serial.size(); ++k) {
    EXPECT_EQ(serial[k].id, cases[k]->id);
    EXPECT_EQ(parallel[k].id, cases[k]->id);
    EXPECT_EQ(serial[k].table, parallel[k].table);
  }
}

TEST(SktFormulas, SamplesAndRows) {
  const auto& f = skt_formulas();
  ASSERT_EQ(f.size(), 8u);
  for (const auto& row : f) {
    const auto t = parse_complex_structure(row.template_text);
    for (const auto& s : row.samples) {
      const ParameterBinding b = parse_binding(s);
      const Form got = ddbar_of_standard_sum(instantiate(t, b));
      const Gaussian want = evaluate_expression(row.coefficient, b);
      EXPECT_EQ(got, Form::monomial(3, BasisElement::from_indices({1, 2}, {1, 2}), want))
          << row.row << " at " << s;
    }
  }
}

TEST(Curves, AllPointsMeetExpectations) {
  ASSERT_EQ(deformation_curves().size(), 3u);
  for (const auto& c : deformation_curves()) {
    for (const auto& r : evaluate_curve(c)) EXPECT_TRUE(r.diffs.empty()) << c.id << " " << r.label;
  }
  EXPECT_THROW(curve("Z"), ValidationError);
}

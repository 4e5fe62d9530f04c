#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "nilbc/error.hpp"
#include "nilbc_cli/cli.hpp"
#include "nilbc_cli/render.hpp"

namespace fs = std::filesystem;
using nilbc::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("nilbc_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, CheckValidFile) {
  const auto f = write("h5.def", "# h5 with the Iwasawa structure\nalgebra: (0^4,13+42,14+23)\nstructure: (0,0,w12)\n");
  const auto r = cli({"check", f});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("ok"), std::string::npos);
}

TEST_F(CliTest, CheckDuplicateIndexIsLocated) {
  const auto f = write("dup.def", "\nalgebra: (0,0,0,0,12+11,0)\n");
  const auto r = cli({"check", f});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find(":2:23:"), std::string::npos) << r.err;
}

TEST_F(CliTest, CheckNonJacobiListsResidual) {
  const auto f = write("nj.def", "algebra: (0,0,0,12,34,0)\n");
  const auto r = cli({"check", f});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("d(de5)"), std::string::npos) << r.out;
}

TEST_F(CliTest, CheckUnknownKey) {
  const auto f = write("k.def", "algebr: (0,0)\n");
  EXPECT_EQ(cli({"check", f}).code, 1);
  EXPECT_EQ(cli({"check", (dir_ / "missing.def").string()}).code, 1);
}

TEST_F(CliTest, TableIwasawaMarkdownMatchesRow08) {
  const auto f = write("iw.def", "structure: (0,0,w12)\n");
  const auto r = cli({"table", f, "--format", "md"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("| no | 2 | 2 | 3 | 4 | 3 | 1 | 6 | 6 | 1 | 2 | 8 | 2 | 3 | 3 | 4 | 8 | 10 | 2 | 6 | 8 |"),
            std::string::npos)
      << r.out;
  EXPECT_NE(r.out.find("ddbar-Lemma: FAILS at k=1"), std::string::npos);
}

TEST_F(CliTest, TableTorusJsonRoundTrips) {
  const auto f = write("t.def", "structure: (0,0,0)\n");
  const auto r = cli({"table", f, "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("SATISFIED"), std::string::npos);
  const auto doc = nilbc::cli::from_json(r.out);
  for (int d : doc.table.delta) EXPECT_EQ(d, 0);
  EXPECT_EQ(nilbc::cli::to_json(doc), r.out);
}

TEST_F(CliTest, JsonRoundTripAcrossCatalog) {
  for (const char* id : {"02c", "11", "15a", "26", "09d_8D"}) {
    const nilbc::CatalogCase& c = nilbc::Catalog::builtin().at(id);
    const auto cs = c.structure();
    nilbc::cli::TableDocument doc{c.template_text, c.binding_text, nilbc::full_table(cs), false};
    const std::string text = nilbc::cli::to_json(doc);
    EXPECT_EQ(nilbc::cli::from_json(text), doc) << id;
    EXPECT_EQ(nilbc::cli::to_json(nilbc::cli::from_json(text)), text) << id;
  }
  EXPECT_THROW(nilbc::cli::from_json("{"), nilbc::ParseError);
  EXPECT_THROW(nilbc::cli::from_json("{\"n\": 3}"), nilbc::ValidationError);
}

TEST_F(CliTest, TableCsvIsLongFormat) {
  const auto f = write("j1.def", "structure: (0,0,w1~1+D*w2~2)\nbinding: D=2+i\n");
  const auto r = cli({"table", f, "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("quantity,p,q,value\n", 0), 0u);
  EXPECT_NE(r.out.find("bott_chern,2,2,6\n"), std::string::npos);
  EXPECT_NE(r.out.find("betti,1,,4\n"), std::string::npos);
}

TEST_F(CliTest, TableUnboundParameterNamed) {
  const auto f = write("j1.def", "structure: (0,0,w1~1+D*w2~2)\n");
  const auto r = cli({"table", f});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("D"), std::string::npos);
  EXPECT_EQ(cli({"table", f, "--binding", "D=i"}).code, 0);
}

TEST_F(CliTest, CatalogGoldenCase) {
  const auto r = cli({"catalog", "--case", "09c", "--golden"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("| 09c | h5 | D=1/2; lambda=0 | yes |"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("| pass |"), std::string::npos);
}

TEST_F(CliTest, CatalogH7Footnote) {
  const auto r = cli({"catalog", "--case", "11"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("| 2 | 2 | 4 |"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find(nilbc::cli::kH7Footnote), std::string::npos);
  EXPECT_EQ(cli({"catalog", "--case", "08"}).out.find(nilbc::cli::kH7Footnote), std::string::npos);
}

TEST_F(CliTest, CatalogMismatchExitsThree) {
  const auto f = write("g.txt",
                       "08 | (0,0,0,0,13+42,14+23) | (0,0,w12) |  |  | 2 2 3 4 3 1 6 6 1 2 7 2 3 3 | 4 8 10 | 2 6 8 | 0\n");
  const auto r = cli({"catalog", "--golden", "--golden-file", f});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
  EXPECT_NE(r.out.find("h_BC^{2,2}: expected 7, got 8"), std::string::npos);
}

TEST_F(CliTest, CatalogFormats) {
  const auto csv = cli({"catalog", "--dim", "4", "--format", "csv"});
  ASSERT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out.rfind("case,n,algebra,sample,SKT,h^{1,0}_BC", 0), 0u) << csv.out.substr(0, 80);
  const auto json = cli({"catalog", "--case", "01b", "--format", "json", "--golden"});
  ASSERT_EQ(json.code, 0);
  EXPECT_NE(json.out.find("\"golden\": \"pass\""), std::string::npos);
  EXPECT_EQ(cli({"catalog", "--dim", "5"}).code, 1);
  EXPECT_EQ(cli({"catalog", "--case", "nope"}).code, 2);
}

TEST_F(CliTest, SktCases) {
  auto r = cli({"skt", "--case", "01b"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("coefficient of w12~1~2: 0\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("pluriclosed=true"), std::string::npos);
  r = cli({"skt", "--case", "08"});
  EXPECT_NE(r.out.find("coefficient of w12~1~2: -1\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("pluriclosed=false"), std::string::npos);
  r = cli({"skt", "--case", "06a", "--metric", "random", "--seed", "5"});
  EXPECT_NE(r.out.find("coefficient of w12~1~2: 2\n"), std::string::npos) << r.out;  // 2(D-1) at D=2
  EXPECT_NE(r.out.find("pluriclosed 0/20"), std::string::npos) << r.out;
  EXPECT_EQ(r.out, cli({"skt", "--case", "06a", "--metric", "random", "--seed", "5"}).out);
  EXPECT_EQ(cli({"skt"}).code, 1);
}

TEST_F(CliTest, SktFromFile) {
  const auto f = write("j2.def", "structure: (0,0,w12+w1~1+w1~2+D*w2~2)\n");
  const auto r = cli({"skt", f, "--binding", "D=1", "--format", "json"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"pluriclosed\": true"), std::string::npos) << r.out;
}

TEST_F(CliTest, CurvesAndFigureData) {
  const auto c = cli({"curves", "--id", "B", "--format", "csv"});
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(c.out.find("B,t=1/4,h^{2,2}_BC=7"), std::string::npos) << c.out;
  EXPECT_EQ(cli({"curves"}).code, 0);
  const auto f = cli({"figure-data"});
  EXPECT_EQ(f.code, 0);
  EXPECT_EQ(f.out.rfind("case_id,Delta1,Delta2,Delta3\n", 0), 0u);
  for (const char* row : {"\n08,2,6,8\n", "\n00,0,0,0\n", "\n20b,2,9,12\n"}) {
    EXPECT_NE(f.out.find(row), std::string::npos) << row;
  }
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(cli({}).code, 1);
  EXPECT_EQ(cli({"bogus"}).code, 1);
  EXPECT_EQ(cli({"table"}).code, 1);
  EXPECT_EQ(cli({"--help"}).code, 0);
}

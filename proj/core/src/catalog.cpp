#include "nilbc/catalog.hpp"

#include <atomic>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "golden_data.hpp"
#include "nilbc/error.hpp"
#include "nilbc/parser.hpp"

namespace nilbc {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<int> ints(const std::string& field, int line) {
  std::istringstream in(field);
  std::vector<int> out;
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ParseError("expected an integer, got '" + tok + "'", line, 1);
    }
  }
  return out;
}

const std::map<std::string, std::string>& algebra_names() {
  static const std::map<std::string, std::string> names = [] {
    const std::vector<std::pair<const char*, const char*>> six = {
        {"h1", "(0,0,0,0,0,0)"},         {"h2", "(0,0,0,0,12,34)"},
        {"h3", "(0,0,0,0,0,12+34)"},     {"h4", "(0,0,0,0,12,14+23)"},
        {"h5", "(0,0,0,0,13+42,14+23)"}, {"h6", "(0,0,0,0,12,13)"},
        {"h7", "(0,0,0,12,13,23)"},      {"h8", "(0,0,0,0,0,12)"},
        {"h9", "(0,0,0,0,12,14+25)"},    {"h10", "(0,0,0,12,13,14)"},
        {"h11", "(0,0,0,12,13,14+23)"},  {"h12", "(0,0,0,12,13,24)"},
        {"h13", "(0,0,0,12,13+14,24)"},  {"h14", "(0,0,0,12,14,13+42)"},
        {"h15", "(0,0,0,12,13+42,14+23)"}, {"h16", "(0,0,0,12,14,24)"},
        {"h19-", "(0,0,0,12,23,14-35)"}, {"h26+", "(0,0,12,13,23,14+25)"},
    };
    std::map<std::string, std::string> m;
    for (const auto& [name, text] : six) {
      m[render(parse_real_algebra(text))] = name;
      std::string eight = text;
      eight.insert(eight.size() - 1, ",0,0");
      m[render(parse_real_algebra(eight))] = std::string(name) + "xT2";
    }
    return m;
  }();
  return names;
}

std::string bidegree_label(const char* what, int p, int q) {
  return std::string(what) + "^{" + std::to_string(p) + "," + std::to_string(q) + "}";
}

void diff_list(std::vector<std::string>& out, const std::string& what, const std::vector<int>& want,
               const std::vector<int>& got, int first_index) {
  for (std::size_t k = 0; k < want.size() && k < got.size(); ++k) {
    if (want[k] != got[k]) {
      out.push_back(what + std::to_string(static_cast<int>(k) + first_index) + ": expected " +
                    std::to_string(want[k]) + ", got " + std::to_string(got[k]));
    }
  }
}

}  // namespace

std::vector<std::pair<int, int>> bc_columns(int n) {
  std::vector<std::pair<int, int>> cols;
  for (int k = 1; k <= 2 * n - 1; ++k) {
    for (int p = std::min(k, n); p >= 0; --p) {
      const int q = k - p;
      if (q > n) break;
      if (n == 3 || p >= q) cols.emplace_back(p, q);
    }
  }
  return cols;
}

GoldenRow golden_view(const CohomologyTable& t, bool skt) {
  GoldenRow row;
  for (const auto& [p, q] : bc_columns(t.n)) {
    row.bc.push_back(t.h_bc[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)]);
  }
  for (int k = 1; k <= t.n; ++k) {
    row.betti.push_back(t.betti[static_cast<std::size_t>(k)]);
    row.delta.push_back(t.delta[static_cast<std::size_t>(k)]);
  }
  row.skt = skt;
  return row;
}

// ---------------------------------------------------------------------------

int CatalogCase::n() const { return structure_template().n; }

std::string CatalogCase::algebra_name() const { return algebra_name_of(algebra()); }

RealAlgebra CatalogCase::algebra() const { return parse_real_algebra(algebra_text); }

ComplexStructureTemplate CatalogCase::structure_template() const {
  return parse_complex_structure(template_text);
}

ParameterBinding CatalogCase::sample() const {
  ParameterBinding b = parse_binding(binding_text);
  const auto bad = region.violations(b);
  if (!bad.empty()) {
    std::string msg = "sample for " + id + " violates its region:";
    for (const auto& v : bad) msg += " [" + v + "]";
    throw ValidationError(msg);
  }
  return b;
}

ComplexStructure CatalogCase::structure() const {
  return instantiate(structure_template(), sample());
}

std::string algebra_name_of(const RealAlgebra& a) {
  const auto& names = algebra_names();
  auto it = names.find(render(a));
  return it == names.end() ? "?" : it->second;
}

const Catalog& Catalog::builtin() {
  static const Catalog c = parse(detail::kBuiltinGolden);
  return c;
}

Catalog Catalog::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open golden file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

Catalog Catalog::parse(const std::string& text) {
  Catalog cat;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::vector<std::string> f;
    std::size_t start = 0;
    while (true) {
      const auto bar = t.find('|', start);
      f.push_back(trim(t.substr(start, bar == std::string::npos ? std::string::npos : bar - start)));
      if (bar == std::string::npos) break;
      start = bar + 1;
    }
    if (f.size() != 9) {
      throw ParseError("expected 9 '|'-separated fields, got " + std::to_string(f.size()), lineno, 1);
    }
    CatalogCase c;
    c.id = f[0];
    c.algebra_text = f[1];
    c.template_text = f[2];
    c.binding_text = f[3];
    c.region = Predicate(f[4]);
    c.golden.bc = ints(f[5], lineno);
    c.golden.betti = ints(f[6], lineno);
    c.golden.delta = ints(f[7], lineno);
    if (f[8] != "0" && f[8] != "1") throw ParseError("skt flag must be 0 or 1", lineno, 1);
    c.golden.skt = f[8] == "1";

    try {
      const int n = c.n();
      if (c.algebra().dim() != 2 * n) throw ValidationError("algebra dimension is not 2n");
      if (c.golden.bc.size() != bc_columns(n).size() ||
          c.golden.betti.size() != static_cast<std::size_t>(n) ||
          c.golden.delta.size() != static_cast<std::size_t>(n)) {
        throw ValidationError("golden row has the wrong number of entries");
      }
      (void)c.sample();
    } catch (const ParseError& e) {
      throw ParseError(c.id + ": " + e.message(), lineno, 1);
    } catch (const Error& e) {
      throw ValidationError("line " + std::to_string(lineno) + ": " + c.id + ": " + e.what());
    }
    if (cat.find(c.id)) throw ValidationError("duplicate case id " + c.id);
    cat.cases_.push_back(std::move(c));
  }
  return cat;
}

std::vector<const CatalogCase*> Catalog::list(std::optional<int> n) const {
  std::vector<const CatalogCase*> out;
  for (const auto& c : cases_) {
    if (!n || c.n() == *n) out.push_back(&c);
  }
  return out;
}

const CatalogCase* Catalog::find(const std::string& id) const {
  for (const auto& c : cases_) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

const CatalogCase& Catalog::at(const std::string& id) const {
  if (const auto* c = find(id)) return *c;
  throw ValidationError("unknown case " + id);
}

// ---------------------------------------------------------------------------

Evaluation evaluate(const CatalogCase& c) {
  const ComplexStructure cs = c.structure();
  Evaluation e;
  e.id = c.id;
  e.table = full_table(cs);
  e.skt = is_pluriclosed(cs, standard_form(cs.n()));
  const GoldenRow got = golden_view(e.table, e.skt);
  const auto cols = bc_columns(cs.n());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (c.golden.bc[k] != got.bc[k]) {
      e.diffs.push_back(bidegree_label("h_BC", cols[k].first, cols[k].second) + ": expected " +
                        std::to_string(c.golden.bc[k]) + ", got " + std::to_string(got.bc[k]));
    }
  }
  diff_list(e.diffs, "b_", c.golden.betti, got.betti, 1);
  diff_list(e.diffs, "Delta^", c.golden.delta, got.delta, 1);
  if (c.golden.skt != got.skt) {
    e.diffs.push_back(std::string("skt: expected ") + (c.golden.skt ? "yes" : "no") + ", got " +
                      (got.skt ? "yes" : "no"));
  }
  return e;
}

std::vector<Evaluation> evaluate_all(const std::vector<const CatalogCase*>& cases, int jobs) {
  std::vector<Evaluation> out(cases.size());
  std::vector<std::exception_ptr> errors(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < cases.size(); k = next++) {
      try {
        out[k] = evaluate(*cases[k]);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(cases.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

std::vector<std::string> skt_scan(const std::vector<const CatalogCase*>& cases) {
  std::vector<std::string> out;
  for (const auto* c : cases) {
    const ComplexStructure cs = c->structure();
    if (is_pluriclosed(cs, standard_form(cs.n()))) out.push_back(c->id);
  }
  return out;
}

// ---------------------------------------------------------------------------

const std::vector<SktFormula>& skt_formulas() {
  static const std::vector<SktFormula> formulas = {
      {"01", "(0,0,w1~1+D*w2~2)", "D+conj(D)", {"D=i", "D=2+i", "D=-1/3+i", "D=5/2+i"}},
      {"02", "(0,0,w12+w1~1+w1~2+D*w2~2)", "-2+D+conj(D)", {"D=1+i", "D=2+i", "D=-2/5+4/5i", "D=1/3+7i"}},
      {"05", "(0,0,w1~1+w1~2+1/4*w2~2)", "-1/2", {""}},
      {"06", "(0,0,w12+w1~1+w1~2+D*w2~2)", "2*(D-1)", {"D=1", "D=2", "D=-2", "D=1/8"}},
      {"07", "(0,0,w1~1+w1~2+D*w2~2)", "2*D-1", {"D=0", "D=1/8", "D=1/5"}},
      {"08", "(0,0,w12)", "-1", {""}},
      {"09", "(0,0,w12+w1~1+lambda*w1~2+D*w2~2)", "-1-lambda^2+D+conj(D)",
       {"lambda=0; D=1/2", "lambda=0; D=1/4+1/4i", "lambda=13/5; D=12/5i", "lambda=1/2; D=0",
        "lambda=0; D=1/2+1/2i"}},
      {"12", "(0,0,w1~1)", "0", {""}},
  };
  return formulas;
}

// ---------------------------------------------------------------------------

namespace {

ParameterBinding bind(std::initializer_list<std::pair<const char*, Gaussian>> kv) {
  ParameterBinding b;
  for (const auto& [k, v] : kv) b.values[k] = v;
  return b;
}

CurvePoint point_a(long num, long den, int h31) {
  const Gaussian t = Gaussian::rational(num, den);
  CurvePoint p;
  p.label = "t=" + t.to_string();
  p.binding = bind({{"t", t}, {"E", t * t + Gaussian::i()}});
  p.expect_bc = h31;
  p.expect_pluriclosed = true;
  return p;
}

CurvePoint point_b(long num, long den, int h22) {
  const Gaussian t = Gaussian::rational(num, den);
  CurvePoint p;
  p.label = "t=" + t.to_string();
  p.binding = bind({{"lambda", 0}, {"D", Gaussian::rational(1, 2) + Gaussian::i() * t}});
  p.expect_bc = h22;
  p.expect_pluriclosed = true;
  return p;
}

/// Omega with r = t = 1, s^2 = 1/2, u = i(D + s^2), v = z = 0, when positive.
std::optional<HermitianForm> balanced_candidate(const ParameterBinding& b) {
  const Gaussian d = b.values.at("D");
  const Rational s2(1, 2);
  HermitianForm h = HermitianForm::from_parameters(1, s2, 1, Gaussian::i() * (d + Gaussian(s2)), 0, 0);
  if (!is_positive(h)) return std::nullopt;
  return h;
}

}  // namespace

const std::vector<DeformationCurve>& deformation_curves() {
  static const std::vector<DeformationCurve> curves = [] {
    std::vector<DeformationCurve> out;

    DeformationCurve a;
    a.id = "A";
    a.description = "h2: dw3 = t w12 + w1~1 + t w1~2 + (t^2+i) w2~2; pluriclosed throughout, h31 jumps";
    a.algebra_text = "(0,0,0,0,12,34)";
    a.template_text = "(0,0,t*w12+w1~1+t*w1~2+E*w2~2)";
    a.bidegree = std::make_pair(3, 1);
    a.points = {point_a(0, 1, 3), point_a(1, 2, 2), point_a(1, 1, 2)};
    out.push_back(a);

    DeformationCurve b;
    b.id = "B";
    b.description = "h5: lambda = 0, D = 1/2 + i t; pluriclosed throughout, h22 jumps";
    b.algebra_text = "(0,0,0,0,13+42,14+23)";
    b.template_text = "(0,0,w12+w1~1+lambda*w1~2+D*w2~2)";
    b.bidegree = std::make_pair(2, 2);
    b.points = {point_b(0, 1, 8), point_b(1, 4, 7), point_b(1, 2, 7)};
    out.push_back(b);

    DeformationCurve c;
    c.id = "C";
    c.description = "h4: dw3 = w12 + w1~1 + w1~2 + D w2~2; balanced, neither, pluriclosed";
    c.algebra_text = "(0,0,0,0,12,14+23)";
    c.template_text = "(0,0,w12+w1~1+w1~2+D*w2~2)";
    c.metric = &balanced_candidate;
    CurvePoint c1;
    c1.label = "D=1/8";
    c1.binding = bind({{"D", Gaussian::rational(1, 8)}});
    c1.expect_balanced = true;
    c1.expect_pluriclosed = false;
    CurvePoint c2;
    c2.label = "D=1/4";
    c2.binding = bind({{"D", Gaussian::rational(1, 4)}});
    c2.expect_balanced = false;
    c2.expect_pluriclosed = false;
    CurvePoint c3;
    c3.label = "D=1";
    c3.binding = bind({{"D", 1}});
    c3.expect_pluriclosed = true;
    c.points = {c1, c2, c3};
    out.push_back(c);
    return out;
  }();
  return curves;
}

const DeformationCurve& curve(const std::string& id) {
  for (const auto& c : deformation_curves()) {
    if (c.id == id) return c;
  }
  throw ValidationError("unknown curve " + id);
}

std::vector<CurvePointResult> evaluate_curve(const DeformationCurve& c) {
  const ComplexStructureTemplate t = parse_complex_structure(c.template_text);
  const auto randoms = random_positive_forms(t.n, kRandomMetrics);
  std::vector<CurvePointResult> out;
  for (const auto& pt : c.points) {
    const ComplexStructure cs = instantiate(t, pt.binding);
    CurvePointResult r;
    r.label = pt.label;
    r.table = full_table(cs);
    const HermitianForm standard = standard_form(cs.n());
    r.pluriclosed_standard = is_pluriclosed(cs, standard);
    r.balanced_standard = is_balanced(cs, standard);
    if (c.metric) {
      if (auto h = c.metric(pt.binding)) r.balanced_special = is_balanced(cs, *h);
    }
    for (const auto& h : randoms) {
      r.random_pluriclosed += is_pluriclosed(cs, h) ? 1 : 0;
      r.random_balanced += is_balanced(cs, h) ? 1 : 0;
    }

    if (pt.expect_bc && c.bidegree) {
      const auto [p, q] = *c.bidegree;
      const int got = r.table.h_bc[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
      if (got != *pt.expect_bc) {
        r.diffs.push_back(bidegree_label("h_BC", p, q) + ": expected " +
                          std::to_string(*pt.expect_bc) + ", got " + std::to_string(got));
      }
    }
    if (pt.expect_pluriclosed) {
      const bool want = *pt.expect_pluriclosed;
      if (r.pluriclosed_standard != want) r.diffs.push_back("pluriclosed (standard metric) mismatch");
      // Metric independence: every sampled metric must agree.
      if (r.random_pluriclosed != (want ? kRandomMetrics : 0)) {
        r.diffs.push_back("pluriclosed (random metrics) mismatch");
      }
    }
    if (pt.expect_balanced) {
      if (*pt.expect_balanced) {
        if (!r.balanced_special.value_or(false) && !r.balanced_standard) {
          r.diffs.push_back("expected a balanced metric");
        }
      } else {
        if (r.balanced_standard || r.balanced_special.value_or(false) || r.random_balanced != 0) {
          r.diffs.push_back("expected no balanced metric among the tested ones");
        }
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace nilbc

#include "nilbc/parser.hpp"

#include <cctype>
#include <set>

#include "nilbc/error.hpp"

namespace nilbc {
namespace {

class Cursor {
 public:
  explicit Cursor(const SourceText& src) : src_(src) {}

  std::size_t pos() const { return pos_; }
  void reset(std::size_t p) { pos_ = p; }
  bool at_end() const { return pos_ >= src_.text.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.text.size() ? src_.text[pos_ + ahead] : '\0';
  }
  char get() { return src_.text[pos_++]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  /// Skips whitespace, then consumes c if present.
  bool accept(char c) {
    skip_ws();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c, const char* what) {
    if (!accept(c)) fail(std::string("expected ") + what + describe_here());
  }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t p, const std::string& msg) const {
    int line = src_.line;
    int col = src_.column;
    for (std::size_t k = 0; k < p && k < src_.text.size(); ++k) {
      if (src_.text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

  std::string describe_here() const {
    if (at_end()) return " but reached end of input";
    return std::string(" but found '") + peek() + "'";
  }

 private:
  const SourceText& src_;
  std::size_t pos_ = 0;
};

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string read_digits(Cursor& c) {
  std::string s;
  while (is_digit(c.peek())) s += c.get();
  return s;
}

/// integer [ "/" positive_integer ], no sign. Caller guarantees a leading digit.
Rational read_rational(Cursor& c) {
  Rational q(read_digits(c), 10);
  if (c.peek() == '/') {
    c.get();
    const std::size_t den_pos = c.pos();
    const std::string den = read_digits(c);
    if (den.empty()) c.fail_at(den_pos, "malformed rational: missing denominator");
    mpz_class d(den, 10);
    if (d == 0) c.fail_at(den_pos, "malformed rational: zero denominator");
    q = Rational(q.get_num(), d);
    q.canonicalize();
  }
  return q;
}

/// True when the cursor sits on something that starts a Gaussian literal.
bool gaussian_ahead(const Cursor& c) {
  if (is_digit(c.peek())) return true;
  return c.peek() == 'i' && !is_ident_char(c.peek(1));
}

/// gaussian := rational [ ("+"|"-") rational? "i" ] | rational? "i"
/// Greedy: "2-3i" is one literal; "2-3" leaves "-3" unread.
/// `negate_lead` applies a sign read by the caller to the first part only,
/// so "-2/5+4/5i" is -2/5 + 4/5 i.
Gaussian read_gaussian(Cursor& c, bool negate_lead = false) {
  const std::size_t start = c.pos();
  Rational lead(0);
  bool have_lead = false;
  if (is_digit(c.peek())) {
    lead = read_rational(c);
    have_lead = true;
  }
  if (c.peek() == 'i' && !is_ident_char(c.peek(1))) {
    c.get();
    if (!have_lead) lead = 1;
    return Gaussian(Rational(0), negate_lead ? Rational(-lead) : lead);
  }
  if (!have_lead) c.fail_at(start, "expected a number");
  if (negate_lead) lead = -lead;

  // Optional imaginary part; backtrack if what follows the sign is not "...i".
  const std::size_t save = c.pos();
  c.skip_ws();
  if (c.peek() == '+' || c.peek() == '-') {
    const bool neg = c.get() == '-';
    c.skip_ws();
    Rational im(1);
    if (is_digit(c.peek())) im = read_rational(c);
    if (c.peek() == 'i' && !is_ident_char(c.peek(1))) {
      c.get();
      return Gaussian(lead, neg ? Rational(-im) : im);
    }
  }
  c.reset(save);
  return Gaussian(lead);
}

Gaussian read_signed_gaussian(Cursor& c) {
  c.skip_ws();
  bool neg = false;
  if (c.peek() == '-' || c.peek() == '+') neg = c.get() == '-';
  c.skip_ws();
  if (!gaussian_ahead(c)) c.fail("malformed literal" + c.describe_here());
  return read_gaussian(c, neg);
}

std::string read_ident(Cursor& c) {
  std::string s;
  while (is_ident_char(c.peek())) s += c.get();
  return s;
}

struct IndexUse {
  int index;
  std::size_t pos;
};

void check_indices(const Cursor& c, const std::vector<IndexUse>& uses, int bound) {
  for (const auto& u : uses) {
    if (u.index < 1 || u.index > bound) {
      c.fail_at(u.pos, "index " + std::to_string(u.index) + " out of range 1.." +
                           std::to_string(bound));
    }
  }
}

// ---------------------------------------------------------------------------
// Real algebras

/// One entry; appends one Form per declared zero in "0^k".
void read_real_entry(Cursor& c, std::vector<std::vector<std::pair<BasisElement, Gaussian>>>& out,
                     std::vector<IndexUse>& uses) {
  c.skip_ws();
  // "0" or "0^k".
  if (c.peek() == '0' && !is_digit(c.peek(1)) && c.peek(1) != '/') {
    std::size_t save = c.pos();
    c.get();
    c.skip_ws();
    if (c.peek() == '^') {
      c.get();
      c.skip_ws();
      const std::size_t kpos = c.pos();
      const std::string k = read_digits(c);
      if (k.empty()) c.fail_at(kpos, "expected repeat count after '^'" + c.describe_here());
      const int count = std::stoi(k);
      if (count < 1) c.fail_at(kpos, "repeat count must be positive");
      for (int j = 0; j < count; ++j) out.emplace_back();
      return;
    }
    if (c.peek() == ',' || c.peek() == ')') {
      out.emplace_back();
      return;
    }
    c.reset(save);
  }

  std::vector<std::pair<BasisElement, Gaussian>> terms;
  bool first = true;
  while (true) {
    c.skip_ws();
    bool neg = false;
    if (c.peek() == '+' || c.peek() == '-') {
      neg = c.get() == '-';
    } else if (!first) {
      break;
    }
    c.skip_ws();
    first = false;

    Gaussian coef(1);
    // Optional "rational*" factor: digits followed by '/' or '*'.
    {
      const std::size_t save = c.pos();
      const std::string lead = read_digits(c);
      const bool fraction = c.peek() == '/';
      c.skip_ws();
      if (!lead.empty() && (fraction || c.peek() == '*')) {
        c.reset(save);
        coef = Gaussian(read_rational(c));
        c.expect('*', "'*' after coefficient");
        c.skip_ws();
      } else {
        c.reset(save);
      }
    }

    const std::size_t tpos = c.pos();
    if (!is_digit(c.peek())) c.fail("expected a two-digit term" + c.describe_here());
    const int a = c.get() - '0';
    if (!is_digit(c.peek())) c.fail("expected a two-digit term" + c.describe_here());
    const std::size_t bpos = c.pos();
    const int b = c.get() - '0';
    if (is_digit(c.peek())) c.fail("a term has exactly two indices");
    if (a == b) c.fail_at(bpos, "duplicate index " + std::to_string(b) + " in term");
    uses.push_back({a, tpos});
    uses.push_back({b, bpos});
    Gaussian value = neg ? -coef : coef;
    if (a > b) value = -value;
    const BasisElement e = BasisElement::from_indices({std::min(a, b), std::max(a, b)}, {});
    for (const auto& t : terms) {
      if (t.first == e) c.fail_at(tpos, "repeated term e" + std::to_string(std::min(a, b)) + std::to_string(std::max(a, b)));
    }
    terms.emplace_back(e, value);
  }
  out.push_back(std::move(terms));
}

// ---------------------------------------------------------------------------
// Complex templates

struct RawTerm {
  TemplateTerm term;
  std::vector<IndexUse> uses;
};

/// `negative` is the term sign; for literals it binds to the leading part, so
/// "-1+i*w12" is (-1+i) w12, matching how bindings read.
Coefficient read_coefficient(Cursor& c, bool negative) {
  if (gaussian_ahead(c)) return read_gaussian(c, negative);
  const std::size_t start = c.pos();
  if (!is_ident_start(c.peek())) c.fail("unknown token" + c.describe_here());
  const std::string name = read_ident(c);
  c.skip_ws();
  if ((name == "conj" || name == "abs") && c.peek() == '(') {
    c.get();
    c.skip_ws();
    const std::size_t ipos = c.pos();
    if (!is_ident_start(c.peek())) c.fail("expected a parameter name" + c.describe_here());
    const std::string param = read_ident(c);
    if (param == "i") c.fail_at(ipos, "'i' is the imaginary unit, not a parameter");
    if (name == "conj") {
      c.expect(')', "')'");
      return ConjParamRef{param};
    }
    std::optional<Gaussian> offset;
    if (c.accept('-')) {
      c.skip_ws();
      if (!gaussian_ahead(c)) c.fail("malformed literal" + c.describe_here());
      offset = read_gaussian(c);
    }
    c.expect(')', "')'");
    return ModulusRef{param, offset};
  }
  if (name == "conj" || name == "abs") c.fail_at(start, "'" + name + "' needs an argument");
  if (name == "i") c.fail_at(start, "unexpected 'i'");
  return ParamRef{name};
}

/// wfactor := "w" digit digit | "w" digit "~" digit, plus "w~a~b" for a located (0,2) error.
void read_wfactor(Cursor& c, RawTerm& raw) {
  const std::size_t start = c.pos();
  if (c.peek() != 'w') c.fail("expected a w-factor" + c.describe_here());
  c.get();
  if (c.peek() == '~') c.fail_at(start, "(0,2) term is not allowed: integrability forbids it");
  if (!is_digit(c.peek())) c.fail("expected an index after 'w'" + c.describe_here());
  const std::size_t apos = c.pos();
  const int a = c.get() - '0';
  bool conj_b = false;
  if (c.peek() == '~') {
    c.get();
    conj_b = true;
  }
  if (!is_digit(c.peek())) c.fail("expected a second index" + c.describe_here());
  const std::size_t bpos = c.pos();
  const int b = c.get() - '0';
  if (is_digit(c.peek()) || c.peek() == '~') c.fail("a w-factor has exactly two indices");
  raw.uses.push_back({a, apos});
  raw.uses.push_back({b, bpos});
  if (conj_b) {
    raw.term.element = BasisElement::from_indices({a}, {b});
    return;
  }
  if (a == b) c.fail_at(bpos, "duplicate index " + std::to_string(b) + " in term");
  raw.term.element = BasisElement::from_indices({std::min(a, b), std::max(a, b)}, {});
  if (a > b) raw.term.sign = -raw.term.sign;
}

std::vector<RawTerm> read_cform(Cursor& c) {
  std::vector<RawTerm> out;
  c.skip_ws();
  if (c.peek() == '0' && !is_digit(c.peek(1)) && c.peek(1) != '/') {
    const std::size_t save = c.pos();
    c.get();
    c.skip_ws();
    if (c.peek() == ',' || c.peek() == ')') return out;
    c.reset(save);
  }
  bool first = true;
  while (true) {
    c.skip_ws();
    int sign = 1;
    if (c.peek() == '+' || c.peek() == '-') {
      sign = c.get() == '-' ? -1 : 1;
    } else if (!first) {
      break;
    }
    c.skip_ws();
    first = false;

    RawTerm raw;
    raw.term.sign = sign;
    if (!(c.peek() == 'w' && (is_digit(c.peek(1)) || c.peek(1) == '~'))) {
      raw.term.coeff = read_coefficient(c, sign < 0);
      if (std::holds_alternative<Gaussian>(raw.term.coeff)) raw.term.sign = 1;
      c.expect('*', "'*' between coefficient and w-factor");
      c.skip_ws();
    }
    read_wfactor(c, raw);
    // A bare "-w12" becomes the literal -1.
    if (auto* g = std::get_if<Gaussian>(&raw.term.coeff)) {
      if (raw.term.sign < 0) *g = -*g;
      raw.term.sign = 1;
    }
    out.push_back(std::move(raw));
  }
  return out;
}

std::string render_template_term(const TemplateTerm& t, bool first) {
  const std::string factor = t.element.to_string();
  if (const auto* g = std::get_if<Gaussian>(&t.coeff)) {
    const Gaussian value = t.sign < 0 ? -*g : *g;
    return render_literal_term(value, factor, first);
  }
  std::string coeff;
  if (const auto* p = std::get_if<ParamRef>(&t.coeff)) coeff = p->name;
  if (const auto* p = std::get_if<ConjParamRef>(&t.coeff)) coeff = "conj(" + p->name + ")";
  if (const auto* m = std::get_if<ModulusRef>(&t.coeff)) coeff = m->to_source();
  const std::string s = t.sign < 0 ? "-" : (first ? "" : "+");
  return s + coeff + "*" + factor;
}

void finish(Cursor& c) {
  c.skip_ws();
  if (!c.at_end()) c.fail("unexpected trailing input" + c.describe_here());
}

}  // namespace

// ---------------------------------------------------------------------------

RealAlgebra parse_real_algebra(const SourceText& src, std::optional<int> expected_dim) {
  Cursor c(src);
  c.expect('(', "'('");
  std::vector<std::vector<std::pair<BasisElement, Gaussian>>> entries;
  std::vector<IndexUse> uses;
  do {
    read_real_entry(c, entries, uses);
  } while (c.accept(','));
  c.expect(')', "',' or ')'");
  const std::size_t end = c.pos();
  finish(c);

  const int dim = static_cast<int>(entries.size());
  if (dim > kMaxGenerators) c.fail_at(0, "at most 9 generators are supported");
  if (expected_dim && *expected_dim != dim) {
    c.fail_at(end - 1, "expected " + std::to_string(*expected_dim) + " entries, got " +
                           std::to_string(dim));
  }
  check_indices(c, uses, dim);

  std::vector<Form> d;
  for (const auto& terms : entries) {
    Form f(dim);
    for (const auto& [e, v] : terms) f.add_term(e, v);
    d.push_back(std::move(f));
  }
  return RealAlgebra(dim, std::move(d));
}

ComplexStructureTemplate parse_complex_structure(const SourceText& src) {
  Cursor c(src);
  c.expect('(', "'('");
  std::vector<std::vector<RawTerm>> entries;
  do {
    entries.push_back(read_cform(c));
  } while (c.accept(','));
  c.expect(')', "',' or ')'");
  finish(c);

  const int n = static_cast<int>(entries.size());
  if (n > kMaxGenerators) c.fail_at(0, "at most 9 generators are supported");
  ComplexStructureTemplate t;
  t.n = n;
  for (auto& entry : entries) {
    std::vector<TemplateTerm> terms;
    for (auto& raw : entry) {
      check_indices(c, raw.uses, n);
      terms.push_back(std::move(raw.term));
    }
    t.d_of_omega.push_back(std::move(terms));
  }
  return t;
}

ParameterBinding parse_binding(const SourceText& src) {
  Cursor c(src);
  ParameterBinding b;
  std::set<std::string> seen;
  c.skip_ws();
  while (!c.at_end()) {
    c.skip_ws();
    const std::size_t npos = c.pos();
    if (!is_ident_start(c.peek())) c.fail("expected a parameter name" + c.describe_here());
    const std::string name = read_ident(c);
    if (name == "i") c.fail_at(npos, "'i' is the imaginary unit, not a parameter");
    if (!seen.insert(name).second) c.fail_at(npos, "repeated assignment to " + name);
    c.expect('=', "'='");
    const Gaussian value = read_signed_gaussian(c);
    (name.rfind("abs", 0) == 0 ? b.moduli : b.values)[name] = value;
    c.skip_ws();
    if (c.at_end()) break;
    c.expect(';', "';'");
    c.skip_ws();
  }
  return b;
}

Gaussian parse_gaussian(const SourceText& src) {
  Cursor c(src);
  Gaussian g = read_signed_gaussian(c);
  finish(c);
  return g;
}

std::string render(const RealAlgebra& a) {
  std::string s = "(";
  for (int k = 0; k < a.dim(); ++k) {
    if (k > 0) s += ",";
    const Form& f = a.d_of_e()[static_cast<std::size_t>(k)];
    if (f.is_zero()) {
      s += "0";
      continue;
    }
    bool first = true;
    for (const auto& [e, v] : f.terms()) {
      const auto idx = e.holo_indices();
      const bool negative = sgn(v.re()) < 0;
      const Rational mag = negative ? Rational(-v.re()) : v.re();
      if (!first) s += "+";
      first = false;
      if (mag != 1) s += mag.get_str() + "*";
      s += negative ? std::to_string(idx[1]) + std::to_string(idx[0])
                    : std::to_string(idx[0]) + std::to_string(idx[1]);
    }
  }
  return s + ")";
}

std::string render(const ComplexStructureTemplate& t) {
  std::string s = "(";
  for (std::size_t k = 0; k < t.d_of_omega.size(); ++k) {
    if (k > 0) s += ",";
    const auto& entry = t.d_of_omega[k];
    if (entry.empty()) {
      s += "0";
      continue;
    }
    for (std::size_t j = 0; j < entry.size(); ++j) s += render_template_term(entry[j], j == 0);
  }
  return s + ")";
}

std::string render(const ParameterBinding& b) { return b.to_string(); }

ComplexStructure parse_structure(const SourceText& src, const ParameterBinding& b) {
  return instantiate(parse_complex_structure(src), b);
}

}  // namespace nilbc

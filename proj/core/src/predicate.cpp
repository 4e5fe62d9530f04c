#include "nilbc/predicate.hpp"

#include <cctype>

#include "nilbc/error.hpp"

namespace nilbc {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, const std::string& sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string::npos ? std::string::npos : pos - start)));
    if (pos == std::string::npos) break;
    start = pos + sep.size();
  }
  return out;
}

/// Evaluates while parsing. Without a binding it only checks syntax: names read
/// as 1 and domain errors are ignored.
class ExprParser {
 public:
  ExprParser(const std::string& text, const ParameterBinding* b) : s_(text), b_(b) {}

  bool dry() const { return b_ == nullptr; }

  Gaussian parse_expr() {
    Gaussian v = parse_term();
    while (true) {
      ws();
      if (peek() == '+') {
        ++pos_;
        v += parse_term();
      } else if (peek() == '-') {
        ++pos_;
        v -= parse_term();
      } else {
        return v;
      }
    }
  }

  /// Comparison operator at the cursor, or "" when there is none.
  std::string read_op() {
    ws();
    for (const char* op : {"!=", "<=", ">=", "=", "<", ">"}) {
      if (s_.compare(pos_, std::char_traits<char>::length(op), op) == 0) {
        pos_ += std::char_traits<char>::length(op);
        return op;
      }
    }
    return "";
  }

  bool at_end() {
    ws();
    return pos_ >= s_.size();
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " in \"" + s_ + "\"", 1, static_cast<int>(pos_) + 1);
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  Gaussian parse_term() {
    Gaussian v = parse_unary();
    while (true) {
      ws();
      if (peek() == '*') {
        ++pos_;
        v *= parse_unary();
      } else if (peek() == '/') {
        ++pos_;
        const Gaussian d = parse_unary();
        if (d.is_zero()) {
          if (dry()) continue;
          throw ArithmeticError("division by zero in \"" + s_ + "\"");
        }
        v /= d;
      } else {
        return v;
      }
    }
  }

  Gaussian parse_unary() {
    ws();
    if (peek() == '-') {
      ++pos_;
      return -parse_unary();
    }
    return parse_power();
  }

  Gaussian parse_power() {
    Gaussian base = parse_atom();
    ws();
    if (peek() != '^') return base;
    ++pos_;
    ws();
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) digits += s_[pos_++];
    if (digits.empty()) fail("expected an integer exponent");
    Gaussian r(1);
    for (int k = std::stoi(digits); k > 0; --k) r *= base;
    return r;
  }

  Gaussian parse_atom() {
    ws();
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (std::isdigit(static_cast<unsigned char>(peek()))) digits += s_[pos_++];
      const Rational q(digits, 10);
      if (peek() == 'i' && !ident_char(pos_ + 1)) {
        ++pos_;
        return Gaussian(Rational(0), q);
      }
      return Gaussian(q);
    }
    if (c == '(') {
      ++pos_;
      Gaussian v = parse_expr();
      expect(')');
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (ident_char(pos_)) name += s_[pos_++];
      ws();
      if (peek() == '(') return call(name);
      if (name == "i") return Gaussian::i();
      if (dry()) return Gaussian(1);
      if (auto v = b_->lookup(name)) return *v;
      throw ValidationError("unbound name '" + name + "' in \"" + s_ + "\"");
    }
    fail("unexpected character");
  }

  Gaussian call(const std::string& fn) {
    ++pos_;  // '('
    Gaussian x = parse_expr();
    if (fn == "S") {
      expect(',');
      Gaussian c = parse_expr();
      expect(')');
      if (!c.is_real()) {
        if (dry()) return Gaussian(0);
        throw ValidationError("S(B,c) needs a real c in \"" + s_ + "\"");
      }
      return Gaussian(s_invariant(x.norm(), c.re()));
    }
    expect(')');
    if (fn == "re") return Gaussian(x.re());
    if (fn == "im") return Gaussian(x.im());
    if (fn == "conj") return x.conj();
    if (fn == "absq") return Gaussian(x.norm());
    fail("unknown function '" + fn + "'");
  }

  bool ident_char(std::size_t p) const {
    return p < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[p])) || s_[p] == '_');
  }

  void expect(char c) {
    ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  const std::string& s_;
  const ParameterBinding* b_;
  std::size_t pos_ = 0;
};

bool compare(const Gaussian& a, const std::string& op, const Gaussian& b, const std::string& src) {
  if (op == "=") return a == b;
  if (op == "!=") return a != b;
  if (!a.is_real() || !b.is_real()) {
    throw ValidationError("ordering comparison of non-real values in \"" + src + "\"");
  }
  const int c = cmp(a.re(), b.re());
  if (op == "<") return c < 0;
  if (op == "<=") return c <= 0;
  if (op == ">") return c > 0;
  return c >= 0;
}

/// Null b checks syntax only.
bool chain_holds(const std::string& chain, const ParameterBinding* b) {
  ExprParser p(chain, b);
  Gaussian left = p.parse_expr();
  std::string op = p.read_op();
  if (op.empty()) p.fail("expected a comparison");
  bool ok = true;
  while (!op.empty()) {
    Gaussian right = p.parse_expr();
    if (!p.dry()) ok = ok && compare(left, op, right, chain);
    left = std::move(right);
    op = p.read_op();
  }
  if (!p.at_end()) p.fail("unexpected trailing input");
  return ok;
}

}  // namespace

Rational s_invariant(const Rational& abs_b_sq, const Rational& c) {
  const Rational c2 = c * c;
  const Rational m = abs_b_sq - 1;
  return Rational(c2 * c2 - 2 * (abs_b_sq + 1) * c2 + m * m);
}

Gaussian evaluate_expression(const std::string& text, const ParameterBinding& binding) {
  ExprParser p(text, &binding);
  Gaussian v = p.parse_expr();
  if (!p.at_end()) p.fail("unexpected trailing input");
  return v;
}

Predicate::Predicate(std::string text) : text_(std::move(text)) {
  if (trim(text_).empty()) return;
  for (auto& c : split(text_, ";")) {
    if (c.empty()) continue;
    for (const auto& alt : split(c, " or ")) {
      for (const auto& chain : split(alt, "&")) chain_holds(chain, nullptr);
    }
    clauses_.push_back(c);
  }
}

std::vector<std::string> Predicate::violations(const ParameterBinding& b) const {
  std::vector<std::string> out;
  for (const auto& clause : clauses_) {
    bool any = false;
    for (const auto& alt : split(clause, " or ")) {
      bool all = true;
      for (const auto& chain : split(alt, "&")) all = all && chain_holds(chain, &b);
      if (all) {
        any = true;
        break;
      }
    }
    if (!any) out.push_back(clause);
  }
  return out;
}

}  // namespace nilbc

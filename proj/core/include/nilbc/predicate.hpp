#pragma once

#include <string>
#include <vector>

#include "nilbc/gaussian.hpp"
#include "nilbc/model.hpp"

namespace nilbc {

/// S(B,c) = c^4 - 2(|B|^2+1)c^2 + (|B|^2-1)^2, taking |B|^2 directly.
Rational s_invariant(const Rational& abs_b_sq, const Rational& c);

/// Exact value of an arithmetic expression over Q(i).
///
///   expr  := term (("+"|"-") term)*      term := unary (("*"|"/") unary)*
///   unary := "-" unary | power            power := atom ["^" integer]
///   atom  := number ["i"] | "i" | name | "(" expr ")" | fn "(" expr ["," expr] ")"
///
/// Names resolve against the binding (parameters and moduli). Functions:
/// re, im, conj, absq (|x|^2) and S(B,c). Syntax errors throw ParseError, unbound
/// names ValidationError, division by zero ArithmeticError.
Gaussian evaluate_expression(const std::string& text, const ParameterBinding& binding);

/// Region constraints on a binding.
///
/// Clauses are separated by ";" and must all hold. A clause is a list of
/// alternatives joined by " or "; an alternative is a list of comparison chains
/// joined by "&". Chains use = != < <= > >= and may be chained ("0 < x < 1/4").
/// Ordering comparisons require real operands. Syntax is checked on construction.
class Predicate {
 public:
  Predicate() = default;
  explicit Predicate(std::string text);

  const std::string& text() const { return text_; }
  bool empty() const { return clauses_.empty(); }
  /// The clauses that fail for b, as written.
  std::vector<std::string> violations(const ParameterBinding& b) const;
  bool holds(const ParameterBinding& b) const { return violations(b).empty(); }

 private:
  std::string text_;
  std::vector<std::string> clauses_;
};

}  // namespace nilbc

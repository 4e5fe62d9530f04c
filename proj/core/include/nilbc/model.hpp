#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nilbc/form.hpp"

namespace nilbc {

/// Extension of generator differentials to all forms by the graded Leibniz rule:
/// d(x1^...^xk) = sum_i (-1)^(i-1) x1^..^d(xi)^..^xk.
class LeibnizDifferential {
 public:
  LeibnizDifferential(int n, std::vector<Form> d_holo, std::vector<Form> d_anti);

  int n() const { return n_; }
  Form apply(const BasisElement& e) const;
  Form apply(const Form& f) const;

 private:
  int n_;
  std::vector<Form> d_holo_;
  std::vector<Form> d_anti_;
};

/// Real nilpotent Lie algebra given by de^1..de^dim over the real coframe.
///
/// Real forms reuse Form with only "holomorphic" indices: index j stands for e^j
/// and every coefficient has zero imaginary part.
class RealAlgebra {
 public:
  RealAlgebra(int dim, std::vector<Form> d_of_e);

  int dim() const { return dim_; }
  const std::vector<Form>& d_of_e() const { return d_of_e_; }
  Form differential(const Form& f) const;

  friend bool operator==(const RealAlgebra& a, const RealAlgebra& b) {
    return a.dim_ == b.dim_ && a.d_of_e_ == b.d_of_e_;
  }

 private:
  int dim_;
  std::vector<Form> d_of_e_;
};

/// dw^1..dw^n of a (1,0)-coframe; d(wbar^j) is always conj(d(w^j)).
class ComplexStructure {
 public:
  /// Throws ValidationError when an entry has a component outside (2,0)+(1,1).
  ComplexStructure(int n, std::vector<Form> d_omega);

  int n() const { return n_; }
  const std::vector<Form>& d_omega() const { return d_omega_; }
  /// d(w^j), j is 1-based.
  const Form& d_holo(int j) const { return d_omega_.at(static_cast<std::size_t>(j - 1)); }
  Form d_anti(int j) const { return conjugate_form(d_holo(j)); }
  Form differential(const Form& f) const;
  const LeibnizDifferential& leibniz() const { return leibniz_; }

  /// Every dw^j has only (1,1) components.
  bool is_abelian() const;

  friend bool operator==(const ComplexStructure& a, const ComplexStructure& b) {
    return a.n_ == b.n_ && a.d_omega_ == b.d_omega_;
  }

 private:
  int n_;
  std::vector<Form> d_omega_;
  LeibnizDifferential leibniz_;
};

// ---------------------------------------------------------------------------
// Templates and bindings

/// |param - offset| (offset absent means |param|). Bound in a ParameterBinding
/// under name(): "absB", "absBm1".
struct ModulusRef {
  std::string param;
  std::optional<Gaussian> offset;

  std::string name() const;
  /// "abs(B-1)" as written in structure equations.
  std::string to_source() const;
  friend bool operator==(const ModulusRef&, const ModulusRef&) = default;
};

struct ParamRef {
  std::string name;
  friend bool operator==(const ParamRef&, const ParamRef&) = default;
};

struct ConjParamRef {
  std::string name;
  friend bool operator==(const ConjParamRef&, const ConjParamRef&) = default;
};

using Coefficient = std::variant<Gaussian, ParamRef, ConjParamRef, ModulusRef>;

/// sign * coefficient * element. For literal coefficients the sign is folded in
/// and always +1, so structurally equal templates render identically.
struct TemplateTerm {
  int sign = 1;
  Coefficient coeff = Gaussian(1);
  BasisElement element;
  friend bool operator==(const TemplateTerm&, const TemplateTerm&) = default;
};

struct ComplexStructureTemplate {
  int n = 0;
  std::vector<std::vector<TemplateTerm>> d_of_omega;

  /// Parameter names (direct or conjugated) in order of first appearance.
  std::vector<std::string> params() const;
  std::vector<ModulusRef> moduli() const;

  friend bool operator==(const ComplexStructureTemplate&,
                         const ComplexStructureTemplate&) = default;
};

struct ParameterBinding {
  std::map<std::string, Gaussian> values;
  /// Keys are ModulusRef::name() strings; values are nonnegative rationals.
  std::map<std::string, Gaussian> moduli;

  bool empty() const { return values.empty() && moduli.empty(); }
  /// Looks up a parameter or a modulus.
  std::optional<Gaussian> lookup(const std::string& name) const;
  /// "D=i; absBm1=1" (parameters first, then moduli, each sorted by name).
  std::string to_string() const;

  friend bool operator==(const ParameterBinding&, const ParameterBinding&) = default;
};

/// Resolves a modulus key such as "absBm1" against the bound parameter names.
std::optional<ModulusRef> resolve_modulus_name(const std::string& key,
                                               const ParameterBinding& binding);

/// Parameter and modulus names of the template that the binding leaves unset.
std::vector<std::string> unbound_names(const ComplexStructureTemplate& t,
                                       const ParameterBinding& b);

/// Substitutes the binding; validates coverage, modulus consistency and d^2 = 0.
ComplexStructure instantiate(const ComplexStructureTemplate& t, const ParameterBinding& b);

// ---------------------------------------------------------------------------
// Validation

struct Residual {
  std::string generator;  // "d(dw3)", "d(dw~3)", "d(de5)"
  Form value;
};

struct DSquaredReport {
  std::vector<Residual> residuals;
  bool ok() const { return residuals.empty(); }
};

DSquaredReport check_d_squared(const ComplexStructure& cs);
DSquaredReport check_d_squared(const RealAlgebra& a);

/// Lower central series of the bracket recovered from d reaches zero.
bool check_nilpotency(const RealAlgebra& a);

/// Underlying real algebra over e^1..e^2n with w^j = e^(2j-1) + i e^(2j).
RealAlgebra realify(const ComplexStructure& cs);

/// Appends a closed holomorphic generator w^(n+1).
ComplexStructure product_with_torus(const ComplexStructure& cs);

}  // namespace nilbc

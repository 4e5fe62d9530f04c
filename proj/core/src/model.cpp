#include "nilbc/model.hpp"

#include <algorithm>
#include <set>

#include "nilbc/error.hpp"
#include "nilbc/linalg.hpp"

namespace nilbc {
namespace {

std::string sanitize_offset(const Gaussian& g) {
  std::string s = g.to_string();
  for (char& ch : s) {
    if (ch == '/') ch = '_';
    if (ch == '+') ch = 'p';
    if (ch == '-') ch = 'n';
  }
  return s;
}

std::optional<Rational> desanitize_rational(std::string s) {
  if (s.empty()) return std::nullopt;
  bool negative = false;
  if (s[0] == 'n') {
    negative = true;
    s.erase(0, 1);
  }
  for (char& ch : s) {
    if (ch == '_') {
      ch = '/';
    } else if (ch < '0' || ch > '9') {
      return std::nullopt;
    }
  }
  Rational q;
  if (q.set_str(s, 10) != 0) return std::nullopt;
  if (q.get_den() == 0) return std::nullopt;
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

Gaussian modulus_argument(const ModulusRef& m, const Gaussian& value) {
  return m.offset ? value - *m.offset : value;
}

void validate_modulus(const std::string& key, const ModulusRef& ref, const Gaussian& m,
                      const ParameterBinding& b) {
  auto it = b.values.find(ref.param);
  if (it == b.values.end()) {
    throw ValidationError("modulus " + key + " refers to unbound parameter " + ref.param);
  }
  if (!m.is_real() || sgn(m.re()) < 0) {
    throw ValidationError("modulus " + key + " must be a nonnegative rational, got " +
                          m.to_string());
  }
  const Rational expected = modulus_argument(ref, it->second).norm();
  if (m.re() * m.re() != expected) {
    throw ValidationError("modulus " + key + "=" + m.to_string() + " is inconsistent: " +
                          ref.to_source() + "^2 = " + expected.get_str());
  }
}

}  // namespace

// ---------------------------------------------------------------------------

LeibnizDifferential::LeibnizDifferential(int n, std::vector<Form> d_holo,
                                         std::vector<Form> d_anti)
    : n_(n), d_holo_(std::move(d_holo)), d_anti_(std::move(d_anti)) {
  if (static_cast<int>(d_holo_.size()) != n_ ||
      (!d_anti_.empty() && static_cast<int>(d_anti_.size()) != n_)) {
    throw DimensionError("generator differential count does not match dimension");
  }
  for (const auto& f : d_holo_) {
    if (f.n() != n_) throw DimensionError("generator differential over the wrong coframe");
  }
  for (const auto& f : d_anti_) {
    if (f.n() != n_) throw DimensionError("generator differential over the wrong coframe");
  }
}

Form LeibnizDifferential::apply(const BasisElement& e) const {
  // Factors in canonical order: holomorphic ascending, then antiholomorphic ascending.
  struct Factor {
    bool anti;
    int index;
  };
  std::vector<Factor> factors;
  for (int j : e.holo_indices()) factors.push_back({false, j});
  for (int j : e.anti_indices()) factors.push_back({true, j});
  if (e.anti != 0 && d_anti_.empty()) {
    throw DimensionError("antiholomorphic factor in a real differential");
  }

  Form out(n_);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    BasisElement prefix;
    BasisElement suffix;
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (k == i) continue;
      BasisElement& target = k < i ? prefix : suffix;
      const auto bit = static_cast<std::uint16_t>(1u << (factors[k].index - 1));
      (factors[k].anti ? target.anti : target.holo) |= bit;
    }
    const auto idx = static_cast<std::size_t>(factors[i].index - 1);
    const Form& dx = factors[i].anti ? d_anti_[idx] : d_holo_[idx];
    if (dx.is_zero()) continue;
    Form term = wedge(wedge(Form::monomial(n_, prefix), dx), Form::monomial(n_, suffix));
    if (i % 2 == 1) term *= Gaussian(-1);
    out += term;
  }
  return out;
}

Form LeibnizDifferential::apply(const Form& f) const {
  if (f.n() != n_) throw DimensionError("form over the wrong coframe");
  Form out(n_);
  for (const auto& [e, c] : f.terms()) out += apply(e) * c;
  return out;
}

// ---------------------------------------------------------------------------

RealAlgebra::RealAlgebra(int dim, std::vector<Form> d_of_e)
    : dim_(dim), d_of_e_(std::move(d_of_e)) {
  if (static_cast<int>(d_of_e_.size()) != dim_) {
    throw DimensionError("real algebra needs one differential per generator");
  }
  for (std::size_t j = 0; j < d_of_e_.size(); ++j) {
    const Form& f = d_of_e_[j];
    if (f.n() != dim_) throw DimensionError("real differential over the wrong coframe");
    for (const auto& [e, c] : f.terms()) {
      if (e.anti != 0 || e.p() != 2) {
        throw ValidationError("de" + std::to_string(j + 1) + " must be a real 2-form");
      }
      if (!c.is_real()) {
        throw ValidationError("de" + std::to_string(j + 1) + " has a non-real coefficient");
      }
    }
  }
}

Form RealAlgebra::differential(const Form& f) const {
  return LeibnizDifferential(dim_, d_of_e_, {}).apply(f);
}

// ---------------------------------------------------------------------------

namespace {
std::vector<Form> conjugates(const std::vector<Form>& forms) {
  std::vector<Form> out;
  out.reserve(forms.size());
  for (const auto& f : forms) out.push_back(conjugate_form(f));
  return out;
}

const std::vector<Form>& checked_shape(int n, const std::vector<Form>& d_omega) {
  if (static_cast<int>(d_omega.size()) != n) {
    throw DimensionError("complex structure needs one differential per generator");
  }
  for (std::size_t j = 0; j < d_omega.size(); ++j) {
    if (d_omega[j].n() != n) throw DimensionError("differential over the wrong coframe");
    for (const auto& [e, c] : d_omega[j].terms()) {
      const bool allowed = (e.p() == 2 && e.q() == 0) || (e.p() == 1 && e.q() == 1);
      if (!allowed) {
        throw ValidationError("dw" + std::to_string(j + 1) + " has a (" +
                              std::to_string(e.p()) + "," + std::to_string(e.q()) +
                              ") component; only (2,0) and (1,1) are allowed");
      }
    }
  }
  return d_omega;
}
}  // namespace

ComplexStructure::ComplexStructure(int n, std::vector<Form> d_omega)
    : n_(n),
      d_omega_(std::move(checked_shape(n, d_omega))),
      leibniz_(n, d_omega_, conjugates(d_omega_)) {}

Form ComplexStructure::differential(const Form& f) const { return leibniz_.apply(f); }

bool ComplexStructure::is_abelian() const {
  return std::all_of(d_omega_.begin(), d_omega_.end(), [](const Form& f) {
    return bidegree_component(f, 2, 0).is_zero();
  });
}

// ---------------------------------------------------------------------------

std::string ModulusRef::name() const {
  std::string s = "abs" + param;
  if (offset) s += "m" + sanitize_offset(*offset);
  return s;
}

std::string ModulusRef::to_source() const {
  if (!offset) return "abs(" + param + ")";
  return "abs(" + param + "-" + offset->to_string() + ")";
}

std::vector<std::string> ComplexStructureTemplate::params() const {
  std::vector<std::string> out;
  auto add = [&](const std::string& s) {
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  };
  for (const auto& entry : d_of_omega) {
    for (const auto& term : entry) {
      if (const auto* p = std::get_if<ParamRef>(&term.coeff)) add(p->name);
      if (const auto* p = std::get_if<ConjParamRef>(&term.coeff)) add(p->name);
      if (const auto* m = std::get_if<ModulusRef>(&term.coeff)) add(m->param);
    }
  }
  return out;
}

std::vector<ModulusRef> ComplexStructureTemplate::moduli() const {
  std::vector<ModulusRef> out;
  for (const auto& entry : d_of_omega) {
    for (const auto& term : entry) {
      if (const auto* m = std::get_if<ModulusRef>(&term.coeff)) {
        if (std::find(out.begin(), out.end(), *m) == out.end()) out.push_back(*m);
      }
    }
  }
  return out;
}

std::optional<Gaussian> ParameterBinding::lookup(const std::string& name) const {
  if (auto it = values.find(name); it != values.end()) return it->second;
  if (auto it = moduli.find(name); it != moduli.end()) return it->second;
  return std::nullopt;
}

std::string ParameterBinding::to_string() const {
  std::string s;
  auto emit = [&](const std::string& k, const Gaussian& v) {
    if (!s.empty()) s += "; ";
    s += k + "=" + v.to_string();
  };
  for (const auto& [k, v] : values) emit(k, v);
  for (const auto& [k, v] : moduli) emit(k, v);
  return s;
}

std::optional<ModulusRef> resolve_modulus_name(const std::string& key,
                                               const ParameterBinding& binding) {
  if (key.rfind("abs", 0) != 0) return std::nullopt;
  const std::string rest = key.substr(3);
  std::vector<std::string> names;
  for (const auto& [k, v] : binding.values) names.push_back(k);
  std::sort(names.begin(), names.end(),
            [](const std::string& a, const std::string& b) { return a.size() > b.size(); });
  for (const auto& p : names) {
    if (rest.rfind(p, 0) != 0) continue;
    const std::string tail = rest.substr(p.size());
    if (tail.empty()) return ModulusRef{p, std::nullopt};
    if (tail[0] != 'm') continue;
    if (auto off = desanitize_rational(tail.substr(1))) return ModulusRef{p, Gaussian(*off)};
  }
  return std::nullopt;
}

std::vector<std::string> unbound_names(const ComplexStructureTemplate& t,
                                       const ParameterBinding& b) {
  std::vector<std::string> missing;
  for (const auto& p : t.params()) {
    if (!b.values.contains(p)) missing.push_back(p);
  }
  for (const auto& m : t.moduli()) {
    if (!b.moduli.contains(m.name())) missing.push_back(m.name());
  }
  return missing;
}

ComplexStructure instantiate(const ComplexStructureTemplate& t, const ParameterBinding& b) {
  if (auto missing = unbound_names(t, b); !missing.empty()) {
    std::string msg = "unbound parameter(s):";
    for (const auto& m : missing) msg += " " + m;
    throw ValidationError(msg);
  }
  for (const auto& [key, value] : b.moduli) {
    auto ref = resolve_modulus_name(key, b);
    if (!ref) throw ValidationError("cannot resolve modulus name " + key);
    validate_modulus(key, *ref, value, b);
  }

  std::vector<Form> d_omega;
  d_omega.reserve(t.d_of_omega.size());
  for (const auto& entry : t.d_of_omega) {
    Form f(t.n);
    for (const auto& term : entry) {
      Gaussian c = std::visit(
          [&](const auto& coeff) -> Gaussian {
            using T = std::decay_t<decltype(coeff)>;
            if constexpr (std::is_same_v<T, Gaussian>) {
              return coeff;
            } else if constexpr (std::is_same_v<T, ParamRef>) {
              return b.values.at(coeff.name);
            } else if constexpr (std::is_same_v<T, ConjParamRef>) {
              return b.values.at(coeff.name).conj();
            } else {
              return b.moduli.at(coeff.name());
            }
          },
          term.coeff);
      if (term.sign < 0) c = -c;
      f.add_term(term.element, c);
    }
    d_omega.push_back(std::move(f));
  }
  ComplexStructure cs(t.n, std::move(d_omega));
  const DSquaredReport report = check_d_squared(cs);
  if (!report.ok()) {
    std::string msg = "d^2 != 0:";
    for (const auto& r : report.residuals) msg += " " + r.generator + " = " + r.value.to_string();
    throw ValidationError(msg);
  }
  return cs;
}

// ---------------------------------------------------------------------------

DSquaredReport check_d_squared(const ComplexStructure& cs) {
  DSquaredReport report;
  for (int j = 1; j <= cs.n(); ++j) {
    Form r = cs.differential(cs.d_holo(j));
    if (!r.is_zero()) report.residuals.push_back({"d(dw" + std::to_string(j) + ")", r});
    Form rb = cs.differential(cs.d_anti(j));
    if (!rb.is_zero()) report.residuals.push_back({"d(dw~" + std::to_string(j) + ")", rb});
  }
  return report;
}

DSquaredReport check_d_squared(const RealAlgebra& a) {
  DSquaredReport report;
  LeibnizDifferential d(a.dim(), a.d_of_e(), {});
  for (int j = 1; j <= a.dim(); ++j) {
    Form r = d.apply(a.d_of_e()[static_cast<std::size_t>(j - 1)]);
    if (!r.is_zero()) report.residuals.push_back({"d(de" + std::to_string(j) + ")", r});
  }
  return report;
}

bool check_nilpotency(const RealAlgebra& a) {
  const int dim = a.dim();
  // [e_i, e_j] = sum_k c^k_ij e_k with c^k_ij = -(coefficient of e^ij in de^k).
  auto bracket = [&](int i, int j) {
    std::vector<Gaussian> v(static_cast<std::size_t>(dim));
    if (i == j) return v;
    const int lo = std::min(i, j);
    const int hi = std::max(i, j);
    const BasisElement e = BasisElement::from_indices({lo, hi}, {});
    for (int k = 1; k <= dim; ++k) {
      Gaussian c = -a.d_of_e()[static_cast<std::size_t>(k - 1)].coefficient(e);
      if (i > j) c = -c;
      v[static_cast<std::size_t>(k - 1)] = c;
    }
    return v;
  };

  ExactMatrix current = ExactMatrix::identity(static_cast<std::size_t>(dim));
  std::size_t rank = current.rows();
  while (rank > 0) {
    ExactMatrix next(static_cast<std::size_t>(dim) * current.rows(), static_cast<std::size_t>(dim));
    std::size_t row = 0;
    for (int i = 1; i <= dim; ++i) {
      for (std::size_t r = 0; r < current.rows(); ++r, ++row) {
        for (int j = 1; j <= dim; ++j) {
          const Gaussian& coef = current(r, static_cast<std::size_t>(j - 1));
          if (coef.is_zero()) continue;
          const auto br = bracket(i, j);
          for (int k = 0; k < dim; ++k) {
            next(row, static_cast<std::size_t>(k)) += coef * br[static_cast<std::size_t>(k)];
          }
        }
      }
    }
    ExactMatrix reduced = row_basis(next);
    if (reduced.rows() >= rank) return false;
    rank = reduced.rows();
    current = std::move(reduced);
  }
  return true;
}

RealAlgebra realify(const ComplexStructure& cs) {
  const int n = cs.n();
  const int dim = 2 * n;
  std::vector<Form> holo_image;
  std::vector<Form> anti_image;
  for (int j = 1; j <= n; ++j) {
    const Form re = Form::holomorphic(dim, 2 * j - 1);
    const Form im = Form::holomorphic(dim, 2 * j);
    holo_image.push_back(re + im * Gaussian::i());
    anti_image.push_back(re - im * Gaussian::i());
  }
  std::vector<Form> d_of_e;
  for (int j = 1; j <= n; ++j) {
    Form s(dim);
    for (const auto& [e, c] : cs.d_holo(j).terms()) {
      Form piece = Form::unit(dim, c);
      for (int h : e.holo_indices()) piece = wedge(piece, holo_image[static_cast<std::size_t>(h - 1)]);
      for (int k : e.anti_indices()) piece = wedge(piece, anti_image[static_cast<std::size_t>(k - 1)]);
      s += piece;
    }
    Form real_part(dim);
    Form imag_part(dim);
    for (const auto& [e, c] : s.terms()) {
      real_part.add_term(e, Gaussian(c.re()));
      imag_part.add_term(e, Gaussian(c.im()));
    }
    d_of_e.push_back(std::move(real_part));
    d_of_e.push_back(std::move(imag_part));
  }
  return RealAlgebra(dim, std::move(d_of_e));
}

ComplexStructure product_with_torus(const ComplexStructure& cs) {
  std::vector<Form> d;
  for (const auto& f : cs.d_omega()) d.push_back(f.embed(cs.n() + 1));
  d.emplace_back(cs.n() + 1);
  return ComplexStructure(cs.n() + 1, std::move(d));
}

}  // namespace nilbc

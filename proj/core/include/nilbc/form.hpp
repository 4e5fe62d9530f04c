#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilbc/gaussian.hpp"

namespace nilbc {

/// Largest coframe dimension. Indices are written as single digits 1..9.
inline constexpr int kMaxGenerators = 9;

/// Canonical basis element w^I ^ wbar^J of the bigraded exterior algebra.
///
/// Both index sets are stored as bitmasks (bit j-1 <-> index j); the canonical
/// order is all holomorphic factors ascending followed by all antiholomorphic
/// factors ascending.
struct BasisElement {
  std::uint16_t holo = 0;
  std::uint16_t anti = 0;

  static BasisElement from_indices(const std::vector<int>& holo, const std::vector<int>& anti);

  int p() const;
  int q() const;
  int degree() const { return p() + q(); }
  std::vector<int> holo_indices() const;
  std::vector<int> anti_indices() const;
  /// Largest index used, 0 for the unit element.
  int max_index() const;

  /// "w12", "w1~2", "w~1~2", "1" for the unit.
  std::string to_string() const;

  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

/// Lexicographic order on (holo tuple, anti tuple); this is the order of basis().
struct BasisOrder {
  bool operator()(const BasisElement& a, const BasisElement& b) const;
};

/// Product of two basis elements sorted into canonical order.
/// sign is 0 when an index repeats, otherwise +1 or -1.
struct MonomialProduct {
  int sign = 0;
  BasisElement element;
};
MonomialProduct wedge_monomials(const BasisElement& a, const BasisElement& b);

/// Finite sum of canonical basis elements with nonzero Gaussian coefficients.
class Form {
 public:
  using Terms = std::map<BasisElement, Gaussian, BasisOrder>;

  explicit Form(int n = 0);

  static Form unit(int n, const Gaussian& c = 1);
  static Form holomorphic(int n, int j);
  static Form antiholomorphic(int n, int j);
  static Form monomial(int n, const BasisElement& e, const Gaussian& c = 1);

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Gaussian coefficient(const BasisElement& e) const;

  /// Adds c*e, dropping the key when the coefficient cancels.
  void add_term(const BasisElement& e, const Gaussian& c);

  /// (p,q) when every term shares one bidegree; nullopt for 0 or mixed forms.
  std::optional<std::pair<int, int>> bidegree() const;

  /// Same form viewed in a coframe with more generators.
  Form embed(int new_n) const;

  /// "w12+D*w1~2" style rendering with literal coefficients.
  std::string to_string() const;

  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  Form& operator*=(const Gaussian& c);

  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(Form a, const Gaussian& c) { return a *= c; }
  friend Form operator*(const Gaussian& c, Form a) { return a *= c; }
  Form operator-() const { return *this * Gaussian(-1); }

  friend bool operator==(const Form& a, const Form& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const Form& o) const;

  int n_ = 0;
  Terms terms_;
};

/// Bilinear exterior product; throws DimensionError when a.n() != b.n().
Form wedge(const Form& a, const Form& b);

/// Complex conjugation: swaps holomorphic and antiholomorphic factors.
Form conjugate_form(const Form& a);

/// All C(n,p)*C(n,q) elements of bidegree (p,q) in lexicographic order.
std::vector<BasisElement> basis(int n, int p, int q);

Form bidegree_component(const Form& f, int p, int q);

/// Renders "c*factor"; `first` suppresses a leading '+'. Real or imaginary c has
/// its sign pulled to the front ("-1/2*w12"); a full complex c is written as one
/// literal whose sign binds to the real part ("-1+i*w12").
std::string render_literal_term(const Gaussian& c, const std::string& factor, bool first);

}  // namespace nilbc

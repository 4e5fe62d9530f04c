#pragma once

#include <cstdint>
#include <vector>

#include "nilbc/linalg.hpp"
#include "nilbc/model.hpp"

namespace nilbc {

/// Invariant Hermitian structure Omega = i * sum_{j,k} H_jk w^j ^ wbar^k.
///
/// H is Hermitian with positive rational diagonal. In the r,s,t,u,v,z
/// parametrization Omega = i(r^2 w1~1 + s^2 w2~2 + t^2 w3~3) + u w1~2 - conj(u) w2~1
/// + v w2~3 - conj(v) w3~2 + z w1~3 - conj(z) w3~1, so H_12 = -i u and so on.
class HermitianForm {
 public:
  /// H = identity.
  static HermitianForm standard(int n);
  /// Throws ValidationError unless m is square, Hermitian, with positive rational diagonal.
  static HermitianForm from_matrix(ExactMatrix m);
  /// n = 3 form from squared radii and the three off-diagonal coefficients.
  static HermitianForm from_parameters(const Rational& r2, const Rational& s2, const Rational& t2,
                                       const Gaussian& u, const Gaussian& v, const Gaussian& z);

  int n() const { return static_cast<int>(h_.rows()); }
  const ExactMatrix& matrix() const { return h_; }

  friend bool operator==(const HermitianForm&, const HermitianForm&) = default;

 private:
  explicit HermitianForm(ExactMatrix h) : h_(std::move(h)) {}
  ExactMatrix h_;
};

inline HermitianForm standard_form(int n) { return HermitianForm::standard(n); }

/// The real (1,1)-form of h.
Form to_two_form(const HermitianForm& h);

/// All leading principal minors of H are positive.
bool is_positive(const HermitianForm& h);

/// del delbar Omega, a (2,2)-form. DimensionError when the dimensions differ.
Form ddbar_of(const ComplexStructure& cs, const HermitianForm& h);

/// del delbar of sum_j w^j ^ wbar^j (no factor i).
Form ddbar_of_standard_sum(const ComplexStructure& cs);

/// del delbar Omega = 0. ValidationError for non-positive h.
bool is_pluriclosed(const ComplexStructure& cs, const HermitianForm& h);

/// d(Omega^(n-1)) = 0. ValidationError for non-positive h.
bool is_balanced(const ComplexStructure& cs, const HermitianForm& h);

/// Reproducible sample of positive forms: diagonal entries in 1..3, off-diagonal
/// entries with real and imaginary parts in {-1,0,1}; non-positive draws are rejected.
std::vector<HermitianForm> random_positive_forms(int n, int count, std::uint64_t seed = 20240607);

}  // namespace nilbc

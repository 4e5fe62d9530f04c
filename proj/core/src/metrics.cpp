#include "nilbc/metrics.hpp"

#include <random>

#include "nilbc/cohomology.hpp"
#include "nilbc/error.hpp"

namespace nilbc {
namespace {

void require_positive(const HermitianForm& h) {
  if (!is_positive(h)) throw ValidationError("Hermitian form is not positive definite");
}

void require_dimension(const ComplexStructure& cs, const HermitianForm& h) {
  if (cs.n() != h.n()) {
    throw DimensionError("metric has n=" + std::to_string(h.n()) + " but the structure has n=" +
                         std::to_string(cs.n()));
  }
}

}  // namespace

HermitianForm HermitianForm::standard(int n) {
  return HermitianForm(ExactMatrix::identity(static_cast<std::size_t>(n)));
}

HermitianForm HermitianForm::from_matrix(ExactMatrix m) {
  if (m.rows() != m.cols()) throw ValidationError("Hermitian matrix must be square");
  for (std::size_t j = 0; j < m.rows(); ++j) {
    if (!m(j, j).is_real() || sgn(m(j, j).re()) <= 0) {
      throw ValidationError("diagonal entry " + std::to_string(j + 1) +
                            " must be a positive rational");
    }
    for (std::size_t k = j + 1; k < m.cols(); ++k) {
      if (m(k, j) != m(j, k).conj()) throw ValidationError("matrix is not Hermitian");
    }
  }
  return HermitianForm(std::move(m));
}

HermitianForm HermitianForm::from_parameters(const Rational& r2, const Rational& s2,
                                             const Rational& t2, const Gaussian& u,
                                             const Gaussian& v, const Gaussian& z) {
  ExactMatrix m(3, 3);
  m(0, 0) = Gaussian(r2);
  m(1, 1) = Gaussian(s2);
  m(2, 2) = Gaussian(t2);
  const Gaussian minus_i = -Gaussian::i();
  m(0, 1) = minus_i * u;
  m(1, 2) = minus_i * v;
  m(0, 2) = minus_i * z;
  m(1, 0) = m(0, 1).conj();
  m(2, 1) = m(1, 2).conj();
  m(2, 0) = m(0, 2).conj();
  return from_matrix(std::move(m));
}

Form to_two_form(const HermitianForm& h) {
  const int n = h.n();
  Form f(n);
  for (int j = 1; j <= n; ++j) {
    for (int k = 1; k <= n; ++k) {
      const Gaussian& c = h.matrix()(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(k - 1));
      if (!c.is_zero()) f.add_term(BasisElement::from_indices({j}, {k}), Gaussian::i() * c);
    }
  }
  return f;
}

bool is_positive(const HermitianForm& h) {
  const auto n = static_cast<std::size_t>(h.n());
  for (std::size_t k = 1; k <= n; ++k) {
    ExactMatrix minor(k, k);
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < k; ++c) minor(r, c) = h.matrix()(r, c);
    }
    const Gaussian det = determinant(minor);
    if (!det.is_real() || sgn(det.re()) <= 0) return false;
  }
  return true;
}

Form ddbar_of(const ComplexStructure& cs, const HermitianForm& h) {
  require_dimension(cs, h);
  return del(cs, delbar(cs, to_two_form(h)));
}

Form ddbar_of_standard_sum(const ComplexStructure& cs) {
  Form sum(cs.n());
  for (int j = 1; j <= cs.n(); ++j) sum.add_term(BasisElement::from_indices({j}, {j}), 1);
  return del(cs, delbar(cs, sum));
}

bool is_pluriclosed(const ComplexStructure& cs, const HermitianForm& h) {
  require_dimension(cs, h);
  require_positive(h);
  return ddbar_of(cs, h).is_zero();
}

bool is_balanced(const ComplexStructure& cs, const HermitianForm& h) {
  require_dimension(cs, h);
  require_positive(h);
  const Form omega = to_two_form(h);
  Form power = Form::unit(cs.n());
  for (int k = 0; k < cs.n() - 1; ++k) power = wedge(power, omega);
  return cs.differential(power).is_zero();
}

std::vector<HermitianForm> random_positive_forms(int n, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  // Plain modulo keeps the sample identical across standard libraries.
  auto draw = [&](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  std::vector<HermitianForm> out;
  const auto size = static_cast<std::size_t>(n);
  while (static_cast<int>(out.size()) < count) {
    ExactMatrix m(size, size);
    for (std::size_t j = 0; j < size; ++j) {
      m(j, j) = Gaussian(draw(1, 3));
      for (std::size_t k = j + 1; k < size; ++k) {
        m(j, k) = Gaussian(Rational(draw(-1, 1)), Rational(draw(-1, 1)));
        m(k, j) = m(j, k).conj();
      }
    }
    HermitianForm h = HermitianForm::from_matrix(std::move(m));
    if (is_positive(h)) out.push_back(std::move(h));
  }
  return out;
}

}  // namespace nilbc

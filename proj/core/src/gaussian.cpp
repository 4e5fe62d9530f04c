#include "nilbc/gaussian.hpp"

#include "nilbc/error.hpp"

namespace nilbc {

Gaussian Gaussian::rational(long num, long den) {
  if (den == 0) throw ArithmeticError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return Gaussian(q);
}

Gaussian& Gaussian::operator+=(const Gaussian& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Gaussian& Gaussian::operator-=(const Gaussian& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Gaussian& Gaussian::operator*=(const Gaussian& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Gaussian& Gaussian::operator/=(const Gaussian& o) {
  if (o.is_zero()) throw ArithmeticError("division by zero");
  const Rational n = o.norm();
  Rational re = (re_ * o.re_ + im_ * o.im_) / n;
  Rational im = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string Gaussian::to_string() const {
  const int rs = sgn(re_);
  const int is = sgn(im_);
  if (is == 0) return re_.get_str();
  std::string imag;
  if (abs(im_) != 1) imag = Rational(abs(im_)).get_str();
  imag += "i";
  if (rs == 0) return (is < 0 ? "-" : "") + imag;
  return re_.get_str() + (is < 0 ? "-" : "+") + imag;
}

std::ostream& operator<<(std::ostream& os, const Gaussian& z) { return os << z.to_string(); }

}  // namespace nilbc

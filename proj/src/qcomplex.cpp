#include "lineadm/qcomplex.hpp"

#include <stdexcept>

namespace lineadm {

std::string QComplex::str() const {
  if (im.is_zero()) return re.str();
  std::string imag = (im == Rational(1)) ? "" : (im == Rational(-1) ? "-" : im.str());
  imag += "i";
  if (re.is_zero()) return imag;
  if (imag.front() == '-') return re.str() + " - " + imag.substr(1);
  return re.str() + " + " + imag;
}

QComplex& QComplex::operator+=(const QComplex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

QComplex& QComplex::operator-=(const QComplex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

QComplex& QComplex::operator*=(const QComplex& o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

QComplex& QComplex::operator/=(const QComplex& o) {
  Rational norm = o.re * o.re + o.im * o.im;
  if (norm.is_zero()) throw std::domain_error("division by zero");
  Rational r = (re * o.re + im * o.im) / norm;
  Rational i = (im * o.re - re * o.im) / norm;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

bool is_positive_integer(const QComplex& z) {
  return z.im.is_zero() && is_positive_integer(z.re);
}

}  // namespace lineadm

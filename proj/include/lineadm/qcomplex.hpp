#pragma once

// Gaussian rationals: complex numbers with exact rational real and
// imaginary parts.

#include <string>

#include "lineadm/rational.hpp"

namespace lineadm {

struct QComplex {
  Rational re;
  Rational im;

  QComplex() = default;
  QComplex(Rational r) : re(std::move(r)) {}
  QComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  QComplex(long long r) : re(r) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  std::string str() const;  // "a", "bi", or "a+bi" / "a-bi"

  QComplex operator-() const { return {-re, -im}; }
  QComplex& operator+=(const QComplex& o);
  QComplex& operator-=(const QComplex& o);
  QComplex& operator*=(const QComplex& o);
  QComplex& operator/=(const QComplex& o);  // throws std::domain_error on /0

  friend QComplex operator+(QComplex a, const QComplex& b) { return a += b; }
  friend QComplex operator-(QComplex a, const QComplex& b) { return a -= b; }
  friend QComplex operator*(QComplex a, const QComplex& b) { return a *= b; }
  friend QComplex operator/(QComplex a, const QComplex& b) { return a /= b; }

  friend bool operator==(const QComplex& a, const QComplex& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const QComplex& a, const QComplex& b) { return !(a == b); }
};

// True iff z is real, integral, and strictly positive.
bool is_positive_integer(const QComplex& z);

}  // namespace lineadm

#pragma once

// Arbitrary-precision rational numbers, always in lowest terms with a
// positive denominator. Backed by boost cpp_int.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace lineadm {

using Int = boost::multiprecision::cpp_int;

class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(Int n) : num_(std::move(n)), den_(1) {}
  Rational(Int num, Int den);  // throws std::domain_error if den == 0

  // Accepts "p", "-p", or "p/q" with optional sign on p; q must be positive
  // digits. Throws std::invalid_argument on anything else.
  static Rational parse(std::string_view text);

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  std::string str() const;  // "p" or "p/q"

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // throws std::domain_error on /0

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    Int lhs = a.num_ * b.den_;
    Int rhs = b.num_ * a.den_;
    return lhs < rhs;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

 private:
  void reduce();

  Int num_;
  Int den_;  // invariant: den_ > 0, gcd(|num_|, den_) = 1
};

// Largest integer <= r.
Int floor_int(const Rational& r);

// r - floor(r), always in [0, 1).
Rational fractional_part(const Rational& r);

bool is_positive_integer(const Rational& r);

}  // namespace lineadm

#include "lineadm/rational.hpp"

#include <stdexcept>
#include <utility>

namespace lineadm {

namespace {

// cpp_int's string constructor treats a leading 0 as an octal prefix, so
// digit runs are validated and stripped of leading zeros first.
Int parse_digits(std::string_view digits, std::string_view whole) {
  if (digits.empty()) {
    throw std::invalid_argument("bad rational '" + std::string(whole) + "'");
  }
  for (char ch : digits) {
    if (ch < '0' || ch > '9') {
      throw std::invalid_argument("bad rational '" + std::string(whole) + "'");
    }
  }
  std::size_t first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return Int(0);
  return Int(std::string(digits.substr(first)));
}

}  // namespace

Rational::Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::domain_error("zero denominator");
  reduce();
}

void Rational::reduce() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  Int g = gcd(abs(num_), den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::size_t slash = s.find('/');
  Int num;
  Int den = 1;
  if (slash == std::string_view::npos) {
    num = parse_digits(s, text);
  } else {
    num = parse_digits(s.substr(0, slash), text);
    den = parse_digits(s.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("bad rational '" + std::string(text) + "': zero denominator");
  }
  if (negative) num = -num;
  return Rational(std::move(num), std::move(den));
}

std::string Rational::str() const {
  std::string out = num_.str();
  if (den_ != 1) {
    out += '/';
    out += den_.str();
  }
  return out;
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  reduce();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  reduce();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  reduce();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  reduce();
  return *this;
}

Int floor_int(const Rational& r) {
  Int q = r.num() / r.den();  // truncates toward zero
  if (r.num() < 0 && q * r.den() != r.num()) --q;
  return q;
}

Rational fractional_part(const Rational& r) {
  Int f = floor_int(r);
  Int num = r.num() - f * r.den();
  return Rational(std::move(num), r.den());
}

bool is_positive_integer(const Rational& r) {
  return r.is_integer() && r.num() > 0;
}

}  // namespace lineadm

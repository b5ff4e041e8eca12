#include "sumkit/exact_bound.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>

namespace sumkit {

namespace {

__extension__ typedef __int128 Wide;

Int narrow(Wide v) {
  if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min())
    throw Error(Errc::OutOfRange, "rational arithmetic overflow");
  return static_cast<Int>(v);
}

Rational make(Wide num, Wide den) {
  if (den < 0) num = -num, den = -den;
  Wide a = num < 0 ? -num : num, b = den;
  while (b != 0) {
    const Wide t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) num /= a, den /= a;
  return Rational(narrow(num), narrow(den));
}

int wide_sign(Wide v) { return (v > 0) - (v < 0); }

}  // namespace

Rational::Rational(Int num, Int den) {
  if (den == 0) throw Error(Errc::InvalidArgument, "zero denominator");
  if (den < 0) num = -num, den = -den;
  const Int g = std::gcd(num, den);
  num_ = g > 1 ? num / g : num;
  den_ = g > 1 ? den / g : den;
}

std::string Rational::to_string() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(Rational x, Rational y) {
  return make(Wide{x.num_} * y.den_ + Wide{y.num_} * x.den_, Wide{x.den_} * y.den_);
}

Rational operator-(Rational x, Rational y) { return x + (-y); }

Rational operator*(Rational x, Rational y) { return make(Wide{x.num_} * y.num_, Wide{x.den_} * y.den_); }

std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
  return Wide{x.num_} * y.den_ <=> Wide{y.num_} * x.den_;
}

ExactBound ExactBound::golden(Rational q, Rational p) {
  const Rational half(1, 2);
  return {p + q * half, q * half};
}

int ExactBound::sign() const {
  const int sa = a_.sign(), sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: compare a^2 with 5 b^2, i.e. an^2 bd^2 vs 5 bn^2 ad^2
  const Wide lhs = Wide{a_.num()} * a_.num() * b_.den() * b_.den();
  const Wide rhs = Wide{5} * b_.num() * b_.num() * a_.den() * a_.den();
  const int mag = wide_sign(lhs - rhs);  // > 0 when |a| dominates
  return mag > 0 ? sa : (mag < 0 ? sb : 0);
}

long double ExactBound::to_long_double() const {
  return a_.to_long_double() + b_.to_long_double() * std::sqrt(5.0L);
}

bool ExactBound::satisfied_by(Int observed) const { return (ExactBound(observed) - *this).sign() >= 0; }

bool ExactBound::attained_by(Int observed) const { return is_rational() && a_ == Rational(observed); }

std::strong_ordering operator<=>(const ExactBound& x, const ExactBound& y) {
  const int s = (x - y).sign();
  return s < 0 ? std::strong_ordering::less : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string ExactBound::exact_string() const {
  const Rational q = theta_coeff(), p = theta_const();
  if (q.sign() == 0) return p.to_string();
  std::string out;
  if (q == Rational(1))
    out = "θ";
  else if (q == Rational(-1))
    out = "-θ";
  else
    out = q.to_string() + "θ";
  if (p.sign() > 0) out += "+" + p.to_string();
  if (p.sign() < 0) out += p.to_string();
  return out;
}

std::string ExactBound::decimal_string() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15Lg", to_long_double());
  return buf;
}

std::string ExactBound::to_string() const {
  if (is_rational()) return exact_string();
  return exact_string() + " ≈ " + decimal_string();
}

}  // namespace sumkit

#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "sumkit/int_set.hpp"

namespace sumkit {

/// Reduced fraction num/den with den > 0.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(Int num, Int den = 1);

  [[nodiscard]] Int num() const noexcept { return num_; }
  [[nodiscard]] Int den() const noexcept { return den_; }
  [[nodiscard]] int sign() const noexcept { return (num_ > 0) - (num_ < 0); }
  [[nodiscard]] bool is_integer() const noexcept { return den_ == 1; }
  [[nodiscard]] long double to_long_double() const { return static_cast<long double>(num_) / den_; }
  /// "7", "-7/2"
  [[nodiscard]] std::string to_string() const;

  friend Rational operator+(Rational x, Rational y);
  friend Rational operator-(Rational x, Rational y);
  friend Rational operator*(Rational x, Rational y);
  Rational operator-() const { return Rational(-num_, den_); }
  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y);

 private:
  Int num_ = 0;
  Int den_ = 1;
};

/// Exact value a + b*sqrt(5) with rational a, b. Every bound in the registry
/// has this form; theta = (1 + sqrt 5)/2 is a = 1/2, b = 1/2.
class ExactBound {
 public:
  constexpr ExactBound() = default;
  ExactBound(Rational a, Rational b = Rational(0)) : a_(a), b_(b) {}
  ExactBound(Int n) : a_(n) {}

  /// p + q*theta
  static ExactBound golden(Rational q, Rational p);
  static ExactBound theta() { return golden(1, 0); }

  [[nodiscard]] const Rational& rational_part() const noexcept { return a_; }
  [[nodiscard]] const Rational& surd_coeff() const noexcept { return b_; }
  /// Coefficients in the basis {1, theta}: value = theta_const + theta_coeff*theta.
  [[nodiscard]] Rational theta_coeff() const { return b_ * Rational(2); }
  [[nodiscard]] Rational theta_const() const { return a_ - b_; }
  [[nodiscard]] bool is_rational() const noexcept { return b_.sign() == 0; }

  /// Exact sign of a + b*sqrt(5).
  [[nodiscard]] int sign() const;
  [[nodiscard]] long double to_long_double() const;

  /// observed >= *this, decided exactly.
  [[nodiscard]] bool satisfied_by(Int observed) const;
  /// observed == *this; only possible when the surd part vanishes.
  [[nodiscard]] bool attained_by(Int observed) const;

  /// Exact form in the theta basis, e.g. "10θ+4", "4θ-1", "7/2".
  [[nodiscard]] std::string exact_string() const;
  /// 15 significant digits.
  [[nodiscard]] std::string decimal_string() const;
  /// "10θ+4 ≈ 20.1803398874989"; plain number when rational.
  [[nodiscard]] std::string to_string() const;

  friend ExactBound operator+(const ExactBound& x, const ExactBound& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
  friend ExactBound operator-(const ExactBound& x, const ExactBound& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
  friend ExactBound operator*(const ExactBound& x, Rational s) { return {x.a_ * s, x.b_ * s}; }
  friend bool operator==(const ExactBound&, const ExactBound&) = default;
  friend std::strong_ordering operator<=>(const ExactBound& x, const ExactBound& y);

 private:
  Rational a_;
  Rational b_;
};

}  // namespace sumkit

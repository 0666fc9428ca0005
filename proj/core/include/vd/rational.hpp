#pragma once

#include <compare>
#include <iosfwd>
#include <string>

namespace vd {

// Exact rational number used for all payoff arithmetic. Game values in this
// library are small integers or even splits of a reward pool, and weak
// equilibria hinge on exact payoff ties, so equality must not depend on
// floating-point rounding.
//
// Invariants: den > 0, gcd(|num|, den) == 1. Intermediate products run in
// 128-bit arithmetic; a result that does not fit in 64 bits after
// normalization throws std::overflow_error.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(long long value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long long num, long long den);

  // Nearest rational with a small denominator (continued fractions). Meant
  // for boundary input such as JSON floating literals; 2.5 becomes 5/2 and
  // 0.1 becomes 1/10. Throws std::invalid_argument on non-finite input.
  static Rational from_double(double x);

  // Accepts "7", "-3", "5/2" and decimal notation "2.5". Throws
  // std::invalid_argument on anything else.
  static Rational parse(const std::string& text);

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  // Canonical form: "7", "-1/2". parse(str()) round-trips exactly.
  std::string str() const;

  Rational operator-() const { return Rational(-num_, den_); }

  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);  // throws std::domain_error on /0

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  long long num_ = 0;
  long long den_ = 1;
};

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

}  // namespace vd

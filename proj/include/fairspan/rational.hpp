#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace fairspan {

/// Arbitrary-precision rational number in canonical form (denominator > 0,
/// gcd(|num|, den) = 1). All arithmetic is exact; there is no floating-point
/// path anywhere in the engine.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long long value) : q_(static_cast<long>(value)) {}
  Rational(long long numerator, long long denominator);
  explicit Rational(mpq_class q);

  /// Parses "p/q" (q > 0), a plain integer, or a decimal literal such as
  /// "0.75" (converted exactly to 3/4). Throws std::invalid_argument on
  /// anything else.
  static Rational parse(std::string_view text);

  /// Canonical string: "p/q", or just "p" when the denominator is 1.
  std::string str() const;

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sgn(q_) == 0; }
  Rational abs() const;

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  const mpq_class& value() const { return q_; }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
  friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
  friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
  friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) != 0; }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) >= 0; }

 private:
  mpq_class q_;
};

/// r^k by repeated multiplication (k is small everywhere this is used).
Rational pow(const Rational& r, unsigned exponent);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace fairspan

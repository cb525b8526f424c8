#include "fairspan/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace fairspan {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_digits(std::string_view s) {
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long long numerator, long long denominator) {
  if (denominator == 0) throw std::domain_error("Rational: zero denominator");
  q_ = mpq_class(mpz_class(static_cast<long>(numerator)),
                 mpz_class(static_cast<long>(denominator)));
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::abs() const {
  return sign() < 0 ? -*this : *this;
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) throw std::invalid_argument("Rational::parse: empty input");

  mpq_class q;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw std::invalid_argument("Rational::parse: malformed fraction '" + std::string(text) + "'");
    }
    mpz_class d = parse_digits(den);
    if (d == 0) throw std::invalid_argument("Rational::parse: zero denominator in '" + std::string(text) + "'");
    q = mpq_class(parse_digits(num), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw std::invalid_argument("Rational::parse: malformed decimal '" + std::string(text) + "'");
    }
    mpz_class scaled = whole.empty() ? mpz_class(0) : parse_digits(whole);
    mpz_class pow10(1);
    for (size_t i = 0; i < frac.size(); ++i) pow10 *= 10;
    scaled *= pow10;
    if (!frac.empty()) scaled += parse_digits(frac);
    q = mpq_class(scaled, pow10);
  } else {
    if (!all_digits(s)) {
      throw std::invalid_argument("Rational::parse: malformed rational '" + std::string(text) + "'");
    }
    q = mpq_class(parse_digits(s));
  }
  q.canonicalize();
  if (negative) q = -q;
  return Rational(std::move(q));
}

std::string Rational::str() const {
  return q_.get_str();
}

Rational pow(const Rational& r, unsigned exponent) {
  Rational result(1);
  for (unsigned i = 0; i < exponent; ++i) result *= r;
  return result;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace fairspan

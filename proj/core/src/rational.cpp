#include "bvtorus/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace bvtorus {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s.front() == '-' || s.front() == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator)
    : value_(static_cast<long>(numerator), static_cast<long>(denominator)) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  const std::string num_s(num.front() == '+' ? num.substr(1) : num);
  Rational q;
  q.value_ = mpq_class(mpz_class(num_s), mpz_class(std::string(den)));
  if (q.value_.get_den() == 0) throw std::domain_error("rational with zero denominator");
  q.value_.canonicalize();
  return q;
}

bool Rational::is_integer() const { return value_.get_den() == 1; }

std::int64_t Rational::to_integer() const {
  if (!is_integer()) throw std::domain_error(to_string() + " is not an integer");
  const mpz_class& n = value_.get_num();
  if (!n.fits_slong_p()) throw std::domain_error(to_string() + " does not fit in 64 bits");
  return n.get_si();
}

std::string Rational::numerator_string() const { return value_.get_num().get_str(); }
std::string Rational::denominator_string() const { return value_.get_den().get_str(); }

std::string Rational::to_string() const {
  if (is_integer()) return numerator_string();
  return numerator_string() + "/" + denominator_string();
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw std::domain_error("division by zero");
  value_ /= other.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

}  // namespace bvtorus

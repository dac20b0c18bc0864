#include "cbb/rational.hpp"

#include <cctype>

#include "cbb/errors.hpp"

namespace cbb {

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::from_string(std::string_view text) {
  std::string s(text);
  auto valid_int = [](std::string_view part, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < part.size() && (part[i] == '-' || part[i] == '+')) ++i;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    return true;
  };
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw DomainError("malformed rational '" + s + "'");
  const std::string n = (!num.empty() && num[0] == '+') ? num.substr(1) : num;
  return Rational(mpz_class(n), mpz_class(den));
}

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), value_.get_mpq_t());
  return Rational(r);
}

Rational Rational::pow(unsigned exponent) const {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), exponent);
  return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  value_ /= o.value_;
  return *this;
}

}  // namespace cbb

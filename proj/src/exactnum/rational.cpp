#include "qperm/exactnum/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace qperm {

namespace {

mpz_class parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw std::invalid_argument("empty integer literal");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("malformed integer literal '" + std::string(text) + "'");
  }
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  return mpz_class(s, 10);
}

}  // namespace

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text), mpz_class(1));
  return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

std::size_t Rational::hash() const {
  // Word-level mix of the low limbs; collisions only cost performance.
  auto mix = [](const mpz_class& z) {
    std::size_t h = static_cast<std::size_t>(mpz_size(z.get_mpz_t()));
    if (mpz_size(z.get_mpz_t()) > 0) h ^= static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), 0)) * 0x9E3779B97F4A7C15ull;
    return h ^ static_cast<std::size_t>(sgn(z) + 1);
  };
  return mix(value_.get_num()) * 31u + mix(value_.get_den());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace qperm

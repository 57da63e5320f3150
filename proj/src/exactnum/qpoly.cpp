#include "qperm/exactnum/qpoly.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qperm {

QPoly::QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPoly(std::move(out));
}

QPoly operator*(QPoly a, const Rational& c) {
  for (auto& x : a.coeffs_) x *= c;
  a.trim();
  return a;
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& dividend, const QPoly& divisor) {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  QPoly rem = dividend;
  if (rem.degree() < divisor.degree()) return {QPoly{}, rem};
  std::vector<Rational> quot(rem.degree() - divisor.degree() + 1);
  const Rational lead_inv = divisor.leading().inverse();
  while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
    std::size_t shift = rem.degree() - divisor.degree();
    Rational c = rem.leading() * lead_inv;
    quot[shift] = c;
    for (std::size_t k = 0; k < divisor.coeffs_.size(); ++k) rem.coeffs_[k + shift] -= c * divisor.coeffs_[k];
    rem.trim();
  }
  return {QPoly(std::move(quot)), rem};
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k].is_zero()) continue;
    if (!first) os << " + ";
    os << coeffs_[k];
    if (k > 0) os << "*x^" << k;
    first = false;
  }
  return os.str();
}

unsigned euler_phi(unsigned m) {
  unsigned result = m;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

const QPoly& cyclotomic_polynomial(unsigned m) {
  if (m == 0) throw std::invalid_argument("cyclotomic polynomial of order 0");
  static std::mutex mutex;
  static std::map<unsigned, std::unique_ptr<QPoly>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(m); it != cache.end()) return *it->second;
  }
  // x^m - 1 divided by Phi_d for every proper divisor d.
  QPoly poly = QPoly::monomial(Rational(1), m) - QPoly::monomial(Rational(1), 0);
  for (unsigned d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    auto [q, r] = QPoly::divmod(poly, cyclotomic_polynomial(d));
    if (!r.is_zero()) throw std::logic_error("cyclotomic division left a remainder");
    poly = std::move(q);
  }
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(m, std::make_unique<QPoly>(std::move(poly)));
  return *it->second;
}

QPoly inverse_mod(const QPoly& a, const QPoly& modulus) {
  QPoly r0 = modulus, r1 = a.mod(modulus);
  QPoly s0, s1 = QPoly::monomial(Rational(1), 0);
  if (r1.is_zero()) throw std::domain_error("division by zero");
  while (!r1.is_zero()) {
    auto [q, r] = QPoly::divmod(r0, r1);
    QPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw std::domain_error("element is not invertible modulo the given polynomial");
  return (s0 * r0.leading().inverse()).mod(modulus);
}

}  // namespace qperm

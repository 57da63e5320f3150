#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qperm/exactnum/rational.hpp"

namespace qperm {

/// Dense univariate polynomial over Q. Coefficient k multiplies x^k; no
/// trailing zeros are stored, so the zero polynomial is empty.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);
  static QPoly monomial(const Rational& c, std::size_t degree);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  const Rational& leading() const { return coeffs_.back(); }

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(QPoly a, const Rational& c);
  friend bool operator==(const QPoly& a, const QPoly& b) = default;

  /// Euclidean division; throws std::domain_error when divisor is zero.
  static std::pair<QPoly, QPoly> divmod(const QPoly& dividend, const QPoly& divisor);
  QPoly mod(const QPoly& divisor) const { return divmod(*this, divisor).second; }

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// The m-th cyclotomic polynomial, from x^m - 1 = prod_{d | m} Phi_d.
/// Results are cached; safe to call concurrently.
const QPoly& cyclotomic_polynomial(unsigned m);

/// Euler's totient.
unsigned euler_phi(unsigned m);

/// Inverse of a modulo an irreducible modulus via extended Euclid.
QPoly inverse_mod(const QPoly& a, const QPoly& modulus);

}  // namespace qperm

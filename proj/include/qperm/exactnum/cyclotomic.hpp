#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "qperm/exactnum/qpoly.hpp"
#include "qperm/exactnum/rational.hpp"

namespace qperm {

/// Element of the cyclotomic field Q(zeta_m), stored in the power basis
/// zeta^0 .. zeta^(phi(m)-1) after reduction modulo Phi_m. The stored order is
/// the field the value was built in; arithmetic between different orders
/// embeds both operands into Q(zeta_lcm).
class Cyclotomic {
 public:
  Cyclotomic() : order_(1), coeffs_(1) {}
  Cyclotomic(const Rational& r, unsigned order = 1);  // NOLINT(google-explicit-constructor)
  Cyclotomic(long r) : Cyclotomic(Rational(r)) {}     // NOLINT(google-explicit-constructor)

  /// zeta_m^k for any integer k.
  static Cyclotomic zeta(unsigned m, long k = 1);
  /// Builds from an arbitrary polynomial in zeta_m, reducing modulo Phi_m.
  static Cyclotomic from_polynomial(unsigned m, const QPoly& poly);

  unsigned order() const { return order_; }
  std::span<const Rational> coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  /// The value as a rational, when it lies in Q.
  std::optional<Rational> as_rational() const;

  /// Image in Q(zeta_target) under zeta_m -> zeta_target^(target/m).
  /// Throws std::invalid_argument unless order() divides target.
  Cyclotomic embed(unsigned target) const;
  /// Expresses the value in Q(zeta_target) if it lies there.
  std::optional<Cyclotomic> restrict_to(unsigned target) const;

  /// Throws std::domain_error on zero.
  Cyclotomic inverse() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  Cyclotomic operator-() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// "c_0 + c_1*z^1 + ... (order m)".
  std::string to_string() const;
  /// Same terms without the order suffix; z stands for zeta_order().
  std::string to_expression() const;

 private:
  Cyclotomic(unsigned order, std::vector<Rational> coeffs) : order_(order), coeffs_(std::move(coeffs)) {}
  QPoly as_qpoly() const { return QPoly(coeffs_); }

  unsigned order_;
  std::vector<Rational> coeffs_;  // length phi(order_)
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c);

/// Image of x in Q(zeta_target); target must be a multiple of x.order().
Cyclotomic cyclo_embed(const Cyclotomic& x, unsigned target);
/// Multiplicative inverse; throws std::domain_error for zero.
Cyclotomic cyclo_inverse(const Cyclotomic& x);

/// Parses expressions such as "1", "-1/2", "z", "2*z^3 - z + 1/3" where z
/// denotes zeta_order. Throws std::invalid_argument on malformed text.
Cyclotomic parse_cyclotomic(std::string_view text, unsigned order);

}  // namespace qperm

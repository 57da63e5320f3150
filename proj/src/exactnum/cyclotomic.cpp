#include "qperm/exactnum/cyclotomic.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qperm/exactnum/linalg.hpp"

namespace qperm {

namespace {

std::vector<Rational> padded(const QPoly& p, unsigned length) {
  std::vector<Rational> out(length);
  const auto& c = p.coefficients();
  for (std::size_t k = 0; k < c.size() && k < length; ++k) out[k] = c[k];
  return out;
}

}  // namespace

Cyclotomic::Cyclotomic(const Rational& r, unsigned order) : order_(order), coeffs_(euler_phi(order)) {
  if (order == 0) throw std::invalid_argument("cyclotomic order must be positive");
  coeffs_[0] = r;
}

Cyclotomic Cyclotomic::from_polynomial(unsigned m, const QPoly& poly) {
  if (m == 0) throw std::invalid_argument("cyclotomic order must be positive");
  return Cyclotomic(m, padded(poly.mod(cyclotomic_polynomial(m)), euler_phi(m)));
}

Cyclotomic Cyclotomic::zeta(unsigned m, long k) {
  if (m == 0) throw std::invalid_argument("cyclotomic order must be positive");
  long e = k % static_cast<long>(m);
  if (e < 0) e += m;
  return from_polynomial(m, QPoly::monomial(Rational(1), static_cast<std::size_t>(e)));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

bool Cyclotomic::is_one() const {
  if (!coeffs_[0].is_one()) return false;
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    if (!coeffs_[k].is_zero()) return false;
  return true;
}

std::optional<Rational> Cyclotomic::as_rational() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    if (!coeffs_[k].is_zero()) return std::nullopt;
  return coeffs_[0];
}

Cyclotomic Cyclotomic::embed(unsigned target) const {
  if (target == 0 || target % order_ != 0)
    throw std::invalid_argument("cannot embed Q(zeta_" + std::to_string(order_) + ") into Q(zeta_" +
                                std::to_string(target) + ")");
  if (target == order_) return *this;
  const unsigned step = target / order_;
  std::vector<Rational> spread(static_cast<std::size_t>(step) * (coeffs_.size() - 1) + 1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) spread[k * step] = coeffs_[k];
  return from_polynomial(target, QPoly(std::move(spread)));
}

std::optional<Cyclotomic> Cyclotomic::restrict_to(unsigned target) const {
  if (target == 0) throw std::invalid_argument("cyclotomic order must be positive");
  const unsigned common = std::lcm(order_, target);
  const Cyclotomic self = embed(common);
  // Solve sum_k a_k * embed(zeta_target^k) = self over Q.
  const unsigned dim = euler_phi(target);
  std::vector<std::vector<Rational>> columns;
  columns.reserve(dim);
  for (unsigned k = 0; k < dim; ++k) {
    auto img = zeta(target, k).embed(common);
    columns.emplace_back(img.coeffs_.begin(), img.coeffs_.end());
  }
  auto solution = solve_in_span(columns, std::vector<Rational>(self.coeffs_.begin(), self.coeffs_.end()));
  if (!solution) return std::nullopt;
  return Cyclotomic(target, std::move(*solution));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  return Cyclotomic(order_, padded(inverse_mod(as_qpoly(), cyclotomic_polynomial(order_)), euler_phi(order_)));
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.order_ != order_) {
    const unsigned m = std::lcm(order_, o.order_);
    *this = embed(m);
    return *this += o.embed(m);
  }
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  if (o.order_ != order_) {
    const unsigned m = std::lcm(order_, o.order_);
    *this = embed(m);
    return *this -= o.embed(m);
  }
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.order_ != order_) {
    const unsigned m = std::lcm(order_, o.order_);
    *this = embed(m);
    return *this *= o.embed(m);
  }
  if (coeffs_.size() == 1) {
    coeffs_[0] *= o.coeffs_[0];
    return *this;
  }
  *this = from_polynomial(order_, as_qpoly() * o.as_qpoly());
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  const unsigned m = std::lcm(a.order_, b.order_);
  return a.embed(m).coeffs_ == b.embed(m).coeffs_;
}

std::string Cyclotomic::to_expression() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    if (k == 0) {
      os << mag;
    } else {
      if (!mag.is_one()) os << mag << "*";
      os << "z";
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!first) os << " + ";
    os << coeffs_[k] << "*z^" << k;
    first = false;
  }
  if (first) os << "0";
  os << " (order " << order_ << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.to_string(); }

Cyclotomic cyclo_embed(const Cyclotomic& x, unsigned target) { return x.embed(target); }

Cyclotomic cyclo_inverse(const Cyclotomic& x) { return x.inverse(); }

Cyclotomic parse_cyclotomic(std::string_view text, unsigned order) {
  // term := [rational ['*']] ['z' ['^' int]] ; terms joined by + / -
  QPoly acc;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("cannot parse cyclotomic '" + std::string(text) + "': " + why);
  };
  bool any = false;
  while (true) {
    skip_ws();
    if (pos >= text.size()) break;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      if (text[pos] == '-') sign = -1;
      ++pos;
      skip_ws();
    } else if (any) {
      fail("expected '+' or '-'");
    }
    Rational coeff(1);
    bool have_coeff = false;
    std::size_t start = pos;
    while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) ++pos;
    if (pos > start) {
      coeff = Rational::parse(text.substr(start, pos - start));
      have_coeff = true;
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip_ws();
      }
    }
    std::size_t power = 0;
    if (pos < text.size() && text[pos] == 'z') {
      ++pos;
      power = 1;
      skip_ws();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip_ws();
        std::size_t ps = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (ps == pos) fail("expected exponent");
        power = std::stoul(std::string(text.substr(ps, pos - ps)));
      }
    } else if (!have_coeff) {
      fail("expected a term");
    }
    acc += QPoly::monomial(sign < 0 ? -coeff : coeff, power);
    any = true;
  }
  if (!any) fail("empty expression");
  return Cyclotomic::from_polynomial(order, acc);
}

}  // namespace qperm

#pragma once

#include <algorithm>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qperm/ncalg/alphabet.hpp"
#include "qperm/ncalg/coeff.hpp"

namespace qperm {

/// Degree reported for the zero polynomial.
inline constexpr int kZeroPolyDegree = std::numeric_limits<int>::min();

/// Noncommutative polynomial: a finite linear combination of words over a
/// fixed alphabet. Terms are kept sorted strictly descending under deglex with
/// no zero coefficients, so equality is structural.
template <ExactField C>
class Poly {
 public:
  using Coeff = C;
  using Term = std::pair<Word, C>;

  Poly() = default;
  explicit Poly(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

  static Poly constant(AlphabetPtr alphabet, const C& c) { return monomial(std::move(alphabet), Word{}, c); }
  static Poly one(AlphabetPtr alphabet) { return constant(std::move(alphabet), C(1)); }
  static Poly generator(AlphabetPtr alphabet, Letter g) {
    if (g >= alphabet->size()) throw std::invalid_argument("generator index out of range");
    return monomial(std::move(alphabet), Word{g}, C(1));
  }
  static Poly monomial(AlphabetPtr alphabet, Word w, const C& c) {
    Poly p(std::move(alphabet));
    if (!c.is_zero()) p.terms_.emplace_back(std::move(w), c);
    return p;
  }
  /// Combines like terms and drops zeros; input order is irrelevant.
  static Poly from_terms(AlphabetPtr alphabet, std::vector<Term> terms) {
    Poly p(std::move(alphabet));
    p.terms_ = canonicalize(std::move(terms));
    return p;
  }
  /// Caller guarantees strictly descending order and nonzero coefficients.
  static Poly from_sorted_terms(AlphabetPtr alphabet, std::vector<Term> terms) {
    Poly p(std::move(alphabet));
    p.terms_ = std::move(terms);
    return p;
  }

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  int degree() const {
    if (terms_.empty()) return kZeroPolyDegree;
    return static_cast<int>(terms_.front().first.size());  // deglex: leading term has max length
  }
  const Word& leading_word() const { return terms_.front().first; }
  const C& leading_coeff() const { return terms_.front().second; }

  /// Coefficient of w (zero when absent).
  C coefficient(const Word& w) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                               [](const Term& t, const Word& key) { return compare_words(t.first, key) > 0; });
    if (it != terms_.end() && it->first == w) return it->second;
    return C(0);
  }

  Poly& operator+=(const Poly& o) { return merge(o, false); }
  Poly& operator-=(const Poly& o) { return merge(o, true); }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  Poly operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  Poly& operator*=(const C& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& t : terms_) t.second = t.second * c;
    return *this;
  }
  friend Poly operator*(Poly a, const C& c) { return a *= c; }
  friend Poly operator*(const C& c, Poly a) { return a *= c; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.require_same(b);
    std::vector<Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) out.emplace_back(wa * wb, ca * cb);
    return from_terms(a.alphabet_ ? a.alphabet_ : b.alphabet_, std::move(out));
  }

  /// Multiplies on the left by `left` and on the right by `right`.
  Poly sandwich(const Word& left, const Word& right) const {
    Poly r(alphabet_);
    r.terms_.reserve(terms_.size());
    for (const auto& [w, c] : terms_) r.terms_.emplace_back(left * w * right, c);
    return r;  // deglex is compatible with concatenation, order preserved
  }

  /// Divides by the leading coefficient.
  Poly monic() const {
    if (is_zero()) return *this;
    return *this * leading_coeff().inverse();
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    if (a.terms_.empty()) return true;
    if (!same_alphabet(a.alphabet_, b.alphabet_)) return false;
    return a.terms_ == b.terms_;
  }

  /// "1*u11.u12 - 1*u12.u11"; the zero polynomial is "0".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
      const bool neg = CoeffSyntax<C>::negative(c);
      const C mag = neg ? -c : c;
      if (first) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      out += CoeffSyntax<C>::format(mag);
      if (!w.empty()) {
        out += "*";
        out += w.to_string(*alphabet_);
      }
      first = false;
    }
    return out;
  }

 private:
  void require_same(const Poly& o) const {
    if (alphabet_ && o.alphabet_ && !same_alphabet(alphabet_, o.alphabet_))
      throw std::invalid_argument("polynomials over different alphabets");
  }

  Poly& merge(const Poly& o, bool subtract) {
    require_same(o);
    if (!alphabet_) alphabet_ = o.alphabet_;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
      if (b == o.terms_.end() || (a != terms_.end() && compare_words(a->first, b->first) > 0)) {
        out.push_back(std::move(*a++));
      } else if (a == terms_.end() || compare_words(a->first, b->first) < 0) {
        out.emplace_back(b->first, subtract ? -b->second : b->second);
        ++b;
      } else {
        C c = subtract ? a->second - b->second : a->second + b->second;
        if (!c.is_zero()) out.emplace_back(std::move(a->first), std::move(c));
        ++a;
        ++b;
      }
    }
    terms_ = std::move(out);
    return *this;
  }

  static std::vector<Term> canonicalize(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& x, const Term& y) { return compare_words(x.first, y.first) > 0; });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
      if (!out.empty() && out.back().first == t.first) {
        out.back().second = out.back().second + t.second;
      } else {
        if (!out.empty() && out.back().second.is_zero()) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && out.back().second.is_zero()) out.pop_back();
    return out;
  }

  AlphabetPtr alphabet_;
  std::vector<Term> terms_;
};

using NCPoly = Poly<Rational>;
using CycloPoly = Poly<Cyclotomic>;

/// Commutator a*b - b*a.
template <ExactField C>
Poly<C> commutator(const Poly<C>& a, const Poly<C>& b) {
  return a * b - b * a;
}

extern template class Poly<Rational>;
extern template class Poly<Cyclotomic>;

}  // namespace qperm

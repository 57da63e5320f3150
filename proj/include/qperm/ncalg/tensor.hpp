#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qperm/ncalg/poly.hpp"
#include "qperm/ncalg/substitute.hpp"

namespace qperm {

/// Encodes the tensor power A^{(x)k} inside one free algebra: the tagged
/// alphabet holds k copies of the base alphabet (copy i before copy i+1 in the
/// generator order) and letters of different copies commute. A word is
/// straightened when its letters are grouped by copy in increasing order; a
/// straightened word decodes to one base word per factor.
class TensorEncoding {
 public:
  explicit TensorEncoding(AlphabetPtr base, unsigned factors = 2);

  const AlphabetPtr& base() const { return base_; }
  const AlphabetPtr& tagged() const { return tagged_; }
  unsigned factors() const { return factors_; }

  Letter tag(unsigned factor, Letter g) const { return static_cast<Letter>(factor * base_->size() + g); }
  unsigned factor_of(Letter tagged_letter) const { return static_cast<unsigned>(tagged_letter / base_->size()); }
  Letter base_letter(Letter tagged_letter) const { return static_cast<Letter>(tagged_letter % base_->size()); }

  /// Copy of p living in the given tensor factor.
  template <ExactField C>
  Poly<C> embed(const Poly<C>& p, unsigned factor) const {
    std::vector<typename Poly<C>::Term> terms;
    terms.reserve(p.size());
    for (const auto& [w, c] : p.terms()) terms.emplace_back(embed_word(w, factor), c);
    return Poly<C>::from_terms(tagged_, std::move(terms));
  }

  /// parts[0] (x) parts[1] (x) ... as a straightened polynomial.
  template <ExactField C>
  Poly<C> pure_tensor(std::span<const Poly<C>> parts) const {
    if (parts.size() != factors_) throw std::invalid_argument("pure tensor needs one part per factor");
    Poly<C> out = Poly<C>::one(tagged_);
    for (unsigned f = 0; f < factors_; ++f) out = out * embed(parts[f], f);
    return out;
  }

  /// Normal form modulo the cross-commutation rules: a stable sort of each
  /// word's letters by factor.
  template <ExactField C>
  Poly<C> straighten(const Poly<C>& p) const {
    std::vector<typename Poly<C>::Term> terms;
    terms.reserve(p.size());
    for (const auto& [w, c] : p.terms()) terms.emplace_back(straighten_word(w), c);
    return Poly<C>::from_terms(tagged_, std::move(terms));
  }

  /// Applies one map per factor (each sending the base alphabet into
  /// `target`) and multiplies the results in factor order. With a single
  /// target algebra this realizes e.g. multiplication m o (S (x) id).
  template <ExactField C>
  Poly<C> apply_factorwise(const Poly<C>& p, std::span<const std::vector<Poly<C>>> images,
                           std::span<const MapDirection> directions, const AlphabetPtr& target) const {
    Poly<C> out(target);
    for (const auto& [w, c] : p.terms()) {
      auto parts = decode(straighten_word(w));
      Poly<C> term = Poly<C>::constant(target, c);
      for (unsigned f = 0; f < factors_; ++f) {
        auto factor_poly = Poly<C>::monomial(base_, parts[f], C(1));
        term = term * substitute<C>(factor_poly, images[f], directions[f], target);
      }
      out += term;
    }
    return out;
  }

  Word embed_word(const Word& w, unsigned factor) const;
  Word straighten_word(const Word& w) const;
  bool is_straightened(const Word& w) const;
  /// Splits a straightened word into its per-factor base words.
  std::vector<Word> decode(const Word& straightened) const;
  Word encode(std::span<const Word> parts) const;

  /// The rules right(g).left(h) -> left(h).right(g) for every ordered pair of
  /// factors, as (lhs, rhs) word pairs.
  std::vector<std::pair<Word, Word>> cross_commutation_rules() const;

 private:
  AlphabetPtr base_;
  AlphabetPtr tagged_;
  unsigned factors_;
};

/// Prefix used for factor f of a k-fold encoding: "L:"/"R:" for k = 2,
/// "T1:".."Tk:" otherwise.
std::string tensor_tag_prefix(unsigned factor, unsigned factors);

}  // namespace qperm

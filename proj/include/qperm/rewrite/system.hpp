#pragma once

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qperm/ncalg/poly.hpp"
#include "qperm/rewrite/lhs_index.hpp"

namespace qperm {

enum class CompletionKind { raw, complete_up_to, confluent };

struct CompletionStatus {
  CompletionKind kind = CompletionKind::raw;
  int degree = 0;  // meaningful for complete_up_to

  bool is_confluent() const { return kind == CompletionKind::confluent; }
  std::string to_string() const {
    switch (kind) {
      case CompletionKind::raw: return "raw";
      case CompletionKind::complete_up_to: return "complete_up_to(" + std::to_string(degree) + ")";
      case CompletionKind::confluent: return "confluent";
    }
    return "raw";
  }
  friend bool operator==(const CompletionStatus&, const CompletionStatus&) = default;
};

/// lhs -> rhs with every term of rhs strictly below lhs.
template <ExactField C>
struct RewriteRule {
  Word lhs;
  Poly<C> rhs;

  int degree() const { return static_cast<int>(lhs.size()); }
  /// The relation lhs - rhs the rule was oriented from.
  Poly<C> as_relation() const { return Poly<C>::monomial(rhs.alphabet(), lhs, C(1)) - rhs; }
};

/// Oriented relation set over one alphabet. Rules are addressed by stable ids;
/// removed rules leave a hole so ids held by a completion run stay valid.
template <ExactField C>
class RewriteSystem {
 public:
  RewriteSystem() = default;
  explicit RewriteSystem(AlphabetPtr alphabet, MonomialOrder order = MonomialOrder::deglex)
      : alphabet_(std::move(alphabet)), order_(order), index_(alphabet_->size()) {}

  /// Orients each nonzero relation by its leading word (made monic) without
  /// completing. Duplicate leading words are kept by reducing the later
  /// relation first; the result has status raw.
  static RewriteSystem from_relations(const AlphabetPtr& alphabet, std::span<const Poly<C>> relations,
                                      MonomialOrder order = MonomialOrder::deglex) {
    RewriteSystem sys(alphabet, order);
    for (const auto& r : relations) {
      if (!same_alphabet(r.alphabet() ? r.alphabet() : alphabet, alphabet))
        throw std::invalid_argument("relation over a foreign alphabet");
      Poly<C> reduced = sys.normal_form(r);
      if (reduced.is_zero()) continue;
      sys.add_oriented(reduced);
    }
    return sys;
  }

  const AlphabetPtr& alphabet() const { return alphabet_; }
  MonomialOrder order() const { return order_; }
  const CompletionStatus& status() const { return status_; }
  void set_status(CompletionStatus s) { status_ = s; }

  std::size_t rule_count() const { return live_count_; }
  std::size_t id_bound() const { return rules_.size(); }
  bool alive(int id) const { return alive_[static_cast<std::size_t>(id)]; }
  const RewriteRule<C>& rule(int id) const { return rules_[static_cast<std::size_t>(id)]; }

  /// Live rules in deglex order of their left-hand sides.
  std::vector<const RewriteRule<C>*> rules() const {
    std::vector<const RewriteRule<C>*> out;
    out.reserve(live_count_);
    for (std::size_t i = 0; i < rules_.size(); ++i)
      if (alive_[i]) out.push_back(&rules_[i]);
    std::sort(out.begin(), out.end(),
              [](const auto* a, const auto* b) { return compare_words(a->lhs, b->lhs) < 0; });
    return out;
  }

  int max_rule_degree() const {
    int d = 0;
    for (std::size_t i = 0; i < rules_.size(); ++i)
      if (alive_[i]) d = std::max(d, rules_[i].degree());
    return d;
  }

  /// Adds lhs -> rhs. Requires rhs below lhs and lhs not already present.
  int add_rule(Word lhs, Poly<C> rhs) {
    if (!rhs.is_zero() && compare_words(rhs.leading_word(), lhs) >= 0)
      throw std::invalid_argument("rule right-hand side must lie strictly below its left-hand side");
    if (index_.find_exact(lhs) >= 0) throw std::invalid_argument("duplicate rule left-hand side");
    const int id = static_cast<int>(rules_.size());
    index_.insert(lhs, id);
    if (rhs.alphabet() == nullptr) rhs = Poly<C>(alphabet_);
    rules_.push_back(RewriteRule<C>{std::move(lhs), std::move(rhs)});
    alive_.push_back(true);
    ++live_count_;
    status_ = CompletionStatus{};
    return id;
  }

  /// Orients a nonzero polynomial by its leading word.
  int add_oriented(const Poly<C>& relation) {
    if (relation.is_zero()) throw std::invalid_argument("cannot orient the zero polynomial");
    Poly<C> monic = relation.monic();
    Word lhs = monic.leading_word();
    Poly<C> rhs = Poly<C>::monomial(alphabet_, lhs, C(1)) - monic;
    return add_rule(std::move(lhs), std::move(rhs));
  }

  void remove_rule(int id) {
    auto i = static_cast<std::size_t>(id);
    if (!alive_[i]) return;
    index_.erase(rules_[i].lhs);
    alive_[i] = false;
    --live_count_;
    status_ = CompletionStatus{};
  }

  void replace_rhs(int id, Poly<C> rhs) { rules_[static_cast<std::size_t>(id)].rhs = std::move(rhs); }

  /// Rewrites until no term contains a rule lhs as a factor. Terms are
  /// processed from the largest word down; within a word the leftmost
  /// (then shortest) match is rewritten.
  Poly<C> normal_form(const Poly<C>& p) const {
    if (p.alphabet() && !same_alphabet(p.alphabet(), alphabet_))
      throw std::invalid_argument("normal form of a polynomial over a foreign alphabet");
    std::map<Word, C, WordGreater> work;
    for (const auto& [w, c] : p.terms()) work.emplace(w, c);
    std::vector<typename Poly<C>::Term> result;
    while (!work.empty()) {
      auto node = work.extract(work.begin());
      const Word& w = node.key();
      auto match = index_.find_leftmost(w);
      if (!match) {
        result.emplace_back(std::move(node.key()), std::move(node.mapped()));
        continue;
      }
      const auto& rule = rules_[static_cast<std::size_t>(match->rule)];
      const Word prefix = w.subword(0, match->position);
      const Word suffix = w.subword(match->position + match->length, w.size() - match->position - match->length);
      const C& c = node.mapped();
      for (const auto& [rw, rc] : rule.rhs.terms()) {
        Word key = prefix * rw * suffix;
        auto [it, inserted] = work.try_emplace(std::move(key), c * rc);
        if (!inserted) {
          it->second = it->second + c * rc;
          if (it->second.is_zero()) work.erase(it);
        }
      }
    }
    return Poly<C>::from_sorted_terms(alphabet_, std::move(result));
  }

  bool reduces_to_zero(const Poly<C>& p) const { return normal_form(p).is_zero(); }

  bool is_irreducible(const Word& w) const { return !index_.has_factor(w); }

  const LhsIndex& index() const { return index_; }

  /// Drops removed rules and renumbers ids.
  void compact() {
    RewriteSystem fresh(alphabet_, order_);
    for (const auto* r : rules()) fresh.add_rule(r->lhs, r->rhs);
    fresh.status_ = status_;
    *this = std::move(fresh);
  }

 private:
  AlphabetPtr alphabet_;
  MonomialOrder order_ = MonomialOrder::deglex;
  LhsIndex index_;
  std::vector<RewriteRule<C>> rules_;
  std::vector<bool> alive_;
  std::size_t live_count_ = 0;
  CompletionStatus status_;
};

extern template class RewriteSystem<Rational>;
extern template class RewriteSystem<Cyclotomic>;

}  // namespace qperm

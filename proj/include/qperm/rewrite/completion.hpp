#pragma once

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "qperm/rewrite/system.hpp"

namespace qperm {

template <ExactField C>
struct CompletionResult {
  RewriteSystem<C> system;
  CompletionStatus status;
  int degree_cap = 0;
  /// Live rule count after the initial inter-reduction and after each pass.
  std::vector<std::size_t> rule_count_history;
  std::size_t pairs_resolved = 0;
  /// Overlaps above the cap left unexamined (zero when confluent).
  std::size_t pairs_deferred = 0;
};

namespace detail {

/// Overlap of rule `left` and rule `right`: the last `shared` letters of
/// lhs(left) equal the first `shared` letters of lhs(right).
struct CriticalPair {
  int degree;
  Word overlap;
  int left;
  int right;
  std::size_t shared;
};

struct PairAfter {
  bool operator()(const CriticalPair& a, const CriticalPair& b) const {
    if (a.degree != b.degree) return a.degree > b.degree;
    auto c = compare_words(a.overlap, b.overlap);
    if (c != 0) return c > 0;
    return std::tie(a.left, a.right, a.shared) > std::tie(b.left, b.right, b.shared);
  }
};

template <ExactField C>
class Completer {
 public:
  Completer(RewriteSystem<C> sys, int cap) : sys_(std::move(sys)), cap_(cap) {}

  CompletionResult<C> run() {
    // Re-insert every relation through the inter-reducing path.
    std::vector<Poly<C>> relations;
    for (const auto* r : sys_.rules()) relations.push_back(r->as_relation());
    sys_ = RewriteSystem<C>(sys_.alphabet(), sys_.order());
    add_polynomials(std::move(relations));
    interreduce();

    CompletionResult<C> result;
    result.degree_cap = cap_;
    result.rule_count_history.push_back(sys_.rule_count());

    while (!queue_.empty()) {
      const int degree = queue_.top().degree;
      if (degree > cap_) break;
      while (!queue_.empty() && queue_.top().degree <= degree) {
        CriticalPair pair = queue_.top();
        queue_.pop();
        if (!sys_.alive(pair.left) || !sys_.alive(pair.right)) continue;
        Poly<C> s = sys_.normal_form(s_polynomial(pair));
        ++result.pairs_resolved;
        if (!s.is_zero()) add_polynomials({std::move(s)});
      }
      interreduce();
      result.rule_count_history.push_back(sys_.rule_count());
    }

    // Overlaps above the cap: the system is confluent iff all of them
    // resolve as well (no new rule is added for them).
    bool all_resolve = true;
    std::size_t deferred = 0;
    while (!queue_.empty()) {
      CriticalPair pair = queue_.top();
      queue_.pop();
      if (!sys_.alive(pair.left) || !sys_.alive(pair.right)) continue;
      ++deferred;
      if (all_resolve && !sys_.reduces_to_zero(s_polynomial(pair))) all_resolve = false;
    }
    result.status = all_resolve ? CompletionStatus{CompletionKind::confluent, 0}
                                : CompletionStatus{CompletionKind::complete_up_to, cap_};
    result.pairs_deferred = all_resolve ? 0 : deferred;
    sys_.compact();
    sys_.set_status(result.status);
    result.system = std::move(sys_);
    return result;
  }

 private:
  Poly<C> s_polynomial(const CriticalPair& pair) const {
    const auto& a = sys_.rule(pair.left);
    const auto& b = sys_.rule(pair.right);
    const Word a_head = a.lhs.subword(0, a.lhs.size() - pair.shared);
    const Word b_tail = b.lhs.subword(pair.shared, b.lhs.size() - pair.shared);
    return a.rhs.sandwich(Word{}, b_tail) - b.rhs.sandwich(a_head, Word{});
  }

  void add_pairs(int id) {
    for (std::size_t other = 0; other < sys_.id_bound(); ++other) {
      const int o = static_cast<int>(other);
      if (!sys_.alive(o)) continue;
      push_overlaps(id, o);
      if (o != id) push_overlaps(o, id);
    }
  }

  void push_overlaps(int left, int right) {
    const Word& a = sys_.rule(left).lhs;
    const Word& b = sys_.rule(right).lhs;
    const std::size_t limit = std::min(a.size(), b.size());
    for (std::size_t k = 1; k < limit; ++k) {
      if (!std::equal(a.end() - static_cast<std::ptrdiff_t>(k), a.end(), b.begin())) continue;
      Word overlap = a * b.subword(k, b.size() - k);
      const int degree = static_cast<int>(overlap.size());
      queue_.push(CriticalPair{degree, std::move(overlap), left, right, k});
    }
  }

  /// Reduces each polynomial and adds it as a rule, removing rules whose lhs
  /// becomes reducible and re-queueing their relations.
  void add_polynomials(std::vector<Poly<C>> pending) {
    auto smaller_first = [](const Poly<C>& x, const Poly<C>& y) {
      return compare_words(x.leading_word(), y.leading_word()) > 0;
    };
    std::erase_if(pending, [](const Poly<C>& p) { return p.is_zero(); });
    std::make_heap(pending.begin(), pending.end(), smaller_first);
    while (!pending.empty()) {
      std::pop_heap(pending.begin(), pending.end(), smaller_first);
      Poly<C> p = sys_.normal_form(pending.back());
      pending.pop_back();
      if (p.is_zero()) continue;
      p = p.monic();
      const Word& lhs = p.leading_word();
      for (std::size_t i = 0; i < sys_.id_bound(); ++i) {
        const int id = static_cast<int>(i);
        if (!sys_.alive(id)) continue;
        if (contains_factor(sys_.rule(id).lhs, lhs)) {
          pending.push_back(sys_.rule(id).as_relation());
          std::push_heap(pending.begin(), pending.end(), smaller_first);
          sys_.remove_rule(id);
        }
      }
      const int id = sys_.add_oriented(p);
      add_pairs(id);
    }
  }

  void interreduce() {
    for (std::size_t i = 0; i < sys_.id_bound(); ++i) {
      const int id = static_cast<int>(i);
      if (!sys_.alive(id)) continue;
      sys_.replace_rhs(id, sys_.normal_form(sys_.rule(id).rhs));
    }
  }

  static bool contains_factor(const Word& haystack, const Word& needle) {
    if (needle.size() > haystack.size()) return false;
    return std::search(haystack.begin(), haystack.end(), needle.begin(), needle.end()) != haystack.end();
  }

  RewriteSystem<C> sys_;
  int cap_;
  std::priority_queue<CriticalPair, std::vector<CriticalPair>, PairAfter> queue_;
};

}  // namespace detail

/// Degree-truncated critical-pair completion. Overlaps are resolved in
/// increasing degree (ties by overlap word); a pass is one degree level and is
/// followed by inter-reduction of all right-hand sides. Overlaps above the cap
/// are only checked for resolvability; the system is reported confluent when
/// every overlap at every degree resolves.
template <ExactField C>
CompletionResult<C> complete(const RewriteSystem<C>& sys, int degree_cap) {
  if (degree_cap < 1) throw std::invalid_argument("degree cap must be positive");
  if (degree_cap < sys.max_rule_degree())
    throw std::invalid_argument("degree cap " + std::to_string(degree_cap) + " is below the maximal rule degree " +
                                std::to_string(sys.max_rule_degree()));
  return detail::Completer<C>(sys, degree_cap).run();
}

}  // namespace qperm

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qperm/ncalg/alphabet.hpp"

namespace qperm {

/// Trie over rule left-hand sides with dense child tables. Supports
/// incremental insertion and removal and answers "leftmost factor" queries
/// used by reduction.
class LhsIndex {
 public:
  struct Match {
    std::size_t position;
    int rule;
    std::size_t length;
  };

  explicit LhsIndex(std::size_t alphabet_size = 0);

  std::size_t alphabet_size() const { return alphabet_size_; }

  void insert(const Word& lhs, int rule);
  void erase(const Word& lhs);
  /// Rule whose lhs is exactly w, or -1.
  int find_exact(const Word& w) const;

  /// Leftmost occurrence of any lhs as a factor of w; at a given start
  /// position the shortest lhs wins.
  std::optional<Match> find_leftmost(const Word& w) const;
  bool has_factor(const Word& w) const { return find_leftmost(w).has_value(); }

  /// Number of words of each exact length 0..max_length containing no lhs
  /// as a factor. Throws std::overflow_error when a count exceeds 64 bits.
  std::vector<std::uint64_t> count_irreducible(std::size_t max_length) const;

  /// All irreducible words of length <= max_length in deglex order. Throws
  /// std::length_error when more than `limit` words would be produced.
  std::vector<Word> irreducible_words(std::size_t max_length, std::size_t limit) const;

 private:
  /// Aho-Corasick transition table over the live lhs set.
  struct Automaton {
    std::vector<std::int32_t> next;  // state * alphabet + letter
    std::vector<char> dead;          // state matches some lhs suffix
  };
  Automaton build_automaton() const;

  std::int32_t child(std::int32_t node, Letter g) const { return children_[node * alphabet_size_ + g]; }
  std::int32_t new_node();

  std::size_t alphabet_size_;
  std::vector<std::int32_t> children_;
  std::vector<std::int32_t> rule_at_;
};

}  // namespace qperm

#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace qperm {

/// Bijection of {0, .., n-1}; displayed 1-based in cycle notation.
/// Composition is right-to-left: (a * b)(x) = a(b(x)).
class Permutation {
 public:
  Permutation() = default;
  /// 0-based images; throws std::invalid_argument unless bijective.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  static Permutation from_one_based(const std::vector<int>& images);
  /// Product of disjoint or overlapping 1-based cycles, applied right to left.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const;
  /// Smallest k > 0 with p^k = id.
  int order() const;

  /// "(1 2 3)(4 5)"; the identity is "()".
  std::string cycle_notation() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

 private:
  std::vector<int> images_;
};

/// All n! permutations in lexicographic order of their image sequences.
std::vector<Permutation> symmetric_group(int n);

/// Position of p in symmetric_group(p.degree()).
std::size_t lex_rank(const Permutation& p);
Permutation lex_unrank(int n, std::size_t rank);

std::size_t factorial(int n);

}  // namespace qperm

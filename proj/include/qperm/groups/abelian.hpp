#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qperm/exactnum/cyclotomic.hpp"
#include "qperm/groups/permutation.hpp"
#include "qperm/exec.hpp"

namespace qperm {

/// Finite abelian group Z_{d_1} x ... x Z_{d_r} in invariant-factor form
/// (d_1 | d_2 | ... | d_r, every d_i >= 2). The trivial group has no factors.
/// Elements are exponent vectors with a_i in [0, d_i).
class FiniteAbelianGroup {
 public:
  using Element = std::vector<unsigned>;

  FiniteAbelianGroup() = default;
  /// Throws std::invalid_argument unless the factors form a divisibility chain.
  explicit FiniteAbelianGroup(std::vector<unsigned> invariant_factors);

  /// Canonical form of an arbitrary product of cyclic groups.
  static FiniteAbelianGroup from_cyclic_orders(const std::vector<unsigned>& orders);
  /// "Z4xZ2", "Z6", "Z2xZ2xZ2"; "1" or "Z1" is the trivial group.
  static FiniteAbelianGroup parse(std::string_view descriptor);

  const std::vector<unsigned>& invariant_factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  unsigned order() const;
  /// Least common multiple of element orders (1 for the trivial group).
  unsigned exponent() const { return factors_.empty() ? 1 : factors_.back(); }

  /// Elements in lexicographic order of exponent vectors; this order fixes
  /// the bijection with {1, .., |G|}.
  std::vector<Element> elements() const;
  std::size_t index_of(const Element& a) const;
  Element element_at(std::size_t index) const;

  Element identity() const { return Element(factors_.size(), 0); }
  Element add(const Element& a, const Element& b) const;
  Element negate(const Element& a) const;
  unsigned element_order(const Element& a) const;
  bool contains(const Element& a) const;

  /// Canonical descriptor "Z2xZ4", or "1".
  std::string to_string() const;
  std::string element_to_string(const Element& a) const;

  friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;
  friend auto operator<=>(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    if (a.factors_.size() != b.factors_.size()) return a.factors_.size() <=> b.factors_.size();
    return a.factors_ <=> b.factors_;
  }

 private:
  std::vector<unsigned> factors_;
};

/// One representative per isomorphism class, ordered by rank then factors:
/// n = 8 gives Z8, Z2xZ4, Z2xZ2xZ2.
std::vector<FiniteAbelianGroup> abelian_groups_of_order(unsigned n);

/// chi_c(a) = prod_i zeta_{d_i}^{c_i a_i}; the exponent vector c is also the
/// group element the character is identified with.
struct Character {
  FiniteAbelianGroup group;
  FiniteAbelianGroup::Element exponents;

  /// Value in Q(zeta_exponent(G)).
  Cyclotomic operator()(const FiniteAbelianGroup::Element& a) const;
};

/// Rows are characters, columns elements, both in element order.
std::vector<std::vector<Cyclotomic>> character_table(const FiniteAbelianGroup& group, Exec exec = Exec::parallel);

/// Translation action x -> g + x on G = {1..n} (lexicographic labelling),
/// one permutation per element in element order.
std::vector<Permutation> regular_embedding(const FiniteAbelianGroup& group);

}  // namespace qperm

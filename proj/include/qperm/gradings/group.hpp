#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qperm/groups/abelian.hpp"

namespace qperm {

/// Reduced word of a free product: consecutive letters come from different
/// factors and no letter is the identity. The empty word is the identity.
struct GroupWord {
  std::vector<std::pair<unsigned, FiniteAbelianGroup::Element>> letters;

  bool is_identity() const { return letters.empty(); }
  friend bool operator==(const GroupWord&, const GroupWord&) = default;
  friend auto operator<=>(const GroupWord&, const GroupWord&) = default;
};

/// G_1 * ... * G_k with optional block sizes recording which part of [n]
/// each factor acts on. One factor is an ordinary finite abelian group;
/// zero factors is the trivial group.
class GradingGroup {
 public:
  GradingGroup() = default;
  explicit GradingGroup(std::vector<FiniteAbelianGroup> factors, std::vector<int> block_sizes = {});

  static GradingGroup abelian(const FiniteAbelianGroup& g) { return GradingGroup({g}); }
  /// "Z4", "Z2xZ2", "Z3*Z2", "1".
  static GradingGroup parse(std::string_view descriptor);

  const std::vector<FiniteAbelianGroup>& factors() const { return factors_; }
  const std::vector<int>& block_sizes() const { return block_sizes_; }
  /// Factors that are not the trivial group.
  std::size_t nontrivial_factor_count() const;
  /// At most one nontrivial factor.
  bool is_abelian() const { return nontrivial_factor_count() <= 1; }
  /// lcm of the factor exponents: all character values live in Q(zeta_m).
  unsigned field_order() const;

  GroupWord letter(unsigned factor, const FiniteAbelianGroup::Element& a) const;
  GroupWord multiply(const GroupWord& a, const GroupWord& b) const;
  GroupWord inverse(const GroupWord& a) const;
  /// Finite order, or nullopt when the cyclically reduced word has letters
  /// from two or more factors.
  std::optional<unsigned> order(const GroupWord& a) const;
  /// Whether `gens` generates the group. Exact when every generator is a
  /// single letter; longer words make the answer nullopt unless the letters
  /// alone already suffice.
  std::optional<bool> generated_by(const std::vector<GroupWord>& gens) const;

  std::string to_string() const;
  /// "1", "(1,0)" for one factor, "g1(2)*g2(1)" for free products.
  std::string element_to_string(const GroupWord& a) const;
  GroupWord parse_element(std::string_view text) const;

  friend bool operator==(const GradingGroup& a, const GradingGroup& b) { return a.factors_ == b.factors_; }

 private:
  void validate(const GroupWord& a) const;
  std::vector<FiniteAbelianGroup> factors_;
  std::vector<int> block_sizes_;
};

}  // namespace qperm

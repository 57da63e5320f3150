#pragma once

#include <string>
#include <vector>

#include "qperm/exec.hpp"
#include "qperm/groups/abelian.hpp"
#include "qperm/groups/permutation.hpp"

namespace qperm {

enum class SubgroupMode { classified, brute_force };

std::string to_string(SubgroupMode mode);
SubgroupMode parse_subgroup_mode(const std::string& text);

/// Largest degree accepted by the brute-force search.
inline constexpr int kBruteForceSubgroupLimit = 6;

struct PermutationSubgroup {
  /// Isomorphism type, read off from element orders.
  FiniteAbelianGroup type;
  /// Greedy generating set, each generator lexicographically least among
  /// elements outside the span of the previous ones.
  std::vector<Permutation> generators;
  /// All elements, sorted.
  std::vector<Permutation> elements;
};

/// Classified mode embeds every abelian group of order n regularly. Brute
/// force walks all abelian subgroups of S_n and keeps the transitive ones,
/// one per conjugacy class; it throws CostGuardError above
/// kBruteForceSubgroupLimit. Results are sorted by isomorphism type.
std::vector<PermutationSubgroup> transitive_abelian_subgroups(int n, SubgroupMode mode, Exec exec = Exec::parallel);

/// Element set closed under products, starting from the given generators.
std::vector<Permutation> generated_subgroup(int n, const std::vector<Permutation>& generators);

bool is_transitive(int n, const std::vector<Permutation>& elements);
bool is_commutative(const std::vector<Permutation>& elements);
/// Every point stabilizer is trivial.
bool is_semiregular(int n, const std::vector<Permutation>& elements);

/// Smallest sorted rank list among all conjugates; equal keys mean conjugate
/// subgroups. Costs n! conjugations, so guarded like brute force.
std::vector<std::size_t> conjugacy_key(int n, const std::vector<Permutation>& elements);

/// Abelian group with the same element-order statistics. Throws if the
/// elements do not form an abelian group.
FiniteAbelianGroup abelian_isomorphism_type(const std::vector<Permutation>& elements);

}  // namespace qperm

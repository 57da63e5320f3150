#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qperm/rewrite/system.hpp"

namespace qperm {

/// Raised when a system has not been completed far enough for a
/// dimension count to be trusted.
class InsufficientCompletion : public std::invalid_argument {
 public:
  InsufficientCompletion(int required, const std::string& status)
      : std::invalid_argument("filtration count needs completion up to degree " + std::to_string(required) +
                              " (system is " + status + ")"),
        required_degree(required) {}
  int required_degree;
};

/// Cumulative counts of irreducible words of length <= e for e = 0..d, i.e.
/// the dimensions of the filtration components of the presented algebra.
template <ExactField C>
std::vector<std::uint64_t> filtration_dimension(const RewriteSystem<C>& sys, int d) {
  if (d < 0) throw std::invalid_argument("filtration degree must be nonnegative");
  const auto& status = sys.status();
  if (!status.is_confluent()) {
    const int required = d + sys.max_rule_degree();
    if (status.kind == CompletionKind::raw || status.degree < required)
      throw InsufficientCompletion(required, status.to_string());
  }
  auto exact = sys.index().count_irreducible(static_cast<std::size_t>(d));
  std::vector<std::uint64_t> cumulative;
  cumulative.reserve(exact.size());
  std::uint64_t total = 0;
  for (auto c : exact) {
    if (total > UINT64_MAX - c) throw std::overflow_error("filtration dimension exceeds 64 bits");
    total += c;
    cumulative.push_back(total);
  }
  return cumulative;
}

/// Exact count of irreducible words of each length 0..d (no completion check).
template <ExactField C>
std::vector<std::uint64_t> irreducible_counts_by_length(const RewriteSystem<C>& sys, int d) {
  return sys.index().count_irreducible(static_cast<std::size_t>(d));
}

/// Irreducible words of length <= d in deglex order.
template <ExactField C>
std::vector<Word> basis_words(const RewriteSystem<C>& sys, int d, std::size_t limit = 100000) {
  return sys.index().irreducible_words(static_cast<std::size_t>(d), limit);
}

}  // namespace qperm

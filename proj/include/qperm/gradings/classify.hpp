#pragma once

#include <vector>

#include "qperm/exec.hpp"
#include "qperm/gradings/grading.hpp"

namespace qperm {

/// Largest n accepted by classify_gradings unless overridden.
inline constexpr int kDefaultClassifyLimit = 12;

/// Partitions of n as nonincreasing sequences, largest first part first.
std::vector<std::vector<int>> integer_partitions(int n);

struct ClassifiedGrading {
  std::vector<int> partition;
  std::vector<FiniteAbelianGroup> groups;  // one per block
  Verdict verdict = Verdict::inconclusive;
  bool ergodic = false;
  int k = 0;               // dim A_1
  bool round_trip = false;  // orbit_decompose recovered the partition and k
};

struct Classification {
  int n = 0;
  std::vector<ClassifiedGrading> ergodic;  // one per abelian group of order n
  std::vector<ClassifiedGrading> general;  // every partition with every per-block choice
  CertificateReport report;
};

/// Ergodic gradings from the regular abelian groups of order n, then every
/// (partition, per-block group) pair; each grading is built, verified and
/// decomposed. Sorted by partition then group descriptors. Throws
/// CostGuardError when n > limit. `ergodic_only` skips the general case.
Classification classify_gradings(int n, bool ergodic_only = false, int limit = kDefaultClassifyLimit,
                                 Exec exec = Exec::parallel);

}  // namespace qperm

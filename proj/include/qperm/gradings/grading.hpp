#pragma once

#include <istream>
#include <string>
#include <vector>

#include "qperm/exactnum/linalg.hpp"
#include "qperm/exec.hpp"
#include "qperm/gradings/group.hpp"
#include "qperm/report/certificate.hpp"

namespace qperm {

using CycloVec = Vec<Cyclotomic>;

struct GradingComponent {
  GroupWord label;
  std::vector<CycloVec> basis;
};

/// Decomposition K^n = sum_g A_g given by explicit component bases.
/// Components with no basis vectors are omitted.
struct Grading {
  int n = 0;
  GradingGroup group;
  std::vector<GradingComponent> components;

  /// Basis of A_g, empty when g is not in the support.
  const std::vector<CycloVec>& component(const GroupWord& g) const;
  const std::vector<CycloVec>& identity_component() const { return component(GroupWord{}); }
  std::vector<GroupWord> support() const;
  Json to_json() const;
};

/// f_chi = sum_g chi(g) e_g for every character, labelled by the element the
/// character is identified with.
Grading grading_from_regular_abelian(const FiniteAbelianGroup& g);

/// Block i (consecutive coordinates, sizes nonincreasing) carries the
/// character grading of groups[i]; the group is the free product.
Grading grading_from_partition(const std::vector<int>& blocks, const std::vector<FiniteAbelianGroup>& groups);

/// Everything in A_1 over the trivial group.
Grading trivial_grading(int n);

/// Direct sum of rank n, the grading law A_g A_h in A_gh by exact span
/// membership, faithfulness, finite order of support elements, abelian group
/// when ergodic, and 1 in A_1. details["ergodic"] records dim A_1 = 1.
CertificateReport verify_grading(const Grading& grading, Exec exec = Exec::parallel);

struct BlockRestriction {
  std::vector<int> coordinates;  // 0-based positions of the block in [n]
  Grading grading;               // on K^{block size}
  bool ergodic = false;
};

struct OrbitReport {
  std::vector<int> partition;  // nonincreasing block sizes
  int k = 0;                   // dim A_1
  std::vector<CycloVec> projections;  // minimal idempotents of A_1, 0/1 vectors
  std::vector<BlockRestriction> blocks;  // same order as projections

  Json to_json() const;
};

/// Minimal idempotents of A_1 and the ergodic restriction to each block.
/// Throws std::logic_error if A_1 is not a unital diagonal subalgebra.
OrbitReport orbit_decompose(const Grading& grading);

// Grading file
//
//   # comment
//   group Z3*Z2
//   field 6            (optional, defaults to the group's field order)
//   blocks 3,2         (optional)
//   1: (1,1,1,0,0) (0,0,0,1,1)
//   g1(1): (1,z^2,z^4,0,0)
//
// Labels use GradingGroup::element_to_string syntax; coordinates are
// cyclotomic expressions in z = zeta_field.

Grading read_grading(std::istream& in);
Grading read_grading_file(const std::string& path);
std::string write_grading(const Grading& grading);

}  // namespace qperm

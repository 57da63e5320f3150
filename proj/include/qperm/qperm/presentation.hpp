#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qperm/ncalg/tensor.hpp"
#include "qperm/report/certificate.hpp"
#include "qperm/rewrite/completion.hpp"

namespace qperm {

/// The four relation families on an n x n matrix x:
///   row_orthogonality     x_ki x_kj = delta_ij x_ki
///   row_sum               sum_k x_ik = 1
///   column_orthogonality  x_ik x_jk = delta_ij x_ik
///   column_sum            sum_k x_ki = 1
/// Semi-magic is the first two, magic all four.
enum class RelationFamily { row_orthogonality = 1, row_sum = 2, column_orthogonality = 3, column_sum = 4 };

std::string to_string(RelationFamily f);
/// Accepts the names above or their numbers 1..4.
RelationFamily parse_relation_family(const std::string& text);

/// "u12" for n <= 9, "u1_12" beyond, 1-based.
std::string matrix_generator_name(const std::string& stem, int n, int i, int j);
/// stem_ij for 0 <= i, j < n in row-major order.
AlphabetPtr matrix_alphabet(const std::string& stem, int n);

struct LabelledPoly {
  std::string label;
  NCPoly poly;
};

/// Square matrix whose entries live in the algebra presented by `ambient`.
struct MatrixOverAlgebra {
  int n = 0;
  std::vector<NCPoly> entries;  // row-major
  std::shared_ptr<const RewriteSystem<Rational>> ambient;

  const NCPoly& operator()(int i, int j) const { return entries[static_cast<std::size_t>(i * n + j)]; }
  const AlphabetPtr& alphabet() const { return ambient->alphabet(); }
  /// Throws unless every entry is over the ambient alphabet.
  void validate() const;
};

/// Every instance of one family, in (outer index, i, j) order; the value is
/// lhs - rhs of the instance.
std::vector<LabelledPoly> family_instances(const MatrixOverAlgebra& x, RelationFamily family);
/// Same, for the generic matrix of generators stem_ij.
std::vector<LabelledPoly> family_instances(const AlphabetPtr& alphabet, int n, RelationFamily family);

struct AlgebraPresentation {
  std::string name;
  AlphabetPtr alphabet;
  std::vector<LabelledPoly> relations;

  std::vector<NCPoly> relation_polys() const;
  RewriteSystem<Rational> raw_system() const;
};

CompletionResult<Rational> complete_presentation(const AlgebraPresentation& algebra, int cap);

/// Bialgebra or Hopf algebra given by generators and relations together with
/// generator images of the structure maps. Comultiplication images live in
/// the two-fold tensor encoding; the antipode, when present, is an
/// antihomomorphism.
struct HopfPresentation {
  AlgebraPresentation algebra;
  /// Matrix size when the generators form a matrix, 0 otherwise.
  int n = 0;
  std::shared_ptr<const TensorEncoding> tensor2;
  std::vector<NCPoly> delta_images;
  std::vector<Rational> counit_images;
  std::optional<std::vector<NCPoly>> antipode_images;

  const AlphabetPtr& alphabet() const { return algebra.alphabet; }
  bool has_antipode() const { return antipode_images.has_value(); }
};

/// A_s(n): magic relations, delta(u_ij) = sum_k u_ik (x) u_kj,
/// eps(u_ij) = delta_ij, S(u_ij) = u_ji.
HopfPresentation magic_presentation(int n);
/// Universal semi-magic bialgebra: row families only, no antipode.
HopfPresentation semi_magic_presentation(int n);
/// K[Z_2] = <g | g^2 = 1> with g grouplike.
HopfPresentation group_algebra_presentation();
/// The ground field as a Hopf algebra with no generators.
HopfPresentation trivial_presentation();
/// <p, q | p^2 = p, q^2 = q>.
AlgebraPresentation idempotent_pair_algebra();

/// The matrix (u_ij) of a matrix-generated presentation over `ambient`.
MatrixOverAlgebra generating_matrix(const HopfPresentation& hopf, std::shared_ptr<const RewriteSystem<Rational>> ambient);

/// Counts per family as (label, count) for reports.
Json relation_summary(const AlgebraPresentation& algebra);

}  // namespace qperm

#pragma once

#include <vector>

#include "qperm/exec.hpp"
#include "qperm/qperm/presentation.hpp"
#include "qperm/report/certificate.hpp"

namespace qperm {

/// Reduces each polynomial; a nonzero normal form is a refutation only when
/// the system is confluent, otherwise it is inconclusive.
std::vector<CheckedIdentity> reduce_identities(const std::vector<LabelledPoly>& polys,
                                               const RewriteSystem<Rational>& sys, Exec exec = Exec::parallel);

/// delta(x_ij) = sum_k x_ik (x) x_kj in the tensor square and eps(x_ij) = delta_ij.
CertificateReport check_multiplicative(const MatrixOverAlgebra& x, const HopfPresentation& hopf,
                                       Exec exec = Exec::parallel);
/// Row orthogonality and row sums reduce to zero.
CertificateReport check_semi_magic(const MatrixOverAlgebra& x, Exec exec = Exec::parallel);
/// All four families reduce to zero.
CertificateReport check_magic(const MatrixOverAlgebra& x, Exec exec = Exec::parallel);

/// For beta(e_i) = sum_k e_k (x) x_ki on K^n, compares the algebra-map leg
/// (beta(e_i)beta(e_j) = delta_ij beta(e_i), beta(1) = 1 (x) 1) with the
/// semi-magic leg. Verified iff the two legs agree; each leg's verdict is in
/// details["legs"]. With `hopf` given, multiplicativity is checked first.
CertificateReport coaction_algebra_map_check(const MatrixOverAlgebra& x, const HopfPresentation* hopf = nullptr,
                                             Exec exec = Exec::parallel);

/// Well-definedness of delta, eps and S on every relation, coassociativity,
/// both counit laws, both antipode laws and S^2 = id on generators. The
/// presentation is completed up to `cap` first; the bialgebra case skips the
/// antipode checks and says so in the notes.
CertificateReport verify_hopf_axioms(const HopfPresentation& hopf, int cap, Exec exec = Exec::parallel);

}  // namespace qperm

#pragma once

#include <vector>

#include "qperm/qperm/checks.hpp"

namespace qperm {

/// From three of the four families on a generic matrix x, derives the
/// inverse identity they imply: x.x^t = I when both row sums and column
/// orthogonality are present, x^t.x = I when both row orthogonality and
/// column sums are. Every entry of the difference with I is reduced in the
/// system completed up to `cap`. The step recovering the fourth family from
/// invertibility is not machine-checked and the report says so.
CertificateReport derive_transpose_inverse(int n, const std::vector<RelationFamily>& families, int cap = 8,
                                           Exec exec = Exec::parallel);

/// Over the semi-magic presentation, (x^t x)_ij - delta_ij u_i reduces to zero
/// for all i, j, where u_i = sum_k x_ki.
CertificateReport derive_gram_diagonal(int n, int cap = 8, Exec exec = Exec::parallel);

}  // namespace qperm

#pragma once

#include "qperm/groups/function_on_sn.hpp"
#include "qperm/qperm/checks.hpp"

namespace qperm {

/// Image under u_ij -> p_ij, p_ij(sigma) = delta_{i, sigma(j)}, evaluated
/// pointwise on S_n. `p` must be over the n x n matrix alphabet.
FunctionOnSn pi_n(const NCPoly& p, int n, Exec exec = Exec::parallel);

/// Surjectivity via the e_sigma product formula and vanishing of every
/// defining relation; for n <= 3 also the basis count n! and full rank of
/// the basis evaluation matrix; for n = 4 a kernel element that is nonzero
/// in the algebra, certified through the idempotent pair quotient.
CertificateReport pi_n_isomorphism_check(int n, int cap = 8, Exec exec = Exec::parallel);

/// Block matrix diag([[p,1-p],[1-p,p]], [[q,1-q],[1-q,q]], I_{n-4}) over
/// <p, q | p^2 = p, q^2 = q> with its confluent system. Needs n >= 4.
MatrixOverAlgebra idempotent_block_matrix(int n);

/// Magic check of the block matrix, the image pq - qp of [u11, u33], and
/// filtration dimensions 2d + 1 of the target for d = 0..depth.
CertificateReport block_witness(int n, int depth = 10, Exec exec = Exec::parallel);

}  // namespace qperm

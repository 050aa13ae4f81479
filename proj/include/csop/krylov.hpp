#pragma once

#include "csop/linalg.hpp"

namespace csop {

/// Orthonormal Krylov basis of (A, x0) built by Gram-Schmidt with one
/// reorthogonalization pass. Column r spans the new direction of A^r x0, with
/// a positive real leading coefficient, so it coincides with classical
/// Gram-Schmidt applied to x0, A x0, A^2 x0, ...
struct ArnoldiResult {
  ComplexMatrix basis;        // dim x rank, orthonormal columns
  ComplexMatrix hessenberg;   // rank x rank, A * basis = basis * H (+ residual)
  Index rank = 0;             // number of basis vectors before breakdown
  double norm_x0 = 0;
  // Relative residual ||orth part of A g_r|| / ||A g_r|| at each step.
  std::vector<double> relative_residuals;
};

/// Runs until the Krylov space is exhausted (rank == dim) or the residual of
/// A g_r drops to tol_rank * ||A g_r|| or below.
ArnoldiResult arnoldi(const ComplexMatrix& a, const ComplexVector& x0,
                      double tol_rank = kDefaultTolRank);

}  // namespace csop

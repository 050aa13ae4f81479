#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace csop {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;
using Index = Eigen::Index;

inline constexpr double kDefaultTolZero = 1e-8;
inline constexpr double kDefaultTolRank = 1e-10;

/// (x, y) = sum_j x_j * conj(y_j); linear in the first slot.
Complex inner_product(const ComplexVector& x, const ComplexVector& y);

struct GramReport {
  ComplexMatrix gram;      // gram(k, l) = (y_k, y_l)
  double determinant = 0;  // real part of det(gram)
  double scale = 0;        // Hadamard bound, prod_j ||y_j||^2
  bool is_degenerate = false;
};

/// Gram determinant of a vector family via partial-pivoted LU. The family is
/// flagged degenerate when det <= tol_zero * scale.
GramReport gram_determinant(std::span<const ComplexVector> vectors,
                            double tol_zero = kDefaultTolZero);

ComplexVector mat_apply(const ComplexMatrix& a, const ComplexVector& x);
ComplexMatrix mat_product(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& a);
ComplexMatrix transpose(const ComplexMatrix& a);

/// Numerical rank by column-pivoted Householder QR. Columns are scaled to unit
/// norm first; tol_rank is relative to the largest pivot.
Index numerical_rank(const ComplexMatrix& a, double tol_rank = kDefaultTolRank);

bool all_finite(const ComplexMatrix& a);
bool all_finite(const ComplexVector& x);

/// Throws Error("not_square") unless a is square.
void require_square(const ComplexMatrix& a);
/// Throws Error("dim_mismatch") when the sizes differ.
void require_same_dim(Index expected, Index actual, const char* what);

}  // namespace csop

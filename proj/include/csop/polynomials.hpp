#pragma once

#include <vector>

#include "csop/linalg.hpp"
#include "csop/tridiagonalize.hpp"

namespace csop {

/// Coefficients in ascending powers of lambda.
using Polynomial = std::vector<Complex>;

Polynomial poly_add(const Polynomial& p, const Polynomial& q);
Polynomial poly_scale(const Polynomial& p, Complex alpha);
Polynomial poly_multiply(const Polynomial& p, const Polynomial& q);
/// lambda * p
Polynomial poly_shift(const Polynomial& p);

/// Rows p_0..p_{n_max} of the three-term recurrence attached to a tridiagonal
/// form, with leading coefficients mu_n and the monic rows P_n.
struct PolynomialTable {
  int n_max = 0;
  SymmetryClass symmetry = SymmetryClass::plus;
  std::vector<Polynomial> coeffs;  // p_n, degree n
  std::vector<Complex> mu;         // leading coefficient of p_n
  std::vector<Polynomial> monic;   // P_n = (prod_{j<n} c_j) p_n; empty until monic_transform
  /// |mu_n prod_{j<n} c_j - 1| per row.
  std::vector<double> mu_residuals;
};

/// m_{n,n-1} p_{n-1} + m_{n,n} p_n + m_{n,n+1} p_{n+1} = lambda p_n with
/// p_{-1} = 0, p_0 = 1, using the matrix rows of T (for the plus class this is
/// c_{n-1} p_{n-1} + b_n p_n + c_n p_{n+1} = lambda p_n). The minus class runs
/// the same row recurrence and is experimental.
/// Throws Error("n_max_out_of_range") for n_max > dim-1 and
/// Error("zero_offdiagonal") if a needed c_n is at most tol_sub * ||T||_F.
PolynomialTable recurrence_polynomials(const TridiagonalForm& t, int n_max,
                                       double tol_sub = kDefaultTolSub);

/// Fills table.monic with P_n = (prod_{j<n} c_j) p_n, rescaled so the leading
/// coefficient is exactly 1.
void monic_transform(PolynomialTable& table, const TridiagonalForm& t);

/// Largest relative defect of the row recurrence over n < n_max.
double recurrence_residual(const PolynomialTable& table, const TridiagonalForm& t);
/// Largest relative defect of
/// P_{n+1} = (lambda - b_n) P_n - m_{n,n-1} m_{n-1,n} P_{n-1}
/// (m_{n,n-1} m_{n-1,n} = c_{n-1}^2 for the plus class).
double monic_recurrence_residual(const PolynomialTable& table, const TridiagonalForm& t);

/// Moments (T^k)_{0,0} for k = 0..k_max of the reconstructed tridiagonal matrix.
std::vector<Complex> moments(const TridiagonalForm& t, int k_max);

/// Linear functional lambda^k -> moments[k] applied to p.
Complex apply_functional(const Polynomial& p, const std::vector<Complex>& moments);

struct OrthogonalityReport {
  std::vector<Complex> moments;  // k = 0..2 n_max
  Eigen::MatrixXcd gram;         // L(p_m p_n)
  Eigen::MatrixXd residuals;     // |L(p_m p_n) - delta_mn|
  double max_residual = 0;
};

/// Residuals of the bilinear orthonormality L(p_m p_n) = delta_mn for
/// m, n <= n_max. Only orders whose moments the finite matrix reproduces
/// exactly are allowed: n_max <= floor((dim-1)/2), else
/// Error("truncation_unsafe").
OrthogonalityReport moment_orthogonality(const TridiagonalForm& t, int n_max,
                                         double tol_sub = kDefaultTolSub);

}  // namespace csop

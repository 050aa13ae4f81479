#pragma once

#include <string>
#include <vector>

#include "csop/conjugation.hpp"
#include "csop/error.hpp"
#include "csop/linalg.hpp"

namespace csop {

/// Orthonormal basis g_0, ..., g_{dim-1} of the Krylov sequence x0, A x0, ...
/// Throws Error("krylov_breakdown") if the sequence loses rank early.
ComplexMatrix orthonormalize_krylov(const ComplexMatrix& a, const ComplexVector& x0,
                                    double tol_rank = kDefaultTolRank);

struct PhaseFix {
  ComplexMatrix basis;          // columns e_r = exp(i phi_r / 2) g_r
  std::vector<double> phases;   // phi_r in [0, 2 pi)
  std::vector<Complex> betas;   // beta_r = (J g_r, g_r)
  double max_fixed_residual = 0;  // max_r ||J e_r - e_r||
};

/// Rotates each g_r so that J e_r = e_r. Requires J g_r = beta_r g_r with
/// |beta_r| = 1; throws Error("phase_defect") otherwise.
PhaseFix fix_phases(const ComplexMatrix& g, const Conjugation& j, double tolerance = 1e-8);

struct M3Report {
  bool tridiagonal = false;
  bool symmetric = false;          // skew-symmetric for the minus class
  bool subdiagonal_nonzero = false;
  double off_residual = 0;        // max |m_kl|, |k - l| > 1
  double symmetry_residual = 0;   // max |m_kl - sign m_lk|
  double min_subdiagonal = 0;     // min |m_{k,k+1}|
  double norm = 0;                // ||M||_F

  bool passes() const { return tridiagonal && symmetric && subdiagonal_nonzero; }
};

inline constexpr double kDefaultTolSub = 1e-10;
inline constexpr double kDefaultTolOff = 1e-8;

/// Membership of a square matrix in the tridiagonal (skew-)symmetric class with
/// non-vanishing first sub-diagonal. Thresholds are relative to ||M||_F.
M3Report verify_m3(const ComplexMatrix& m, SymmetryClass c, double tol_sub = kDefaultTolSub,
                   double tol_off = kDefaultTolOff);

struct TridiagonalForm {
  SymmetryClass symmetry = SymmetryClass::plus;
  std::vector<Complex> diag;     // b_n = m_{n,n}
  std::vector<Complex> offdiag;  // c_n = m_{n,n+1}
  ComplexMatrix basis;           // columns e_r; empty when built from coefficients
  std::vector<double> phases;
  ComplexMatrix matrix;          // full m_{k,l} = (A e_l, e_k)
  double off_tridiagonal_residual = 0;
  double similarity_residual = 0;  // ||E^H A E - reconstructed()||_F
  double orthonormality_residual = 0;
  double max_fixed_residual = 0;
  M3Report verification;

  Index dim() const { return static_cast<Index>(diag.size()); }
  /// Tridiagonal matrix from diag/offdiag with m_{n+1,n} = sign c_n.
  ComplexMatrix reconstructed() const;
};

/// Form with only the coefficient lists populated (e.g. read from a file).
TridiagonalForm form_from_coefficients(std::vector<Complex> diag, std::vector<Complex> offdiag,
                                       SymmetryClass c);

/// m_{k,l} = (A e_l, e_k) in the orthonormal basis E.
TridiagonalForm assemble(const ComplexMatrix& a, const ComplexMatrix& basis,
                         SymmetryClass c = SymmetryClass::plus);

struct TridiagonalOptions {
  double tol_rank = kDefaultTolRank;
  double tol_phase = 1e-8;
  double tol_sub = kDefaultTolSub;
  double tol_off = kDefaultTolOff;
};

/// Raised by tridiagonalize(); stage() names the pipeline step that failed.
class PipelineError : public Error {
 public:
  PipelineError(std::string stage, const Error& cause)
      : Error(cause.code(), cause.what()), stage_(std::move(stage)) {}

  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

/// verify_m3 rejected the assembled matrix; form() holds all residuals.
class VerificationFailed : public Error {
 public:
  explicit VerificationFailed(TridiagonalForm form);

  const TridiagonalForm& form() const noexcept { return form_; }

 private:
  TridiagonalForm form_;
};

/// orthonormalize_krylov -> fix_phases -> assemble -> verify_m3.
TridiagonalForm tridiagonalize(const ComplexMatrix& a, const ComplexVector& x0,
                               const Conjugation& j, SymmetryClass c,
                               const TridiagonalOptions& options = {});

}  // namespace csop

#include "csop/tridiagonalize.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "csop/krylov.hpp"

namespace csop {

ComplexMatrix orthonormalize_krylov(const ComplexMatrix& a, const ComplexVector& x0,
                                    double tol_rank) {
  ArnoldiResult kry = arnoldi(a, x0, tol_rank);
  if (kry.rank < a.rows()) {
    throw Error("krylov_breakdown", "Krylov sequence breaks down at step " +
                                        std::to_string(kry.rank) + " of " +
                                        std::to_string(a.rows()));
  }
  return std::move(kry.basis);
}

PhaseFix fix_phases(const ComplexMatrix& g, const Conjugation& j, double tolerance) {
  require_same_dim(j.dim(), g.rows(), "fix_phases");
  PhaseFix out;
  out.basis.resize(g.rows(), g.cols());
  for (Index r = 0; r < g.cols(); ++r) {
    const ComplexVector gr = g.col(r);
    const ComplexVector jg = j(gr);
    const Complex beta = inner_product(jg, gr);
    const double eigen_residual = (jg - beta * gr).norm();
    if (std::abs(std::abs(beta) - 1.0) > tolerance || eigen_residual > tolerance * gr.norm()) {
      throw Error("phase_defect", "J g_" + std::to_string(r) + " is not a unimodular multiple of g_" +
                                      std::to_string(r) + " (|beta| = " +
                                      std::to_string(std::abs(beta)) + ", residual " +
                                      std::to_string(eigen_residual) + ")");
    }
    double phi = std::arg(beta);
    if (phi < 0) phi += 2 * std::numbers::pi;
    if (phi >= 2 * std::numbers::pi) phi = 0;
    const ComplexVector er = std::polar(1.0, phi / 2) * gr;
    out.basis.col(r) = er;
    out.phases.push_back(phi);
    out.betas.push_back(beta);
    out.max_fixed_residual = std::max(out.max_fixed_residual, (j(er) - er).norm());
  }
  if (out.max_fixed_residual > tolerance) {
    throw Error("phase_defect", "phase-fixed basis is not J-invariant (residual " +
                                    std::to_string(out.max_fixed_residual) + ")");
  }
  return out;
}

M3Report verify_m3(const ComplexMatrix& m, SymmetryClass c, double tol_sub, double tol_off) {
  require_square(m);
  const Index n = m.rows();
  const double sign = sign_of(c);
  M3Report report;
  report.norm = m.norm();
  report.min_subdiagonal = n > 1 ? INFINITY : 0.0;
  for (Index k = 0; k < n; ++k) {
    for (Index l = 0; l < n; ++l) {
      if (std::abs(k - l) > 1) report.off_residual = std::max(report.off_residual, std::abs(m(k, l)));
      report.symmetry_residual = std::max(report.symmetry_residual, std::abs(m(k, l) - sign * m(l, k)));
    }
    if (k + 1 < n) report.min_subdiagonal = std::min(report.min_subdiagonal, std::abs(m(k, k + 1)));
  }
  report.tridiagonal = report.off_residual <= tol_off * report.norm;
  report.symmetric = report.symmetry_residual <= tol_off * report.norm;
  // A 1x1 matrix has no sub-diagonal to vanish.
  report.subdiagonal_nonzero = n == 1 || report.min_subdiagonal > tol_sub * report.norm;
  return report;
}

ComplexMatrix TridiagonalForm::reconstructed() const {
  const Index n = dim();
  const double sign = sign_of(symmetry);
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (Index k = 0; k < n; ++k) m(k, k) = diag[k];
  for (Index k = 0; k + 1 < n; ++k) {
    m(k, k + 1) = offdiag[k];
    m(k + 1, k) = sign * offdiag[k];
  }
  return m;
}

TridiagonalForm form_from_coefficients(std::vector<Complex> diag, std::vector<Complex> offdiag,
                                       SymmetryClass c) {
  if (diag.empty()) throw Error("empty", "tridiagonal form needs a non-empty diagonal");
  if (offdiag.size() + 1 != diag.size()) {
    throw Error("dim_mismatch", "offdiag must have length dim-1 (dim = " +
                                    std::to_string(diag.size()) + ", got " +
                                    std::to_string(offdiag.size()) + ")");
  }
  TridiagonalForm form;
  form.symmetry = c;
  form.diag = std::move(diag);
  form.offdiag = std::move(offdiag);
  form.matrix = form.reconstructed();
  form.verification = verify_m3(form.matrix, c);
  return form;
}

TridiagonalForm assemble(const ComplexMatrix& a, const ComplexMatrix& basis, SymmetryClass c) {
  require_square(a);
  require_same_dim(a.rows(), basis.rows(), "assemble");
  require_same_dim(a.rows(), basis.cols(), "assemble");
  TridiagonalForm form;
  form.symmetry = c;
  form.basis = basis;
  form.matrix = basis.adjoint() * a * basis;
  const Index n = a.rows();
  for (Index k = 0; k < n; ++k) {
    form.diag.push_back(form.matrix(k, k));
    if (k + 1 < n) form.offdiag.push_back(form.matrix(k, k + 1));
    for (Index l = 0; l < n; ++l) {
      if (std::abs(k - l) > 1) {
        form.off_tridiagonal_residual =
            std::max(form.off_tridiagonal_residual, std::abs(form.matrix(k, l)));
      }
    }
  }
  form.similarity_residual = (form.matrix - form.reconstructed()).norm();
  form.orthonormality_residual =
      (basis.adjoint() * basis - ComplexMatrix::Identity(n, n)).norm();
  return form;
}

VerificationFailed::VerificationFailed(TridiagonalForm form)
    : Error("verification_failed",
            std::string("assembled matrix violates the tridiagonal class:") +
                (form.verification.tridiagonal ? "" : " not tridiagonal") +
                (form.verification.symmetric ? "" : " not (skew-)symmetric") +
                (form.verification.subdiagonal_nonzero ? "" : " vanishing sub-diagonal")),
      form_(std::move(form)) {}

TridiagonalForm tridiagonalize(const ComplexMatrix& a, const ComplexVector& x0,
                               const Conjugation& j, SymmetryClass c,
                               const TridiagonalOptions& options) {
  require_square(a);
  require_same_dim(a.rows(), x0.size(), "tridiagonalize");
  require_same_dim(a.rows(), j.dim(), "tridiagonalize");

  ComplexMatrix g;
  try {
    g = orthonormalize_krylov(a, x0, options.tol_rank);
  } catch (const Error& e) {
    throw PipelineError("orthonormalize", e);
  }
  PhaseFix fixed;
  try {
    fixed = fix_phases(g, j, options.tol_phase);
  } catch (const Error& e) {
    throw PipelineError("fix_phases", e);
  }

  TridiagonalForm form = assemble(a, fixed.basis, c);
  form.phases = std::move(fixed.phases);
  form.max_fixed_residual = fixed.max_fixed_residual;
  form.verification = verify_m3(form.matrix, c, options.tol_sub, options.tol_off);
  if (!form.verification.passes()) throw VerificationFailed(std::move(form));
  return form;
}

}  // namespace csop

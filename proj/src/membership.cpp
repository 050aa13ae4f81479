#include "csop/membership.hpp"

#include <string>

#include "csop/error.hpp"
#include "csop/krylov.hpp"

namespace csop {

KrylovData krylov_data(const ComplexMatrix& a, const ComplexVector& x0, int n_max,
                       double tol_zero, double tol_rank) {
  require_square(a);
  require_same_dim(a.rows(), x0.size(), "krylov_data");
  if (x0.norm() == 0) throw Error("zero_cyclic_candidate", "x0 is the zero vector");
  if (n_max < 1 || n_max > a.rows() - 1) {
    throw Error("bad_depth", "n_max must lie in [1, dim-1], got " + std::to_string(n_max));
  }

  KrylovData data;
  data.depth = n_max;
  data.forward.reserve(n_max + 1);
  data.adjoint.reserve(n_max + 1);
  data.forward.push_back(x0);
  data.adjoint.push_back(x0);
  const ComplexMatrix a_adj = a.adjoint();
  for (int k = 0; k < n_max; ++k) {
    data.forward.push_back(a * data.forward.back());
    data.adjoint.push_back(a_adj * data.adjoint.back());
  }

  std::vector<ComplexVector> family;
  for (int n = 1; n <= n_max; ++n) {
    family.assign(data.forward.begin(), data.forward.begin() + n + 1);
    family.push_back(data.adjoint[n]);
    const GramReport gram = gram_determinant(family, tol_zero);
    data.gammas.push_back(gram.determinant);
    data.gamma_scales.push_back(gram.scale);
    data.degenerate.push_back(gram.is_degenerate);
  }
  data.cyclic_rank = cyclicity_rank(a, x0, tol_rank);
  return data;
}

Index cyclicity_rank(const ComplexMatrix& a, const ComplexVector& x0, double tol_rank) {
  return arnoldi(a, x0, tol_rank).rank;
}

Conjugation build_L(const ComplexMatrix& a, const ComplexVector& x0, SymmetryClass c,
                    double tol_rank) {
  const ArnoldiResult kry = arnoldi(a, x0, tol_rank);
  const Index dim = a.rows();
  if (kry.rank < dim) {
    throw Error("krylov_singular", "x0 is not cyclic (Krylov rank " +
                                       std::to_string(kry.rank) + " < " +
                                       std::to_string(dim) + "), L is undefined");
  }
  // With g_{r+1} = (A g_r - sum_j h_jr g_j) / h_{r+1,r} and L A = sign A^H L on
  // the Krylov vectors, the images f_r = L g_r obey the conjugated recurrence.
  // Then L y = C conj(y) with C = F conj(G)^{-1} = F G^T.
  const double sign = sign_of(c);
  const ComplexMatrix a_adj = a.adjoint();
  const ComplexMatrix& h = kry.hessenberg;
  ComplexMatrix images(dim, dim);
  images.col(0) = kry.basis.col(0);
  for (Index r = 0; r + 1 < dim; ++r) {
    ComplexVector f = sign * (a_adj * images.col(r));
    for (Index j = 0; j <= r; ++j) f -= std::conj(h(j, r)) * images.col(j);
    images.col(r + 1) = f / h(r + 1, r).real();
  }
  return Conjugation(images * kry.basis.transpose());
}

MembershipReport check_membership(const ComplexMatrix& a, const ComplexVector& x0,
                                  const std::optional<Conjugation>& j, SymmetryClass c,
                                  const MembershipOptions& options) {
  require_square(a);
  require_same_dim(a.rows(), x0.size(), "check_membership");
  const double x0_norm = x0.norm();
  if (x0_norm == 0) throw Error("zero_cyclic_candidate", "x0 is the zero vector");
  const Index dim = a.rows();

  MembershipReport report;
  report.class_queried = c;

  report.cyclic_rank = cyclicity_rank(a, x0, options.tol_rank);
  report.cyclic = report.cyclic_rank == dim;

  if (j) {
    require_same_dim(dim, j->dim(), "conjugation");
    report.conjugation = *j;
  } else if (report.cyclic) {
    report.conjugation = build_L(a, x0, c, options.tol_rank);
    report.conjugation_constructed = true;
  }

  if (report.conjugation) {
    const Conjugation& conj = *report.conjugation;
    const ConjugationCheck check = validate(conj, options.tol_conjugation);
    const double defect = symmetry_defect(a, conj, c);
    const double fixed = (conj(x0) - x0).norm();
    report.defect_values["involution"] = check.involution_residual;
    report.defect_values["isometry"] = check.isometry_residual;
    report.defect_values["symmetry"] = defect;
    report.defect_values["x0_fixed"] = fixed;
    report.conjugation_ok = check.passes() && defect <= options.tol_symmetry * a.norm();
    report.fixes_x0 = fixed <= options.tol_fixed * x0_norm;
  }

  report.gamma_chain_ok = true;
  if (dim >= 2) {
    const KrylovData data =
        krylov_data(a, x0, static_cast<int>(dim - 1), options.tol_zero, options.tol_rank);
    report.gamma_values = data.gammas;
    report.gamma_scales = data.gamma_scales;
    for (int n = 1; n <= data.depth; ++n) {
      if (!data.degenerate[n - 1]) {
        report.gamma_chain_ok = false;
        report.first_failing_n = n;
        break;
      }
    }
  }

  report.is_member =
      report.cyclic && report.conjugation_ok && report.fixes_x0 && report.gamma_chain_ok;
  return report;
}

}  // namespace csop

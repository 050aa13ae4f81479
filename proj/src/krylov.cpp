#include "csop/krylov.hpp"

#include "csop/error.hpp"

namespace csop {

ArnoldiResult arnoldi(const ComplexMatrix& a, const ComplexVector& x0, double tol_rank) {
  require_square(a);
  require_same_dim(a.rows(), x0.size(), "arnoldi");
  const Index dim = a.rows();

  ArnoldiResult out;
  out.norm_x0 = x0.norm();
  if (out.norm_x0 == 0) {
    throw Error("zero_cyclic_candidate", "x0 is the zero vector");
  }
  out.basis = ComplexMatrix::Zero(dim, dim);
  out.hessenberg = ComplexMatrix::Zero(dim, dim);
  out.basis.col(0) = x0 / out.norm_x0;
  out.rank = 1;

  for (Index r = 0; r + 1 < dim; ++r) {
    ComplexVector w = a * out.basis.col(r);
    const double norm_aw = w.norm();
    for (int pass = 0; pass < 2; ++pass) {
      for (Index j = 0; j <= r; ++j) {
        const Complex h = out.basis.col(j).dot(w);
        out.hessenberg(j, r) += h;
        w -= h * out.basis.col(j);
      }
    }
    const double residual = w.norm();
    out.relative_residuals.push_back(norm_aw > 0 ? residual / norm_aw : 0.0);
    if (norm_aw == 0 || residual <= tol_rank * norm_aw) break;
    out.hessenberg(r + 1, r) = residual;
    out.basis.col(r + 1) = w / residual;
    ++out.rank;
  }

  out.basis.conservativeResize(dim, out.rank);
  out.hessenberg.conservativeResize(out.rank, out.rank);
  return out;
}

}  // namespace csop

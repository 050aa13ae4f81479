#include "csop/linalg.hpp"

#include <cmath>
#include <string>

#include "csop/error.hpp"

namespace csop {

void require_square(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) {
    throw Error("not_square", "matrix is " + std::to_string(a.rows()) + "x" +
                                  std::to_string(a.cols()) + ", expected square");
  }
}

void require_same_dim(Index expected, Index actual, const char* what) {
  if (expected != actual) {
    throw Error("dim_mismatch", std::string(what) + ": expected dimension " +
                                    std::to_string(expected) + ", got " +
                                    std::to_string(actual));
  }
}

Complex inner_product(const ComplexVector& x, const ComplexVector& y) {
  require_same_dim(x.size(), y.size(), "inner_product");
  // Eigen's dot() conjugates its left operand.
  return y.dot(x);
}

GramReport gram_determinant(std::span<const ComplexVector> vectors, double tol_zero) {
  if (vectors.empty()) {
    throw Error("empty_family", "gram_determinant needs at least one vector");
  }
  if (!(tol_zero > 0)) {
    throw Error("bad_tolerance", "tol_zero must be positive");
  }
  const Index dim = vectors.front().size();
  const auto n = static_cast<Index>(vectors.size());

  GramReport report;
  report.gram.resize(n, n);
  report.scale = 1.0;
  for (Index k = 0; k < n; ++k) {
    require_same_dim(dim, vectors[k].size(), "gram_determinant");
    report.scale *= vectors[k].squaredNorm();
    for (Index l = 0; l < n; ++l) {
      report.gram(k, l) = inner_product(vectors[k], vectors[l]);
    }
  }

  const Complex det = report.gram.partialPivLu().determinant();
  // Row swaps aside, LU of a Hermitian matrix yields a real determinant up to
  // roundoff; a large imaginary part means the input was not a Gram family.
  if (std::abs(det.imag()) > 1e-10 * report.scale + 1e-300) {
    throw Error("gram_not_hermitian", "Gram determinant has imaginary part " +
                                          std::to_string(det.imag()));
  }
  report.determinant = det.real();
  report.is_degenerate = report.determinant <= tol_zero * report.scale;
  return report;
}

ComplexVector mat_apply(const ComplexMatrix& a, const ComplexVector& x) {
  require_same_dim(a.cols(), x.size(), "mat_apply");
  return a * x;
}

ComplexMatrix mat_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a.cols(), b.rows(), "mat_product");
  return a * b;
}

ComplexMatrix adjoint(const ComplexMatrix& a) { return a.adjoint(); }

ComplexMatrix transpose(const ComplexMatrix& a) { return a.transpose(); }

Index numerical_rank(const ComplexMatrix& a, double tol_rank) {
  if (a.size() == 0) return 0;
  ComplexMatrix scaled = a;
  for (Index j = 0; j < scaled.cols(); ++j) {
    const double norm = scaled.col(j).norm();
    if (norm > 0) scaled.col(j) /= norm;
  }
  Eigen::ColPivHouseholderQR<ComplexMatrix> qr(scaled);
  qr.setThreshold(tol_rank);
  return qr.rank();
}

bool all_finite(const ComplexMatrix& a) { return a.allFinite(); }
bool all_finite(const ComplexVector& x) { return x.allFinite(); }

}  // namespace csop

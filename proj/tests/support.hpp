#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "csop/exact.hpp"
#include "csop/generators.hpp"
#include "csop/linalg.hpp"

namespace csop::test {

inline ComplexVector random_vector(Index dim, Rng& rng) {
  ComplexVector x(dim);
  for (Index i = 0; i < dim; ++i) x(i) = rng.unit_box();
  return x;
}

inline ComplexMatrix random_matrix(Index rows, Index cols, Rng& rng) {
  ComplexMatrix m(rows, cols);
  for (Index r = 0; r < rows; ++r)
    for (Index c = 0; c < cols; ++c) m(r, c) = rng.unit_box();
  return m;
}

inline ComplexMatrix random_unitary(Index dim, Rng& rng) {
  Eigen::HouseholderQR<ComplexMatrix> qr(random_matrix(dim, dim, rng));
  return qr.householderQ() * ComplexMatrix::Identity(dim, dim);
}

inline ComplexMatrix random_real_symmetric(Index dim, Rng& rng) {
  ComplexMatrix m(dim, dim);
  for (Index r = 0; r < dim; ++r)
    for (Index c = r; c < dim; ++c) m(r, c) = m(c, r) = rng.uniform(-1, 1);
  return m;
}

inline ComplexMatrix random_real_antisymmetric(Index dim, Rng& rng) {
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  for (Index r = 0; r < dim; ++r)
    for (Index c = r + 1; c < dim; ++c) {
      m(r, c) = rng.uniform(-1, 1);
      m(c, r) = -m(r, c);
    }
  return m;
}

inline ComplexVector real_vector(Index dim, Rng& rng) {
  ComplexVector x(dim);
  for (Index i = 0; i < dim; ++i) x(i) = rng.uniform(-1, 1);
  return x;
}

inline ComplexVector unit(Index dim, Index k) {
  ComplexVector e = ComplexVector::Zero(dim);
  e(k) = 1.0;
  return e;
}

inline const Complex kI{0.0, 1.0};

inline exact::GaussianRational gq(long re, long im = 0) {
  return exact::GaussianRational(mpq_class(re), mpq_class(im));
}

struct SignEquivalence {
  std::vector<double> signs;
  double residual = 0;  // ||D recovered D - reference||_F
};

/// Diagonal D = diag(+-1), D_00 = 1, matching the first off-diagonals of two
/// tridiagonal matrices.
inline SignEquivalence sign_equivalence(const ComplexMatrix& reference,
                                        const ComplexMatrix& recovered) {
  const Index n = reference.rows();
  SignEquivalence out;
  out.signs.assign(n, 1.0);
  for (Index k = 0; k + 1 < n; ++k) {
    const double overlap = std::real(std::conj(reference(k, k + 1)) * recovered(k, k + 1));
    out.signs[k + 1] = overlap < 0 ? -out.signs[k] : out.signs[k];
  }
  ComplexMatrix d_m_d = recovered;
  for (Index k = 0; k < n; ++k)
    for (Index l = 0; l < n; ++l) d_m_d(k, l) *= out.signs[k] * out.signs[l];
  out.residual = (d_m_d - reference).norm();
  return out;
}

}  // namespace csop::test

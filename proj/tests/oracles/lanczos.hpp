#pragma once

// Plain Hermitian Lanczos tridiagonalization, kept separate from the library's
// Krylov code so it can serve as an independent reference.

#include <vector>

#include <Eigen/Dense>

namespace csop::oracle {

struct LanczosResult {
  std::vector<double> alpha;  // diagonal
  std::vector<double> beta;   // off-diagonal, positive
  Eigen::MatrixXcd q;         // Lanczos vectors as columns
};

inline LanczosResult lanczos(const Eigen::MatrixXcd& a, const Eigen::VectorXcd& v0) {
  const Eigen::Index n = a.rows();
  LanczosResult out;
  out.q = Eigen::MatrixXcd::Zero(n, n);
  out.q.col(0) = v0 / v0.norm();
  Eigen::VectorXcd previous = Eigen::VectorXcd::Zero(n);
  double beta_prev = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    Eigen::VectorXcd w = a * out.q.col(j) - beta_prev * previous;
    const double alpha = out.q.col(j).dot(w).real();
    w -= alpha * out.q.col(j);
    // full reorthogonalization
    for (Eigen::Index k = 0; k <= j; ++k) w -= out.q.col(k).dot(w) * out.q.col(k);
    out.alpha.push_back(alpha);
    if (j + 1 == n) break;
    const double beta = w.norm();
    out.beta.push_back(beta);
    previous = out.q.col(j);
    out.q.col(j + 1) = w / beta;
    beta_prev = beta;
  }
  return out;
}

}  // namespace csop::oracle

#include "csop/polynomials.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "csop/error.hpp"

namespace csop {

Polynomial poly_add(const Polynomial& p, const Polynomial& q) {
  Polynomial out(std::max(p.size(), q.size()), Complex{});
  for (std::size_t i = 0; i < p.size(); ++i) out[i] += p[i];
  for (std::size_t i = 0; i < q.size(); ++i) out[i] += q[i];
  return out;
}

Polynomial poly_scale(const Polynomial& p, Complex alpha) {
  Polynomial out(p);
  for (auto& coefficient : out) coefficient *= alpha;
  return out;
}

Polynomial poly_multiply(const Polynomial& p, const Polynomial& q) {
  if (p.empty() || q.empty()) return {};
  Polynomial out(p.size() + q.size() - 1, Complex{});
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
  }
  return out;
}

Polynomial poly_shift(const Polynomial& p) {
  Polynomial out(p.size() + 1, Complex{});
  std::copy(p.begin(), p.end(), out.begin() + 1);
  return out;
}

namespace {

// m_{n,n-1}; the recurrence fixes m_{0,-1} := 1.
Complex lower_entry(const TridiagonalForm& t, int n) {
  if (n == 0) return 1.0;
  return static_cast<double>(sign_of(t.symmetry)) * t.offdiag[n - 1];
}

double coefficient_scale(const Polynomial& p) {
  double s = 0;
  for (const auto& coefficient : p) s = std::max(s, std::abs(coefficient));
  return s;
}

double max_abs_difference(const Polynomial& p, const Polynomial& q) {
  const Polynomial diff = poly_add(p, poly_scale(q, -1.0));
  return coefficient_scale(diff);
}

void require_nonzero_offdiag(const TridiagonalForm& t, int count, double tol_sub) {
  const double norm = t.reconstructed().norm();
  for (int j = 0; j < count; ++j) {
    if (std::abs(t.offdiag[j]) <= tol_sub * norm) {
      throw Error("zero_offdiagonal", "c_" + std::to_string(j) + " vanishes");
    }
  }
}

}  // namespace

PolynomialTable recurrence_polynomials(const TridiagonalForm& t, int n_max, double tol_sub) {
  const auto dim = static_cast<int>(t.dim());
  if (n_max < 0 || n_max > dim - 1) {
    throw Error("n_max_out_of_range",
                "n_max must lie in [0, " + std::to_string(dim - 1) + "], got " +
                    std::to_string(n_max));
  }
  require_nonzero_offdiag(t, n_max, tol_sub);

  PolynomialTable table;
  table.n_max = n_max;
  table.symmetry = t.symmetry;
  table.coeffs.push_back({Complex{1.0}});
  Polynomial previous;  // p_{-1} = 0
  for (int n = 0; n < n_max; ++n) {
    const Polynomial& current = table.coeffs[n];
    // p_{n+1} = (lambda p_n - b_n p_n - m_{n,n-1} p_{n-1}) / c_n
    Polynomial next = poly_add(poly_shift(current), poly_scale(current, -t.diag[n]));
    next = poly_add(next, poly_scale(previous, -lower_entry(t, n)));
    next = poly_scale(next, 1.0 / t.offdiag[n]);
    next.resize(n + 2);
    previous = current;
    table.coeffs.push_back(std::move(next));
  }

  Complex product = 1.0;
  for (int n = 0; n <= n_max; ++n) {
    table.mu.push_back(table.coeffs[n][n]);
    table.mu_residuals.push_back(std::abs(table.mu[n] * product - 1.0));
    if (n < n_max) product *= t.offdiag[n];
  }
  return table;
}

void monic_transform(PolynomialTable& table, const TridiagonalForm& t) {
  table.monic.clear();
  Complex product = 1.0;
  for (int n = 0; n <= table.n_max; ++n) {
    Polynomial row = poly_scale(table.coeffs[n], product);
    // Leading coefficient is 1 up to roundoff; pin it exactly.
    row[n] = 1.0;
    table.monic.push_back(std::move(row));
    if (n < table.n_max) product *= t.offdiag[n];
  }
}

double recurrence_residual(const PolynomialTable& table, const TridiagonalForm& t) {
  double worst = 0;
  for (int n = 0; n < table.n_max; ++n) {
    Polynomial lhs = poly_scale(table.coeffs[n], t.diag[n]);
    lhs = poly_add(lhs, poly_scale(table.coeffs[n + 1], t.offdiag[n]));
    if (n > 0) lhs = poly_add(lhs, poly_scale(table.coeffs[n - 1], lower_entry(t, n)));
    const Polynomial rhs = poly_shift(table.coeffs[n]);
    const double scale = std::max({coefficient_scale(lhs), coefficient_scale(rhs), 1e-300});
    worst = std::max(worst, max_abs_difference(lhs, rhs) / scale);
  }
  return worst;
}

double monic_recurrence_residual(const PolynomialTable& table, const TridiagonalForm& t) {
  if (table.monic.size() != table.coeffs.size()) {
    throw Error("monic_missing", "monic_transform has not been applied");
  }
  double worst = 0;
  for (int n = 0; n < table.n_max; ++n) {
    Polynomial rhs = poly_add(poly_shift(table.monic[n]), poly_scale(table.monic[n], -t.diag[n]));
    if (n > 0) {
      const Complex coupling = lower_entry(t, n) * t.offdiag[n - 1];
      rhs = poly_add(rhs, poly_scale(table.monic[n - 1], -coupling));
    }
    const Polynomial& lhs = table.monic[n + 1];
    const double scale = std::max({coefficient_scale(lhs), coefficient_scale(rhs), 1e-300});
    worst = std::max(worst, max_abs_difference(lhs, rhs) / scale);
  }
  return worst;
}

std::vector<Complex> moments(const TridiagonalForm& t, int k_max) {
  const ComplexMatrix m = t.reconstructed();
  ComplexVector v = ComplexVector::Zero(m.rows());
  v(0) = 1.0;
  std::vector<Complex> out;
  out.reserve(k_max + 1);
  for (int k = 0; k <= k_max; ++k) {
    out.push_back(v(0));
    v = m * v;
  }
  return out;
}

Complex apply_functional(const Polynomial& p, const std::vector<Complex>& moments) {
  if (p.size() > moments.size()) {
    throw Error("moments_short", "polynomial degree exceeds available moments");
  }
  Complex sum = 0;
  for (std::size_t k = 0; k < p.size(); ++k) sum += p[k] * moments[k];
  return sum;
}

OrthogonalityReport moment_orthogonality(const TridiagonalForm& t, int n_max, double tol_sub) {
  const auto dim = static_cast<int>(t.dim());
  if (n_max < 0 || n_max > (dim - 1) / 2) {
    throw Error("truncation_unsafe", "n_max " + std::to_string(n_max) +
                                         " exceeds the truncation-exact order " +
                                         std::to_string((dim - 1) / 2));
  }
  const PolynomialTable table = recurrence_polynomials(t, n_max, tol_sub);

  OrthogonalityReport report;
  report.moments = moments(t, 2 * n_max);
  report.gram.resize(n_max + 1, n_max + 1);
  report.residuals.resize(n_max + 1, n_max + 1);
  for (int m = 0; m <= n_max; ++m) {
    for (int n = 0; n <= n_max; ++n) {
      const Complex value =
          apply_functional(poly_multiply(table.coeffs[m], table.coeffs[n]), report.moments);
      report.gram(m, n) = value;
      report.residuals(m, n) = std::abs(value - (m == n ? 1.0 : 0.0));
      report.max_residual = std::max(report.max_residual, report.residuals(m, n));
    }
  }
  return report;
}

}  // namespace csop

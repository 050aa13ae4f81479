#include "csop/exact.hpp"

#include <utility>

#include "csop/error.hpp"

namespace csop::exact {

GaussianRational::GaussianRational(mpq_class re, mpq_class im)
    : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::from_fractions(long re_num, long re_den, long im_num,
                                                  long im_den) {
  if (re_den == 0 || im_den == 0) throw Error("division_by_zero", "zero denominator");
  return {mpq_class(re_num, re_den), mpq_class(im_num, im_den)};
}

std::string GaussianRational::to_string() const {
  return re_.get_str() + (sgn(im_) < 0 ? " - " : " + ") + mpq_class(abs(im_)).get_str() + "i";
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& other) {
  re_ += other.re_;
  im_ += other.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& other) {
  re_ -= other.re_;
  im_ -= other.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& other) {
  mpq_class re = re_ * other.re_ - im_ * other.im_;
  mpq_class im = re_ * other.im_ + im_ * other.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& other) {
  if (other.is_zero()) throw Error("division_by_zero", "division by exact zero");
  const mpq_class denom = other.norm_squared();
  *this *= other.conj();
  re_ /= denom;
  im_ /= denom;
  return *this;
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::adjoint() const {
  ExactMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c).conj();
  return out;
}

ExactVector ExactMatrix::apply(const ExactVector& x) const {
  require_same_dim(static_cast<Index>(cols_), static_cast<Index>(x.size()), "exact apply");
  ExactVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * x[c];
  return out;
}

ComplexMatrix ExactMatrix::to_complex() const {
  ComplexMatrix out(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      out(static_cast<Index>(r), static_cast<Index>(c)) = (*this)(r, c).to_complex();
  return out;
}

ComplexVector to_complex(const ExactVector& x) {
  ComplexVector out(static_cast<Index>(x.size()));
  for (std::size_t i = 0; i < x.size(); ++i) out(static_cast<Index>(i)) = x[i].to_complex();
  return out;
}

GaussianRational inner_product(const ExactVector& x, const ExactVector& y) {
  require_same_dim(static_cast<Index>(x.size()), static_cast<Index>(y.size()), "exact inner_product");
  GaussianRational sum;
  for (std::size_t j = 0; j < x.size(); ++j) sum += x[j] * y[j].conj();
  return sum;
}

namespace {

mpz_class lcm_of_denominators(const ExactMatrix& m, std::size_t row) {
  mpz_class l = 1;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(row, c).re().get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(row, c).im().get_den_mpz_t());
  }
  return l;
}

}  // namespace

GaussianRational bareiss_determinant(ExactMatrix m) {
  if (m.rows() != m.cols()) throw Error("not_square", "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;

  // det(m) = det(integer matrix) / prod(row factors)
  mpq_class row_factor_product = 1;
  for (std::size_t r = 0; r < n; ++r) {
    const mpz_class l = lcm_of_denominators(m, r);
    row_factor_product *= l;
    const GaussianRational factor{mpq_class(l)};
    for (std::size_t c = 0; c < n; ++c) m(r, c) *= factor;
  }

  bool negate = false;
  GaussianRational previous_pivot = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m(swap_row, k).is_zero()) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(swap_row, c));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Sylvester's identity makes this quotient an exact Gaussian integer.
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / previous_pivot;
      }
      m(i, k) = 0;
    }
    previous_pivot = m(k, k);
  }
  GaussianRational det = m(n - 1, n - 1) / GaussianRational{row_factor_product};
  return negate ? -det : det;
}

GaussianRational cofactor_determinant(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw Error("not_square", "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  GaussianRational det;
  for (std::size_t col = 0; col < n; ++col) {
    if (m(0, col).is_zero()) continue;
    ExactMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t target = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == col) continue;
        minor(r - 1, target++) = m(r, c);
      }
    }
    const GaussianRational term = m(0, col) * cofactor_determinant(minor);
    if (col % 2 == 0) det += term; else det -= term;
  }
  return det;
}

ExactMatrix gram_matrix(std::span<const ExactVector> vectors) {
  const std::size_t n = vectors.size();
  ExactMatrix g(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = k; l < n; ++l) {
      g(k, l) = inner_product(vectors[k], vectors[l]);
      g(l, k) = g(k, l).conj();
    }
  }
  return g;
}

mpq_class exact_gram_determinant(std::span<const ExactVector> vectors) {
  if (vectors.empty()) throw Error("empty_family", "gram determinant of an empty family");
  const GaussianRational det = bareiss_determinant(gram_matrix(vectors));
  if (!det.is_real()) {
    throw Error("gram_not_real", "exact Gram determinant has imaginary part " + det.to_string());
  }
  return det.re();
}

std::vector<ExactChainEntry> exact_membership_chain(const ExactMatrix& a, const ExactVector& x0,
                                                    int n_max) {
  if (a.rows() != a.cols()) throw Error("not_square", "matrix is not square");
  require_same_dim(static_cast<Index>(a.rows()), static_cast<Index>(x0.size()), "exact chain");
  const ExactMatrix a_adj = a.adjoint();

  std::vector<ExactVector> forward{x0};
  ExactVector adjoint = x0;
  std::vector<ExactChainEntry> chain;
  for (int n = 1; n <= n_max; ++n) {
    forward.push_back(a.apply(forward.back()));
    adjoint = a_adj.apply(adjoint);
    std::vector<ExactVector> family(forward);
    family.push_back(adjoint);

    ExactChainEntry entry;
    entry.n = n;
    entry.gamma = exact_gram_determinant(family);
    entry.scale = 1;
    for (const auto& y : family) entry.scale *= inner_product(y, y).re();
    entry.is_zero = sgn(entry.gamma) == 0;
    chain.push_back(std::move(entry));
  }
  return chain;
}

std::vector<ExactVector> exact_recurrence_rows(const ExactVector& diag, const ExactVector& offdiag,
                                               SymmetryClass c, int n_max) {
  if (n_max < 0 || static_cast<std::size_t>(n_max) > offdiag.size() ||
      offdiag.size() + 1 != diag.size()) {
    throw Error("n_max_out_of_range", "recurrence depth exceeds the available coefficients");
  }
  const GaussianRational sign = sign_of(c);
  std::vector<ExactVector> rows{ExactVector{GaussianRational(1)}};
  for (int n = 0; n < n_max; ++n) {
    const ExactVector& current = rows[n];
    ExactVector next(n + 2);
    for (int k = 0; k <= n; ++k) {
      next[k + 1] += current[k];
      next[k] -= diag[n] * current[k];
    }
    if (n > 0) {
      const GaussianRational lower = sign * offdiag[n - 1];
      for (int k = 0; k < n; ++k) next[k] -= lower * rows[n - 1][k];
    }
    for (auto& coefficient : next) coefficient /= offdiag[n];
    rows.push_back(std::move(next));
  }
  return rows;
}

}  // namespace csop::exact

#pragma once

#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "csop/conjugation.hpp"
#include "csop/linalg.hpp"

namespace csop::exact {

/// Complex number with arbitrary-precision rational real and imaginary parts.
/// mpq_class keeps both fractions reduced with positive denominators.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT: implicit from integers
  GaussianRational(mpq_class re, mpq_class im = 0);
  /// re_num/re_den + i im_num/im_den
  static GaussianRational from_fractions(long re_num, long re_den, long im_num, long im_den);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2, exact.
  mpq_class norm_squared() const { return re_ * re_ + im_ * im_; }
  Complex to_complex() const { return {re_.get_d(), im_.get_d()}; }
  std::string to_string() const;

  GaussianRational& operator+=(const GaussianRational& other);
  GaussianRational& operator-=(const GaussianRational& other);
  GaussianRational& operator*=(const GaussianRational& other);
  /// Throws Error("division_by_zero").
  GaussianRational& operator/=(const GaussianRational& other);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  mpq_class re_ = 0;
  mpq_class im_ = 0;
};

using ExactVector = std::vector<GaussianRational>;

/// Dense row-major matrix over Gaussian rationals.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ExactMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  GaussianRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  ExactMatrix adjoint() const;
  ExactVector apply(const ExactVector& x) const;
  ComplexMatrix to_complex() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> data_;
};

ComplexVector to_complex(const ExactVector& x);

/// sum_j x_j conj(y_j)
GaussianRational inner_product(const ExactVector& x, const ExactVector& y);

/// Determinant by fraction-free (Bareiss) elimination: rows are first cleared
/// to Gaussian integers, so every division in the elimination is exact.
GaussianRational bareiss_determinant(ExactMatrix m);

/// Determinant by Laplace expansion along the first row; an independent second
/// route for small matrices (n <= 8).
GaussianRational cofactor_determinant(const ExactMatrix& m);

ExactMatrix gram_matrix(std::span<const ExactVector> vectors);

/// Exact Gram determinant. Throws Error("gram_not_real") if the imaginary part
/// is not exactly zero (which would indicate a broken Gram matrix).
mpq_class exact_gram_determinant(std::span<const ExactVector> vectors);

struct ExactChainEntry {
  int n = 0;
  mpq_class gamma;
  mpq_class scale;  // prod ||y_j||^2
  bool is_zero = false;
};

/// Exact Gamma_n = Gamma(x_0..x_n, x_n*) for n = 1..n_max.
std::vector<ExactChainEntry> exact_membership_chain(const ExactMatrix& a, const ExactVector& x0,
                                                    int n_max);

/// Rows of the row recurrence m_{n,n-1} p_{n-1} + b_n p_n + c_n p_{n+1} = lambda p_n
/// in exact arithmetic.
std::vector<ExactVector> exact_recurrence_rows(const ExactVector& diag, const ExactVector& offdiag,
                                               SymmetryClass c, int n_max);

/// Random Gaussian rational with numerators in [-bound, bound] and denominators
/// in [1, bound].
template <class Engine>
GaussianRational random_gaussian_rational(Engine& engine, long bound) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, bound);
  const long rn = num(engine), rd = den(engine), in = num(engine), id = den(engine);
  return GaussianRational::from_fractions(rn, rd, in, id);
}

}  // namespace csop::exact

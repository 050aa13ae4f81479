#include "csop/conjugation.hpp"

#include <utility>

#include "csop/error.hpp"

namespace csop {

std::string_view to_string(SymmetryClass c) {
  return c == SymmetryClass::plus ? "plus" : "minus";
}

SymmetryClass parse_symmetry_class(std::string_view text) {
  if (text == "plus") return SymmetryClass::plus;
  if (text == "minus") return SymmetryClass::minus;
  throw Error("bad_class", "class must be 'plus' or 'minus', got '" + std::string(text) + "'");
}

Conjugation::Conjugation(ComplexMatrix coeff) : coeff_(std::move(coeff)) {
  require_square(coeff_);
  if (coeff_.rows() == 0) throw Error("empty", "conjugation dimension must be positive");
}

ComplexVector Conjugation::operator()(const ComplexVector& x) const {
  require_same_dim(dim(), x.size(), "conjugation apply");
  return coeff_ * x.conjugate();
}

Conjugation coordinate_conjugation(Index dim) {
  if (dim < 1) throw Error("empty", "conjugation dimension must be positive");
  return Conjugation(ComplexMatrix::Identity(dim, dim));
}

ComplexVector apply(const Conjugation& j, const ComplexVector& x) { return j(x); }

ConjugationCheck validate(const Conjugation& j, double tolerance) {
  const ComplexMatrix& c = j.coeff();
  const auto identity = ComplexMatrix::Identity(c.rows(), c.cols());
  ConjugationCheck check;
  check.tolerance = tolerance;
  check.involution_residual = (c * c.conjugate() - identity).norm();
  check.isometry_residual = (c * c.adjoint() - identity).norm();
  return check;
}

ComplexMatrix conjugated_operator(const ComplexMatrix& a, const Conjugation& j) {
  require_square(a);
  require_same_dim(j.dim(), a.rows(), "conjugated_operator");
  return j.coeff() * a.conjugate() * j.coeff().conjugate();
}

double symmetry_defect(const ComplexMatrix& a, const Conjugation& j, SymmetryClass c) {
  const ComplexMatrix jaj = conjugated_operator(a, j);
  return (jaj - static_cast<double>(sign_of(c)) * a.adjoint()).norm();
}

}  // namespace csop

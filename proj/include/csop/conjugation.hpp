#pragma once

#include <string>
#include <string_view>

#include "csop/linalg.hpp"

namespace csop {

/// C+ (complex symmetric, JAJ = A^H) or C- (skew, JAJ = -A^H).
enum class SymmetryClass { plus, minus };

constexpr int sign_of(SymmetryClass c) { return c == SymmetryClass::plus ? 1 : -1; }
std::string_view to_string(SymmetryClass c);
/// Accepts "plus" / "minus"; throws Error("bad_class") otherwise.
SymmetryClass parse_symmetry_class(std::string_view text);

/// Antilinear map J x = C * conj(x), stored by its coefficient matrix C.
///
/// Construction only requires C to be square. Whether J is a conjugation
/// (involutive and isometric) is answered by validate().
class Conjugation {
 public:
  explicit Conjugation(ComplexMatrix coeff);

  Index dim() const { return coeff_.rows(); }
  const ComplexMatrix& coeff() const { return coeff_; }

  ComplexVector operator()(const ComplexVector& x) const;

 private:
  ComplexMatrix coeff_;
};

/// C = identity: entrywise complex conjugation in the standard basis.
Conjugation coordinate_conjugation(Index dim);

ComplexVector apply(const Conjugation& j, const ComplexVector& x);

struct ConjugationCheck {
  double involution_residual = 0;  // ||C conj(C) - I||_F
  double isometry_residual = 0;    // ||C C^H - I||_F
  double tolerance = 1e-10;

  bool passes() const {
    return involution_residual <= tolerance && isometry_residual <= tolerance;
  }
};

ConjugationCheck validate(const Conjugation& j, double tolerance = 1e-10);

/// Matrix of the linear map x -> J(A(J x)), i.e. C conj(A) conj(C).
ComplexMatrix conjugated_operator(const ComplexMatrix& a, const Conjugation& j);

/// ||JAJ - sign * A^H||_F. Zero iff A is J-symmetric (plus) or J-skew-symmetric
/// (minus).
double symmetry_defect(const ComplexMatrix& a, const Conjugation& j, SymmetryClass c);

}  // namespace csop

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "csop/conjugation.hpp"
#include "csop/linalg.hpp"

namespace csop {

/// Forward and adjoint Krylov sequences of x0 together with the Gram
/// determinants Gamma_n = Gamma(x_0, ..., x_n, x_n*) for n = 1..depth.
struct KrylovData {
  int depth = 0;
  std::vector<ComplexVector> forward;  // x_k = A^k x0
  std::vector<ComplexVector> adjoint;  // x_k* = (A^H)^k x0
  std::vector<double> gammas;          // gammas[n-1] = Gamma_n
  std::vector<double> gamma_scales;    // Hadamard bound of each family
  std::vector<bool> degenerate;
  Index cyclic_rank = 0;
};

KrylovData krylov_data(const ComplexMatrix& a, const ComplexVector& x0, int n_max,
                       double tol_zero = kDefaultTolZero,
                       double tol_rank = kDefaultTolRank);

/// Dimension of the Krylov space of (A, x0); x0 is cyclic iff this equals dim.
Index cyclicity_rank(const ComplexMatrix& a, const ComplexVector& x0,
                     double tol_rank = kDefaultTolRank);

/// The antilinear map L with L(A^k x0) = sign^k (A^H)^k x0, k = 0..dim-1.
/// The result is only a candidate; check it with validate().
/// Throws Error("krylov_singular") when x0 is not cyclic.
Conjugation build_L(const ComplexMatrix& a, const ComplexVector& x0, SymmetryClass c,
                    double tol_rank = kDefaultTolRank);

struct MembershipOptions {
  double tol_zero = kDefaultTolZero;
  double tol_rank = kDefaultTolRank;
  double tol_symmetry = 1e-8;   // relative to ||A||_F
  double tol_fixed = 1e-8;      // relative to ||x0||
  double tol_conjugation = 1e-10;
};

struct MembershipReport {
  SymmetryClass class_queried = SymmetryClass::plus;
  bool is_member = false;
  bool cyclic = false;
  Index cyclic_rank = 0;
  bool conjugation_ok = false;
  bool conjugation_constructed = false;  // true when L was built from (A, x0)
  bool fixes_x0 = false;
  bool gamma_chain_ok = false;
  std::optional<int> first_failing_n;
  std::vector<double> gamma_values;  // Gamma_n for n = 1..dim-1
  std::vector<double> gamma_scales;
  std::map<std::string, double> defect_values;
  std::optional<Conjugation> conjugation;  // the J (or L) that was checked
};

/// Finite-dimensional membership test for C+ / C-: x0 cyclic, J a conjugation
/// with JAJ = sign A^H and J x0 = x0, and every Gamma_n (1 <= n <= dim-1)
/// degenerate. Without a supplied J, the operator L is built and checked.
MembershipReport check_membership(const ComplexMatrix& a, const ComplexVector& x0,
                                  const std::optional<Conjugation>& j, SymmetryClass c,
                                  const MembershipOptions& options = {});

}  // namespace csop

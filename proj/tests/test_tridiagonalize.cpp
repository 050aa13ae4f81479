#include <doctest.h>

#include <cmath>
#include <numbers>

#include "csop/error.hpp"
#include "csop/generators.hpp"
#include "csop/membership.hpp"
#include "csop/tridiagonalize.hpp"
#include "oracles/lanczos.hpp"
#include "support.hpp"

using namespace csop;
using csop::test::kI;

namespace {

ComplexMatrix diag12() {
  ComplexMatrix a = ComplexMatrix::Zero(2, 2);
  a(0, 0) = 1.0;
  a(1, 1) = 2.0;
  return a;
}

ComplexVector ones_normalized(Index dim) {
  return ComplexVector::Ones(dim) / std::sqrt(static_cast<double>(dim));
}

ComplexMatrix free_jacobi(Index dim) {
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  for (Index k = 0; k + 1 < dim; ++k) m(k, k + 1) = m(k + 1, k) = 1.0;
  return m;
}

void check_guarantees(const TridiagonalForm& form, const ComplexMatrix& a, const Conjugation& j) {
  const Index dim = a.rows();
  const ComplexMatrix& e = form.basis;
  CHECK((e.adjoint() * e - ComplexMatrix::Identity(dim, dim)).norm() <= 1e-10);
  CHECK((e.adjoint() * a * e - form.reconstructed()).norm() <= 1e-9 * a.norm());
  for (Index r = 0; r < dim; ++r) {
    const ComplexVector col = e.col(r);
    CHECK((j(col) - col).norm() <= 1e-8);
  }
  CHECK(form.verification.passes());
  CHECK(form.orthonormality_residual <= 1e-10);
  CHECK(form.similarity_residual <= 1e-9 * a.norm());
  CHECK(form.max_fixed_residual <= 1e-8);
}

}  // namespace

TEST_CASE("orthonormalize_krylov examples") {
  SUBCASE("diag(1, 2) from the normalized ones vector") {
    const ComplexMatrix g = orthonormalize_krylov(diag12(), ones_normalized(2));
    ComplexVector g1(2);
    g1 << -1.0, 1.0;
    g1 /= std::sqrt(2.0);
    CHECK((g.col(0) - ones_normalized(2)).norm() <= 1e-15);
    CHECK((g.col(1) - g1).norm() <= 1e-15);
  }
  SUBCASE("a tridiagonal Jacobi matrix from e0 gives the identity") {
    const ComplexMatrix g = orthonormalize_krylov(free_jacobi(5), test::unit(5, 0));
    CHECK((g - ComplexMatrix::Identity(5, 5)).norm() <= 1e-14);
  }
  SUBCASE("random instances are orthonormal") {
    Rng rng(2);
    for (int trial = 0; trial < 20; ++trial) {
      const ComplexMatrix g =
          orthonormalize_krylov(test::random_matrix(5, 5, rng), test::random_vector(5, rng));
      CHECK((g.adjoint() * g - ComplexMatrix::Identity(5, 5)).norm() <= 1e-10);
    }
  }
}

TEST_CASE("orthonormalize_krylov breaks down on a non-cyclic vector") {
  std::string code;
  try {
    orthonormalize_krylov(ComplexMatrix::Identity(3, 3), ones_normalized(3));
  } catch (const Error& e) {
    code = e.code();
  }
  CHECK(code == "krylov_breakdown");
}

TEST_CASE("fix_phases examples") {
  Rng rng(5);
  const Conjugation j = coordinate_conjugation(3);
  SUBCASE("real columns are left alone") {
    const ComplexMatrix q = orthonormalize_krylov(test::random_real_symmetric(3, rng), test::real_vector(3, rng));
    const PhaseFix fix = fix_phases(q, j);
    for (double phi : fix.phases) CHECK(phi == 0.0);
    CHECK((fix.basis - q).norm() <= 1e-15);
  }
  SUBCASE("i times a real unit vector turns into minus that vector") {
    ComplexMatrix g = ComplexMatrix::Identity(3, 3);
    g(1, 1) = kI;
    const PhaseFix fix = fix_phases(g, j);
    CHECK(fix.betas[1] == Complex(-1.0, 0.0));
    CHECK(fix.phases[1] == doctest::Approx(std::numbers::pi));
    CHECK(std::abs(fix.basis(1, 1) - Complex(-1.0, 0.0)) <= 1e-15);
    CHECK(fix.max_fixed_residual <= 1e-15);
  }
  SUBCASE("a column that J does not preserve is a phase defect") {
    ComplexMatrix g = ComplexMatrix::Identity(3, 3);
    g(0, 0) = g(1, 0) = 1.0 / std::sqrt(2.0);
    g(1, 0) *= kI;
    std::string code;
    try {
      fix_phases(g, j);
    } catch (const Error& e) {
      code = e.code();
    }
    CHECK(code == "phase_defect");
  }
}

TEST_CASE("assemble examples") {
  const ComplexMatrix g = orthonormalize_krylov(diag12(), ones_normalized(2));
  const TridiagonalForm form = assemble(diag12(), g);
  CHECK(std::abs(form.diag[0] - 1.5) <= 1e-15);
  CHECK(std::abs(form.offdiag[0] - 0.5) <= 1e-15);
  CHECK(std::abs(form.diag[1] - 1.5) <= 1e-15);

  const ComplexMatrix a = generate_instance(InstanceKind::m3plus, 5, 3).matrix;
  const TridiagonalForm identity = assemble(a, ComplexMatrix::Identity(5, 5));
  CHECK((identity.matrix - a).norm() == 0.0);
  CHECK(identity.off_tridiagonal_residual == 0.0);
  for (Index k = 0; k < 5; ++k) CHECK(identity.diag[k] == a(k, k));
}

TEST_CASE("assemble is invariant under a simultaneous unitary change of coordinates") {
  Rng rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const Index dim = 2 + trial % 6;
    const ComplexMatrix a = test::random_matrix(dim, dim, rng);
    const ComplexMatrix e = test::random_unitary(dim, rng);
    const ComplexMatrix u = test::random_unitary(dim, rng);
    const TridiagonalForm base = assemble(a, e);
    const TridiagonalForm moved = assemble(u * a * u.adjoint(), u * e);
    CHECK((base.matrix - moved.matrix).norm() <= 1e-10);
  }
}

TEST_CASE("verify_m3 examples") {
  CHECK(verify_m3(free_jacobi(5), SymmetryClass::plus).passes());
  CHECK_FALSE(verify_m3(free_jacobi(5), SymmetryClass::minus).passes());

  const M3Report zero = verify_m3(ComplexMatrix::Zero(4, 4), SymmetryClass::plus);
  CHECK_FALSE(zero.subdiagonal_nonzero);
  CHECK_FALSE(zero.passes());

  ComplexMatrix injected = free_jacobi(5);
  injected(0, 2) = 0.1;
  const M3Report r = verify_m3(injected, SymmetryClass::plus);
  CHECK_FALSE(r.tridiagonal);
  CHECK(r.off_residual == doctest::Approx(0.1));
  CHECK_FALSE(r.passes());

  ComplexMatrix skew = free_jacobi(4);
  for (Index k = 0; k + 1 < 4; ++k) skew(k + 1, k) = -1.0;
  CHECK(verify_m3(skew, SymmetryClass::minus).passes());
  CHECK_FALSE(verify_m3(skew, SymmetryClass::plus).symmetric);

  CHECK(verify_m3(ComplexMatrix::Constant(1, 1, 2.0), SymmetryClass::plus).passes());
}

TEST_CASE("round trip recovers generated members up to a diagonal sign change") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Index dim = 3 + static_cast<Index>(seed % 10);
    for (auto kind : {InstanceKind::m3plus, InstanceKind::m3minus}) {
      const Instance inst = generate_instance(kind, dim, seed);
      const SymmetryClass c = kind == InstanceKind::m3plus ? SymmetryClass::plus : SymmetryClass::minus;
      CAPTURE(seed);
      CAPTURE(to_string(kind));
      const TridiagonalForm form = tridiagonalize(inst.matrix, inst.x0, inst.conjugation, c);
      const test::SignEquivalence eq = test::sign_equivalence(inst.matrix, form.matrix);
      CHECK(eq.signs[0] == 1.0);
      CHECK(eq.residual <= 1e-8 * inst.matrix.norm());
      check_guarantees(form, inst.matrix, inst.conjugation);
    }
  }
}

TEST_CASE("hidden members are recovered after a unitary change of coordinates") {
  Rng rng(13);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Index dim = 3 + static_cast<Index>(seed % 6);
    const Instance inst = generate_instance(InstanceKind::m3plus, dim, seed);
    const ComplexMatrix u = test::random_unitary(dim, rng);
    const ComplexMatrix a = u * inst.matrix * u.adjoint();
    const Conjugation j(u * u.transpose());
    const TridiagonalForm form = tridiagonalize(a, u * inst.x0, j, SymmetryClass::plus);
    check_guarantees(form, a, j);
    CHECK(test::sign_equivalence(inst.matrix, form.matrix).residual <= 1e-8 * a.norm());
  }
}

TEST_CASE("self-adjoint input matches a plain Lanczos run") {
  Rng rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const Index dim = 3 + trial % 6;
    const ComplexMatrix a = test::random_real_symmetric(dim, rng);
    const ComplexVector x0 = test::real_vector(dim, rng);
    const Conjugation j = coordinate_conjugation(dim);
    const TridiagonalForm form = tridiagonalize(a, x0, j, SymmetryClass::plus);
    const oracle::LanczosResult ref = oracle::lanczos(a, x0);
    ComplexMatrix jacobi = ComplexMatrix::Zero(dim, dim);
    for (Index k = 0; k < dim; ++k) jacobi(k, k) = ref.alpha[k];
    for (Index k = 0; k + 1 < dim; ++k) jacobi(k, k + 1) = jacobi(k + 1, k) = ref.beta[k];
    CHECK(test::sign_equivalence(jacobi, form.matrix).residual <= 1e-8);
    CHECK(form.matrix.imag().norm() <= 1e-10);
  }
}

TEST_CASE("real antisymmetric input yields a skew tridiagonal form") {
  Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const Index dim = 3 + trial % 4;
    const ComplexMatrix a = test::random_real_antisymmetric(dim, rng);
    const ComplexVector x0 = test::real_vector(dim, rng);
    const Conjugation j = coordinate_conjugation(dim);
    const TridiagonalForm form = tridiagonalize(a, x0, j, SymmetryClass::minus);
    for (const Complex& b : form.diag) CHECK(std::abs(b) <= 1e-12);
    for (const Complex& c : form.offdiag) CHECK(std::abs(c.imag()) <= 1e-12);
    check_guarantees(form, a, j);
  }
}

TEST_CASE("(M M^H)_{0,2} equals m_{0,1} conj(m_{2,1}) on plus members") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Index dim = 3 + static_cast<Index>(seed % 10);
    const ComplexMatrix m = generate_instance(InstanceKind::m3plus, dim, seed).matrix;
    const ComplexMatrix mmh = m * m.adjoint();
    CHECK(std::abs(mmh(0, 2) - m(0, 1) * std::conj(m(2, 1))) <= 1e-12);
    CHECK(std::abs(mmh(0, 2)) > 0.0);
    CHECK((mmh - ComplexMatrix::Identity(dim, dim)).norm() > 1e-12);
  }
}

TEST_CASE("diagonal unitary instances stop at the phase fix") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Index dim = 3 + static_cast<Index>(seed % 6);
    const Instance inst = generate_instance(InstanceKind::diag_unitary, dim, seed);
    std::string stage;
    try {
      tridiagonalize(inst.matrix, inst.x0, inst.conjugation, SymmetryClass::plus);
    } catch (const PipelineError& e) {
      stage = e.stage();
      CHECK(e.code() == "phase_defect");
    }
    CHECK(stage == "fix_phases");
  }
}

TEST_CASE("form_from_coefficients rebuilds the matrix with the class sign") {
  const std::vector<Complex> diag{0.5, Complex(0, 1), -1.0};
  const std::vector<Complex> off{2.0, Complex(1, 1)};
  const TridiagonalForm plus = form_from_coefficients(diag, off, SymmetryClass::plus);
  const ComplexMatrix m = plus.reconstructed();
  CHECK(m(1, 0) == 2.0);
  CHECK(m(2, 1) == Complex(1, 1));
  CHECK(plus.verification.passes());
  const TridiagonalForm minus = form_from_coefficients({0.0, 0.0, 0.0}, off, SymmetryClass::minus);
  CHECK(minus.reconstructed()(2, 1) == -Complex(1, 1));
  CHECK(minus.verification.passes());
}

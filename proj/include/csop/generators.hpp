#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "csop/conjugation.hpp"
#include "csop/linalg.hpp"

namespace csop {

/// Seeded source of uniform doubles. The mapping from the engine's output to
/// doubles is fixed here so instances are identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
  }
  /// Uniform on [-1, 1]^2.
  Complex unit_box() {
    const double re = uniform(-1, 1);
    return {re, uniform(-1, 1)};
  }
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

enum class InstanceKind { m3plus, m3minus, jacobi, diag_unitary };

std::string_view to_string(InstanceKind kind);
/// "m3plus" | "m3minus" | "jacobi" | "diag-unitary"
InstanceKind parse_instance_kind(std::string_view text);

struct Instance {
  InstanceKind kind;
  ComplexMatrix matrix;
  ComplexVector x0;
  Conjugation conjugation;
};

inline constexpr double kDefaultMinOffdiag = 0.1;

/// Random tridiagonal matrix of the plus or minus class: entries from
/// [-1, 1]^2, |c_n| >= min_offdiag, zero diagonal for the minus class.
ComplexMatrix random_m3(Index dim, SymmetryClass c, Rng& rng,
                        double min_offdiag = kDefaultMinOffdiag);

/// Real symmetric tridiagonal matrix with b_n in [-1, 1], c_n in [min_offdiag, 1].
ComplexMatrix random_jacobi(Index dim, Rng& rng, double min_offdiag = kDefaultMinOffdiag);

/// Distinct angles in [0, 2 pi) with pairwise circular gap >= 2 pi / (10 dim).
std::vector<double> random_distinct_phases(Index dim, Rng& rng);

/// Deterministic per (kind, dim, seed). The tridiagonal kinds come with
/// x0 = e_0 and the coordinate conjugation. diag-unitary gives
/// U = diag(exp(i theta_j)) with x0 = (sqrt(w_j)) for positive weights summing
/// to one, also with the coordinate conjugation.
Instance generate_instance(InstanceKind kind, Index dim, std::uint64_t seed,
                           double min_offdiag = kDefaultMinOffdiag);

}  // namespace csop

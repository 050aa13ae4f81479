#include "csop/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "csop/error.hpp"

namespace csop {

std::string_view to_string(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::m3plus: return "m3plus";
    case InstanceKind::m3minus: return "m3minus";
    case InstanceKind::jacobi: return "jacobi";
    case InstanceKind::diag_unitary: return "diag-unitary";
  }
  return "unknown";
}

InstanceKind parse_instance_kind(std::string_view text) {
  if (text == "m3plus") return InstanceKind::m3plus;
  if (text == "m3minus") return InstanceKind::m3minus;
  if (text == "jacobi") return InstanceKind::jacobi;
  if (text == "diag-unitary") return InstanceKind::diag_unitary;
  throw Error("bad_kind", "unknown instance kind '" + std::string(text) + "'");
}

ComplexMatrix random_m3(Index dim, SymmetryClass c, Rng& rng, double min_offdiag) {
  if (dim < 1) throw Error("bad_dim", "dimension must be positive");
  if (!(min_offdiag >= 0 && min_offdiag < 1)) {
    throw Error("bad_min_offdiag", "min_offdiag must lie in [0, 1)");
  }
  const double sign = sign_of(c);
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  for (Index k = 0; k < dim; ++k) {
    if (c == SymmetryClass::plus) m(k, k) = rng.unit_box();
    if (k + 1 < dim) {
      Complex offdiag = rng.unit_box();
      while (std::abs(offdiag) < min_offdiag || offdiag == Complex{}) offdiag = rng.unit_box();
      m(k, k + 1) = offdiag;
      m(k + 1, k) = sign * offdiag;
    }
  }
  return m;
}

ComplexMatrix random_jacobi(Index dim, Rng& rng, double min_offdiag) {
  if (dim < 1) throw Error("bad_dim", "dimension must be positive");
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  for (Index k = 0; k < dim; ++k) {
    m(k, k) = rng.uniform(-1, 1);
    if (k + 1 < dim) {
      const double c = rng.uniform(std::max(min_offdiag, 1e-3), 1.0);
      m(k, k + 1) = c;
      m(k + 1, k) = c;
    }
  }
  return m;
}

std::vector<double> random_distinct_phases(Index dim, Rng& rng) {
  const double two_pi = 2 * std::numbers::pi;
  const double min_gap = two_pi / (10.0 * static_cast<double>(dim));
  std::vector<double> phases;
  while (static_cast<Index>(phases.size()) < dim) {
    const double theta = rng.uniform(0, two_pi);
    const bool separated = std::all_of(phases.begin(), phases.end(), [&](double other) {
      const double gap = std::abs(theta - other);
      return std::min(gap, two_pi - gap) >= min_gap;
    });
    if (separated) phases.push_back(theta);
  }
  return phases;
}

Instance generate_instance(InstanceKind kind, Index dim, std::uint64_t seed, double min_offdiag) {
  if (dim < 2) throw Error("bad_dim", "generated instances need dim >= 2");
  Rng rng(seed);
  ComplexVector e0 = ComplexVector::Zero(dim);
  e0(0) = 1.0;
  switch (kind) {
    case InstanceKind::m3plus:
      return {kind, random_m3(dim, SymmetryClass::plus, rng, min_offdiag), e0,
              coordinate_conjugation(dim)};
    case InstanceKind::m3minus:
      return {kind, random_m3(dim, SymmetryClass::minus, rng, min_offdiag), e0,
              coordinate_conjugation(dim)};
    case InstanceKind::jacobi:
      return {kind, random_jacobi(dim, rng, min_offdiag), e0, coordinate_conjugation(dim)};
    case InstanceKind::diag_unitary: {
      const std::vector<double> phases = random_distinct_phases(dim, rng);
      std::vector<double> weights(dim);
      double total = 0;
      for (auto& w : weights) total += (w = rng.uniform(0.1, 1.0));
      ComplexMatrix u = ComplexMatrix::Zero(dim, dim);
      ComplexVector x0(dim);
      for (Index j = 0; j < dim; ++j) {
        u(j, j) = std::polar(1.0, phases[j]);
        x0(j) = std::sqrt(weights[j] / total);
      }
      return {kind, u, x0, coordinate_conjugation(dim)};
    }
  }
  throw Error("bad_kind", "unknown instance kind");
}

}  // namespace csop

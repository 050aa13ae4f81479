#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "csop/conjugation.hpp"
#include "csop/linalg.hpp"
#include "csop/membership.hpp"
#include "csop/polynomials.hpp"
#include "csop/tridiagonalize.hpp"

namespace csop::cli {

using Json = nlohmann::ordered_json;

/// Reads and parses a JSON file; throws Error("io_error" | "malformed_json").
Json load_json_file(const std::string& path);

/// {"rows": r, "cols": c, "data": [[re, im], ...]} in row-major order.
/// `field` names the enclosing field in error messages.
ComplexMatrix parse_matrix(const Json& j, std::string_view field = "matrix");
/// {"dim": n, "data": [[re, im], ...]}, or a MatrixFile with a single column.
ComplexVector parse_vector(const Json& j, std::string_view field = "x0");
/// {"coeff": MatrixFile}
Conjugation parse_conjugation(const Json& j);
/// {"class": "plus"|"minus", "diag": [[re, im], ...], "offdiag": [...]}
TridiagonalForm parse_tridiagonal(const Json& j);

Json to_json(Complex z);
Json to_json(const std::vector<Complex>& values);
Json matrix_to_json(const ComplexMatrix& m);
Json vector_to_json(const ComplexVector& x);
Json conjugation_to_json(const Conjugation& j);
Json membership_to_json(const MembershipReport& report);
Json m3_report_to_json(const M3Report& report);
Json tridiagonal_to_json(const TridiagonalForm& form);
Json polynomial_table_to_json(const PolynomialTable& table);

/// Deterministic serialization: insertion field order, 2-space indent, floats
/// printed with 17 significant digits, non-finite floats as null.
void write_json(std::ostream& out, const Json& j);
std::string dump_json(const Json& j);

}  // namespace csop::cli

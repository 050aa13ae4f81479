#include "csop/cli/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "csop/error.hpp"

namespace csop::cli {

namespace {

[[noreturn]] void malformed(std::string_view field, const std::string& what) {
  throw Error("malformed_input", "field '" + std::string(field) + "': " + what);
}

const Json& require_field(const Json& j, std::string_view parent, const char* key) {
  if (!j.is_object()) malformed(parent, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) malformed(std::string(parent) + "." + key, "missing");
  return *it;
}

long require_positive_int(const Json& j, std::string_view parent, const char* key) {
  const Json& value = require_field(j, parent, key);
  if (!value.is_number_integer() || value.get<long>() < 1) {
    malformed(std::string(parent) + "." + key, "expected a positive integer");
  }
  return value.get<long>();
}

Complex parse_complex(const Json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    malformed(field, "expected [re, im]");
  }
  const Complex z{j[0].get<double>(), j[1].get<double>()};
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) malformed(field, "non-finite value");
  return z;
}

std::vector<Complex> parse_complex_list(const Json& j, const std::string& field) {
  if (!j.is_array()) malformed(field, "expected an array of [re, im] pairs");
  std::vector<Complex> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(parse_complex(j[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

void write_number(std::ostream& out, double value) {
  if (!std::isfinite(value)) {
    out << "null";
    return;
  }
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  out << buffer;
}

bool is_flat(const Json& j) {
  for (const auto& element : j) {
    if (element.is_structured()) return false;
  }
  return true;
}

bool is_flat_matrix(const Json& j) {
  for (const auto& element : j) {
    if (!element.is_array() || !is_flat(element)) return false;
  }
  return true;
}

void write_value(std::ostream& out, const Json& j, int indent) {
  const std::string pad(indent, ' ');
  const std::string inner(indent + 2, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out << "{}";
        return;
      }
      out << "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out << ",\n";
        first = false;
        out << inner << Json(key).dump() << ": ";
        write_value(out, value, indent + 2);
      }
      out << "\n" << pad << "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out << "[]";
        return;
      }
      // Scalars and [re, im] pairs stay on one line.
      if (is_flat(j) || (is_flat_matrix(j) && j.front().size() <= 2)) {
        out << "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) out << ", ";
          write_value(out, j[i], indent);
        }
        out << "]";
        return;
      }
      out << "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out << ",\n";
        out << inner;
        write_value(out, j[i], indent + 2);
      }
      out << "\n" << pad << "]";
      return;
    }
    case Json::value_t::number_float:
      write_number(out, j.get<double>());
      return;
    default:
      out << j.dump();
      return;
  }
}

}  // namespace

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("io_error", "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error("malformed_json", "'" + path + "': " + e.what());
  }
}

ComplexMatrix parse_matrix(const Json& j, std::string_view field) {
  const long rows = require_positive_int(j, field, "rows");
  const long cols = require_positive_int(j, field, "cols");
  const std::string data_field = std::string(field) + ".data";
  const auto values = parse_complex_list(require_field(j, field, "data"), data_field);
  if (values.size() != static_cast<std::size_t>(rows * cols)) {
    malformed(data_field, "expected " + std::to_string(rows * cols) + " entries, got " +
                              std::to_string(values.size()));
  }
  ComplexMatrix m(rows, cols);
  for (long r = 0; r < rows; ++r)
    for (long c = 0; c < cols; ++c) m(r, c) = values[r * cols + c];
  return m;
}

ComplexVector parse_vector(const Json& j, std::string_view field) {
  if (j.is_object() && j.contains("rows")) {
    const ComplexMatrix m = parse_matrix(j, field);
    if (m.cols() != 1) malformed(std::string(field) + ".cols", "a vector needs cols == 1");
    return m.col(0);
  }
  const long dim = require_positive_int(j, field, "dim");
  const std::string data_field = std::string(field) + ".data";
  const auto values = parse_complex_list(require_field(j, field, "data"), data_field);
  if (values.size() != static_cast<std::size_t>(dim)) {
    malformed(data_field, "expected " + std::to_string(dim) + " entries, got " +
                              std::to_string(values.size()));
  }
  ComplexVector x(dim);
  for (long i = 0; i < dim; ++i) x(i) = values[i];
  return x;
}

Conjugation parse_conjugation(const Json& j) {
  const ComplexMatrix coeff = parse_matrix(require_field(j, "conjugation", "coeff"), "conjugation.coeff");
  if (coeff.rows() != coeff.cols()) {
    throw Error("not_square", "conjugation.coeff must be square");
  }
  return Conjugation(coeff);
}

TridiagonalForm parse_tridiagonal(const Json& j) {
  SymmetryClass c = SymmetryClass::plus;
  if (j.is_object() && j.contains("class")) {
    if (!j["class"].is_string()) malformed("tridiag.class", "expected \"plus\" or \"minus\"");
    c = parse_symmetry_class(j["class"].get<std::string>());
  }
  auto diag = parse_complex_list(require_field(j, "tridiag", "diag"), "tridiag.diag");
  auto offdiag = parse_complex_list(require_field(j, "tridiag", "offdiag"), "tridiag.offdiag");
  if (diag.empty()) malformed("tridiag.diag", "must not be empty");
  if (offdiag.size() + 1 != diag.size()) {
    malformed("tridiag.offdiag", "expected length " + std::to_string(diag.size() - 1));
  }
  return form_from_coefficients(std::move(diag), std::move(offdiag), c);
}

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const std::vector<Complex>& values) {
  Json out = Json::array();
  for (const auto& z : values) out.push_back(to_json(z));
  return out;
}

Json matrix_to_json(const ComplexMatrix& m) {
  Json data = Json::array();
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c) data.push_back(to_json(m(r, c)));
  Json out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["data"] = std::move(data);
  return out;
}

Json vector_to_json(const ComplexVector& x) {
  Json data = Json::array();
  for (Index i = 0; i < x.size(); ++i) data.push_back(to_json(x(i)));
  Json out;
  out["dim"] = x.size();
  out["data"] = std::move(data);
  return out;
}

Json conjugation_to_json(const Conjugation& j) {
  Json out;
  out["coeff"] = matrix_to_json(j.coeff());
  return out;
}

Json membership_to_json(const MembershipReport& report) {
  Json out;
  out["class"] = std::string(to_string(report.class_queried));
  out["is_member"] = report.is_member;
  out["cyclic"] = report.cyclic;
  out["cyclic_rank"] = report.cyclic_rank;
  out["conjugation_ok"] = report.conjugation_ok;
  out["conjugation_source"] = !report.conjugation ? "unavailable"
                              : report.conjugation_constructed ? "constructed_L"
                                                               : "supplied";
  out["fixes_x0"] = report.fixes_x0;
  out["gamma_chain_ok"] = report.gamma_chain_ok;
  if (report.first_failing_n) {
    out["first_failing_n"] = *report.first_failing_n;
    out["gamma"] = report.gamma_values[*report.first_failing_n - 1];
  } else {
    out["first_failing_n"] = nullptr;
    out["gamma"] = nullptr;
  }
  out["gamma_values"] = report.gamma_values;
  out["gamma_scales"] = report.gamma_scales;
  Json defects = Json::object();
  for (const auto& [name, value] : report.defect_values) defects[name] = value;
  out["defect_values"] = std::move(defects);
  if (report.conjugation && report.conjugation_constructed) {
    out["conjugation"] = conjugation_to_json(*report.conjugation);
  }
  return out;
}

Json m3_report_to_json(const M3Report& report) {
  Json out;
  out["passes"] = report.passes();
  out["tridiagonal"] = report.tridiagonal;
  out["symmetric"] = report.symmetric;
  out["subdiagonal_nonzero"] = report.subdiagonal_nonzero;
  out["off_residual"] = report.off_residual;
  out["symmetry_residual"] = report.symmetry_residual;
  out["min_subdiagonal"] = report.min_subdiagonal;
  out["norm"] = report.norm;
  return out;
}

Json tridiagonal_to_json(const TridiagonalForm& form) {
  Json out;
  out["class"] = std::string(to_string(form.symmetry));
  out["dim"] = form.dim();
  out["diag"] = to_json(form.diag);
  out["offdiag"] = to_json(form.offdiag);
  out["phases"] = form.phases;
  if (form.basis.size() > 0) out["basis"] = matrix_to_json(form.basis);
  Json residuals;
  residuals["orthonormality"] = form.orthonormality_residual;
  residuals["similarity"] = form.similarity_residual;
  residuals["off_tridiagonal"] = form.off_tridiagonal_residual;
  residuals["max_fixed"] = form.max_fixed_residual;
  out["residuals"] = std::move(residuals);
  out["verification"] = m3_report_to_json(form.verification);
  return out;
}

Json polynomial_table_to_json(const PolynomialTable& table) {
  Json out;
  out["class"] = std::string(to_string(table.symmetry));
  out["n_max"] = table.n_max;
  Json rows = Json::array();
  for (const auto& row : table.coeffs) rows.push_back(to_json(row));
  out["coeffs"] = std::move(rows);
  out["mu"] = to_json(table.mu);
  out["mu_residuals"] = table.mu_residuals;
  Json monic = Json::array();
  for (const auto& row : table.monic) monic.push_back(to_json(row));
  out["monic_coeffs"] = std::move(monic);
  return out;
}

void write_json(std::ostream& out, const Json& j) {
  write_value(out, j, 0);
  out << "\n";
}

std::string dump_json(const Json& j) {
  std::ostringstream out;
  write_json(out, j);
  return out.str();
}

}  // namespace csop::cli

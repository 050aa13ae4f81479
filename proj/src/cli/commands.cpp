#include "csop/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "csop/cli/json_io.hpp"
#include "csop/error.hpp"
#include "csop/generators.hpp"
#include "csop/membership.hpp"
#include "csop/polynomials.hpp"
#include "csop/tridiagonalize.hpp"

namespace csop::cli {

namespace {

struct CommonOptions {
  std::string matrix_path;
  std::string x0_path;
  std::string conjugation_path;
  std::string symmetry = "plus";
  double tol_zero = kDefaultTolZero;
  double tol_rank = kDefaultTolRank;
  CLI::Option* tol_zero_flag = nullptr;
};

struct Problem {
  ComplexMatrix matrix;
  ComplexVector x0;
  std::optional<Conjugation> conjugation;
  SymmetryClass symmetry = SymmetryClass::plus;
  MembershipOptions options;
};

Json header(const char* command) {
  Json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["command"] = command;
  return j;
}

Json tolerance_json(const MembershipOptions& o) {
  Json t;
  t["tol_zero"] = o.tol_zero;
  t["tol_rank"] = o.tol_rank;
  t["tol_symmetry"] = o.tol_symmetry;
  t["tol_fixed"] = o.tol_fixed;
  t["tol_conjugation"] = o.tol_conjugation;
  return t;
}

// CSOP_TOL_ZERO supplies the default; an explicit --tol-zero wins.
double resolve_tol_zero(const CommonOptions& common) {
  if (common.tol_zero_flag && common.tol_zero_flag->count() > 0) return common.tol_zero;
  if (const char* env = std::getenv("CSOP_TOL_ZERO")) {
    char* end = nullptr;
    const double value = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(value > 0) || !std::isfinite(value)) {
      throw Error("bad_tolerance", "CSOP_TOL_ZERO must be a positive number, got '" +
                                       std::string(env) + "'");
    }
    return value;
  }
  return common.tol_zero;
}

Problem load_problem(const CommonOptions& common) {
  Problem p;
  p.matrix = parse_matrix(load_json_file(common.matrix_path), "matrix");
  require_square(p.matrix);
  p.x0 = parse_vector(load_json_file(common.x0_path), "x0");
  require_same_dim(p.matrix.rows(), p.x0.size(), "x0");
  if (!common.conjugation_path.empty()) {
    p.conjugation = parse_conjugation(load_json_file(common.conjugation_path));
    require_same_dim(p.matrix.rows(), p.conjugation->dim(), "conjugation");
  }
  p.symmetry = parse_symmetry_class(common.symmetry);
  p.options.tol_zero = resolve_tol_zero(common);
  p.options.tol_rank = common.tol_rank;
  if (!(p.options.tol_zero > 0) || !(p.options.tol_rank > 0)) {
    throw Error("bad_tolerance", "tolerances must be positive");
  }
  return p;
}

void add_common(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("--matrix", common.matrix_path, "MatrixFile with the operator A")->required();
  cmd->add_option("--x0", common.x0_path, "candidate cyclic vector")->required();
  cmd->add_option("--conjugation", common.conjugation_path,
                  "conjugation file {\"coeff\": MatrixFile}; omitted: build L from (A, x0)");
  cmd->add_option("--class", common.symmetry, "plus | minus")
      ->required()
      ->check(CLI::IsMember({"plus", "minus"}));
  common.tol_zero_flag =
      cmd->add_option("--tol-zero", common.tol_zero, "relative Gram degeneracy threshold");
  cmd->add_option("--tol-rank", common.tol_rank, "relative Krylov rank threshold");
}

void emit(std::ostream& out, const std::string& path, const Json& j) {
  if (path.empty()) {
    write_json(out, j);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("io_error", "cannot write '" + path + "'");
  write_json(file, j);
}

void merge(Json& into, const Json& from) {
  for (const auto& [key, value] : from.items()) into[key] = value;
}

Json error_json(const std::string& code, const std::string& message) {
  Json j;
  j["error"] = code;
  j["message"] = message;
  return j;
}

int cmd_check(const CommonOptions& common, std::ostream& out) {
  const Problem p = load_problem(common);
  const MembershipReport report =
      check_membership(p.matrix, p.x0, p.conjugation, p.symmetry, p.options);
  Json j = header("check");
  j["tolerances"] = tolerance_json(p.options);
  j["dim"] = p.matrix.rows();
  merge(j, membership_to_json(report));
  write_json(out, j);
  return report.is_member ? kExitOk : kExitNotMember;
}

// Input is itself in the class: report how the recovered matrix compares with
// it up to a diagonal +-1 similarity fixed by D_00 = 1.
Json input_equivalence(const ComplexMatrix& input, const ComplexMatrix& recovered) {
  const Index n = input.rows();
  std::vector<double> signs(n, 1.0);
  for (Index k = 0; k + 1 < n; ++k) {
    const double overlap = std::real(std::conj(input(k, k + 1)) * recovered(k, k + 1));
    signs[k + 1] = overlap < 0 ? -signs[k] : signs[k];
  }
  ComplexMatrix d_m_d = recovered;
  for (Index k = 0; k < n; ++k)
    for (Index l = 0; l < n; ++l) d_m_d(k, l) *= signs[k] * signs[l];
  Json j;
  j["signs"] = signs;
  j["residual"] = (d_m_d - input).norm();
  j["relative_residual"] = (d_m_d - input).norm() / std::max(input.norm(), 1e-300);
  return j;
}

int cmd_tridiag(const CommonOptions& common, bool force, const std::string& out_path,
                std::ostream& out) {
  const Problem p = load_problem(common);
  const MembershipReport membership =
      check_membership(p.matrix, p.x0, p.conjugation, p.symmetry, p.options);

  Json j = header("tridiag");
  j["tolerances"] = tolerance_json(p.options);
  j["tolerances"]["tol_phase"] = 1e-8;
  j["tolerances"]["tol_sub"] = kDefaultTolSub;
  j["tolerances"]["tol_off"] = kDefaultTolOff;
  j["membership"] = membership_to_json(membership);
  j["forced"] = force && !membership.is_member;

  if (!membership.is_member && !force) {
    j["error"] = "not_member";
    write_json(out, j);
    return kExitNotMember;
  }
  if (!membership.conjugation) {
    j["error"] = "krylov_singular";
    j["stage"] = "conjugation";
    j["message"] = "no conjugation supplied and L cannot be built from a non-cyclic x0";
    write_json(out, j);
    return kExitBreakdown;
  }

  TridiagonalOptions options;
  options.tol_rank = p.options.tol_rank;
  try {
    const TridiagonalForm form =
        tridiagonalize(p.matrix, p.x0, *membership.conjugation, p.symmetry, options);
    merge(j, tridiagonal_to_json(form));
    if (verify_m3(p.matrix, p.symmetry).passes()) {
      j["input_equivalence"] = input_equivalence(p.matrix, form.matrix);
    }
    emit(out, out_path, j);
    return kExitOk;
  } catch (const PipelineError& e) {
    j["error"] = e.code();
    j["stage"] = e.stage();
    j["message"] = e.what();
  } catch (const VerificationFailed& e) {
    j["error"] = e.code();
    j["stage"] = "verify_m3";
    j["message"] = e.what();
    merge(j, tridiagonal_to_json(e.form()));
  }
  write_json(out, j);
  return kExitBreakdown;
}

int cmd_poly(const std::string& path, int n_max, bool check_orthogonality,
             const std::string& out_path, std::ostream& out) {
  const TridiagonalForm form = parse_tridiagonal(load_json_file(path));
  if (!form.verification.subdiagonal_nonzero) {
    throw Error("not_m3", "input tridiagonal form has a vanishing off-diagonal entry");
  }
  if (check_orthogonality && n_max > (static_cast<int>(form.dim()) - 1) / 2) {
    throw Error("truncation_unsafe",
                "--n-max " + std::to_string(n_max) + " exceeds the truncation-exact order " +
                    std::to_string((form.dim() - 1) / 2) + " for dim " +
                    std::to_string(form.dim()));
  }
  PolynomialTable table = recurrence_polynomials(form, n_max);
  monic_transform(table, form);

  Json j = header("poly");
  j["tolerances"] = Json{{"tol_sub", kDefaultTolSub}};
  j["experimental"] = form.symmetry == SymmetryClass::minus;
  j["dim"] = form.dim();
  merge(j, polynomial_table_to_json(table));
  j["recurrence_residual"] = recurrence_residual(table, form);
  j["monic_recurrence_residual"] = monic_recurrence_residual(table, form);
  if (check_orthogonality) {
    const OrthogonalityReport ortho = moment_orthogonality(form, n_max);
    Json o;
    o["asserted"] = form.symmetry == SymmetryClass::plus;
    o["moments"] = to_json(ortho.moments);
    Json rows = Json::array();
    for (Index m = 0; m < ortho.residuals.rows(); ++m) {
      std::vector<double> row(ortho.residuals.cols());
      for (Index n = 0; n < ortho.residuals.cols(); ++n) row[n] = ortho.residuals(m, n);
      rows.push_back(row);
    }
    o["residuals"] = std::move(rows);
    o["max_residual"] = ortho.max_residual;
    j["orthogonality"] = std::move(o);
  }
  emit(out, out_path, j);
  return kExitOk;
}

int cmd_gen(const std::string& kind_name, int dim, std::uint64_t seed, double min_offdiag,
            const std::string& out_dir, std::ostream& out) {
  const InstanceKind kind = parse_instance_kind(kind_name);
  const Instance instance = generate_instance(kind, dim, seed, min_offdiag);

  Json matrix = matrix_to_json(instance.matrix);
  Json x0 = vector_to_json(instance.x0);
  Json conjugation = conjugation_to_json(instance.conjugation);
  if (out_dir.empty()) {
    Json bundle = header("gen");
    bundle["kind"] = std::string(to_string(kind));
    bundle["dim"] = dim;
    bundle["seed"] = seed;
    bundle["min_offdiag"] = min_offdiag;
    bundle["matrix"] = std::move(matrix);
    bundle["x0"] = std::move(x0);
    bundle["conjugation"] = std::move(conjugation);
    write_json(out, bundle);
    return kExitOk;
  }
  std::filesystem::create_directories(out_dir);
  const std::filesystem::path dir(out_dir);
  emit(out, (dir / "matrix.json").string(), matrix);
  emit(out, (dir / "x0.json").string(), x0);
  emit(out, (dir / "conjugation.json").string(), conjugation);
  return kExitOk;
}

int cmd_counterexample(int dim, std::uint64_t seed, std::ostream& out) {
  if (dim < 3) {
    throw Error("dim_too_small", "the (0, 2) entry needs dim >= 3, got " + std::to_string(dim));
  }
  const Instance instance = generate_instance(InstanceKind::diag_unitary, dim, seed);
  const ComplexMatrix& u = instance.matrix;
  const Conjugation& j_coord = instance.conjugation;

  Json report = header("counterexample");
  report["dim"] = dim;
  report["seed"] = seed;
  std::vector<double> phases;
  for (Index k = 0; k < dim; ++k) phases.push_back(std::arg(u(k, k)));
  report["phases"] = phases;
  report["x0"] = vector_to_json(instance.x0);

  const double unitarity = (u * u.adjoint() - ComplexMatrix::Identity(dim, dim)).norm();
  const double defect = symmetry_defect(u, j_coord, SymmetryClass::plus);
  const double fixed = (j_coord(instance.x0) - instance.x0).norm();
  const Index rank = cyclicity_rank(u, instance.x0);
  Json condition_i;
  condition_i["cyclic"] = rank == dim;
  condition_i["unitarity_residual"] = unitarity;
  condition_i["symmetry_defect"] = defect;
  condition_i["x0_fixed_residual"] = fixed;
  condition_i["holds"] = rank == dim && defect <= 1e-10 && fixed <= 1e-10;
  report["condition_i"] = std::move(condition_i);

  const MembershipReport membership =
      check_membership(u, instance.x0, j_coord, SymmetryClass::plus);
  report["membership"] = membership_to_json(membership);
  report["is_member"] = membership.is_member;

  // Any matrix of the plus class has (M M^H)_{0,2} = m_{0,1} conj(m_{2,1}) != 0,
  // so none of them is unitary.
  constexpr int kDraws = 50;
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  double max_identity_residual = 0;
  double min_entry_02 = INFINITY;
  int unitary_count = 0;
  for (int draw = 0; draw < kDraws; ++draw) {
    const ComplexMatrix m = random_m3(dim, SymmetryClass::plus, rng);
    const ComplexMatrix mmh = m * m.adjoint();
    max_identity_residual =
        std::max(max_identity_residual, std::abs(mmh(0, 2) - m(0, 1) * std::conj(m(2, 1))));
    min_entry_02 = std::min(min_entry_02, std::abs(mmh(0, 2)));
    if ((mmh - ComplexMatrix::Identity(dim, dim)).norm() <= 1e-12) ++unitary_count;
  }
  Json obstruction;
  obstruction["draws"] = kDraws;
  obstruction["max_identity_residual"] = max_identity_residual;
  obstruction["min_abs_mmh_02"] = min_entry_02;
  obstruction["unitary_count"] = unitary_count;
  obstruction["identity_holds"] = max_identity_residual <= 1e-12;
  report["obstruction"] = std::move(obstruction);

  write_json(out, report);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tridiagonal complex (skew-)symmetric representations of operators", kToolName};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  CommonOptions check_opts;
  auto* check = app.add_subcommand("check", "test membership in the plus/minus class");
  add_common(check, check_opts);

  CommonOptions tri_opts;
  bool force = false;
  std::string tri_out;
  auto* tri = app.add_subcommand("tridiag", "build the tridiagonal representation");
  add_common(tri, tri_opts);
  tri->add_flag("--force", force, "run the construction even if the membership check fails");
  tri->add_option("-o,--output", tri_out, "output file (default: stdout)");

  std::string poly_path, poly_out;
  int n_max = 0;
  bool check_orthogonality = false;
  auto* poly = app.add_subcommand("poly", "recurrence polynomials of a tridiagonal form");
  poly->add_option("--tridiag", poly_path, "tridiagonal form JSON")->required();
  poly->add_option("--n-max", n_max, "highest polynomial degree")->required()->check(CLI::NonNegativeNumber);
  poly->add_flag("--check-orthogonality", check_orthogonality, "evaluate the moment functional");
  poly->add_option("-o,--output", poly_out, "output file (default: stdout)");

  std::string kind, gen_dir;
  int gen_dim = 0;
  std::uint64_t gen_seed = 0;
  double min_offdiag = kDefaultMinOffdiag;
  auto* gen = app.add_subcommand("gen", "generate a seeded instance");
  gen->add_option("--kind", kind, "m3plus | m3minus | jacobi | diag-unitary")
      ->required()
      ->check(CLI::IsMember({"m3plus", "m3minus", "jacobi", "diag-unitary"}));
  gen->add_option("--dim", gen_dim, "dimension (>= 2)")->required()->check(CLI::Range(2, 4096));
  gen->add_option("--seed", gen_seed, "64-bit seed")->required();
  gen->add_option("--min-offdiag", min_offdiag, "lower bound on |c_n|")->check(CLI::Range(0.0, 0.99));
  gen->add_option("-o,--out-dir", gen_dir, "write matrix.json, x0.json, conjugation.json here");

  int ce_dim = 0;
  std::uint64_t ce_seed = 0;
  auto* ce = app.add_subcommand("counterexample", "diagonal unitary that is complex symmetric but not in the plus class");
  ce->add_option("--dim", ce_dim, "dimension (>= 3)")->required();
  ce->add_option("--seed", ce_seed, "64-bit seed")->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    write_json(out, error_json("usage", e.what()));
    return kExitUsage;
  }

  try {
    if (*check) return cmd_check(check_opts, out);
    if (*tri) return cmd_tridiag(tri_opts, force, tri_out, out);
    if (*poly) return cmd_poly(poly_path, n_max, check_orthogonality, poly_out, out);
    if (*gen) return cmd_gen(kind, gen_dim, gen_seed, min_offdiag, gen_dir, out);
    if (*ce) return cmd_counterexample(ce_dim, ce_seed, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    write_json(out, error_json(e.code(), e.what()));
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    write_json(out, error_json("internal", e.what()));
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace csop::cli

// Command-line surface for the exact matrix-pencil toolkit.
//
// Exit codes: 0 success, 1 usage error, 2 file/format error, 3 domain error
// (non-reduced input where reducedness is required, unsupported enumeration,
// failed verification, ...).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "pencil/io.hpp"
#include "pencil/reflect.hpp"
#include "pencil/suites.hpp"

namespace {

constexpr const char* kVersion = "pencil 0.1.0";

using namespace pencil;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream oss;
    oss << std::cin.rdbuf();
    return oss.str();
  }
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "' for reading", 0);
  std::ostringstream oss;
  oss << in.rdbuf();
  return oss.str();
}

void emit(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw FormatError("cannot open '" + path + "' for writing", 0);
  out << content;
}

Pencil load_pencil(const std::string& path) { return pencil_from_string(slurp(path)); }

Field parse_field_arg(const std::string& text) {
  auto field = Field::parse(text);
  if (!field)
    fail(errc::invalid_parameter, "unknown field '" + text + "' (use 'rational' or 'gf<p>')");
  return *field;
}

std::vector<Scalar> parse_coordinates(Field field, const std::string& text) {
  std::vector<Scalar> coords;
  std::string token;
  std::istringstream iss(text);
  while (std::getline(iss, token, ',')) {
    std::size_t first = token.find_first_not_of(" \t");
    std::size_t last = token.find_last_not_of(" \t");
    if (first == std::string::npos) fail(errc::invalid_scalar, "empty coordinate in '" + text + "'");
    coords.push_back(Scalar::parse(field, token.substr(first, last - first + 1)));
  }
  if (coords.empty()) fail(errc::invalid_scalar, "empty coordinate tuple");
  return coords;
}

std::vector<ProjectivePoint> parse_eigenvalue_list(Field field, const std::string& text) {
  std::vector<ProjectivePoint> points;
  std::string tuple;
  std::istringstream iss(text);
  while (std::getline(iss, tuple, ';'))
    points.emplace_back(parse_coordinates(field, tuple));
  if (points.empty()) fail(errc::invalid_scalar, "empty eigenvalue list");
  return points;
}

struct GlobalArgs {
  unsigned threads = 1;
  bool no_meta = false;
  std::uint64_t budget = 0;

  EnumOptions enums() const {
    EnumOptions opts;
    opts.threads = threads;
    if (budget > 0) opts.budget = budget;
    return opts;
  }
  std::string meta(const std::string& command) const {
    return no_meta ? "" : std::string("# ") + kVersion + " " + command + "\n";
  }
};

int cmd_canonical(const GlobalArgs&, std::size_t n, const std::string& field_text,
                  const std::string& out) {
  CanonicalModule c = build_canonical(n, parse_field_arg(field_text));
  emit(out, pencil_to_string(c.pencil));
  return 0;
}

int cmd_realize(const GlobalArgs& global, const std::string& quadrics_path, const std::string& out,
                const std::string& report_path) {
  QuadricsFile in = quadrics_from_string(slurp(quadrics_path));
  Realization r = realize_variety(in.vars, in.forms, in.field);
  emit(out, pencil_to_string(r.pencil));

  if (!report_path.empty()) {
    std::ostringstream report;
    report << global.meta("realize");
    report << "realize n=" << in.vars << " m=" << in.forms.size() << " field="
           << in.field.to_string() << '\n';
    report << "pencil dim=" << r.pencil.dim().to_string() << " reduced=yes\n";
    if (in.field.is_prime_field()) {
      RealizationReport v = verify_realization(r, global.enums());
      report << "eigenvalues=" << v.eigenvalues.size() << " variety_points="
             << v.variety_points.size() << " max_eigenspace_dim=" << v.max_eigenspace_dim
             << " verified=" << (v.pass ? "pass" : "fail") << '\n';
      emit(report_path, report.str());
      return v.pass ? 0 : 3;
    }
    report << "verified=skipped (point enumeration needs a prime field)\n";
    emit(report_path, report.str());
  }
  return 0;
}

int cmd_eigen(const GlobalArgs& global, const std::string& pencil_path,
              const std::string& eigenvalues, bool values_mode, const std::string& points_out) {
  Pencil p = load_pencil(pencil_path);
  EnumOptions opts = global.enums();

  PointsFile out;
  out.field = p.field();
  if (values_mode) {
    EigenvalueSource source = eigenvalues == "all"
                                  ? EigenvalueSource::all()
                                  : EigenvalueSource::list(
                                        parse_eigenvalue_list(p.field(), eigenvalues));
    out.coord_count = p.map_count();
    out.points = eigenvalue_set(p, source, opts);
  } else {
    out.coord_count = p.source_dim();
    if (eigenvalues == "all") {
      out.points = eigenvector_variety(p, opts);
    } else {
      std::vector<ProjectivePoint> lambdas = parse_eigenvalue_list(p.field(), eigenvalues);
      std::vector<ProjectivePoint> points;
      for (const auto& lambda : lambdas)
        for (auto& pt : subspace_projective_points(eigenvector_space(p, lambda), opts.budget))
          points.push_back(std::move(pt));
      sort_points(points);
      points.erase(std::unique(points.begin(), points.end()), points.end());
      out.points = std::move(points);
    }
  }
  emit(points_out, points_to_string(out));
  return 0;
}

int cmd_eigenspace(const std::string& pencil_path, const std::string& lambda_text,
                   const std::string& out) {
  Pencil p = load_pencil(pencil_path);
  ProjectivePoint lambda(parse_coordinates(p.field(), lambda_text));
  Subspace space = eigenvector_space(p, lambda);
  std::ostringstream oss;
  write_subspace(oss, space);
  emit(out, oss.str());
  return 0;
}

int cmd_squareize(const GlobalArgs& global, const std::string& pencil_path,
                  const std::string& out) {
  Pencil p = load_pencil(pencil_path);
  emit(out, pencil_to_string(squareize(p, EigenvalueSource::all(), global.enums())));
  return 0;
}

int cmd_reflect(const GlobalArgs& global, const std::string& pencil_path, std::size_t t,
                bool inverse, bool track_e0, const std::string& out,
                const std::string& report_path) {
  Pencil p = load_pencil(pencil_path);
  if (track_e0 && p.map_count() < 3)
    fail(errc::unsupported_parameter, "--e0-track needs n >= 3 matrices");
  auto [result, report] = sigma_iterate(
      p, t, inverse ? SigmaDirection::inverse : SigmaDirection::forward, track_e0,
      /*track_full=*/false, global.enums());
  if (out == "-" && report_path == "-") {
    emit(out, pencil_to_string(result) + "\n" + report.serialize());
  } else {
    emit(out, pencil_to_string(result));
    emit(report_path, report.serialize());
  }
  return 0;
}

int cmd_preprojective(const GlobalArgs& global, std::size_t n, std::size_t count,
                      const std::string& field_text, const std::string& out) {
  Field field = parse_field_arg(field_text);
  std::vector<DimVec> dims = preprojective_dimvecs(n, count);
  std::vector<Pencil> series = build_preprojectives(n, count, field);
  std::ostringstream oss;
  oss << global.meta("preprojective");
  oss << "preprojective n=" << n << " count=" << count << " field=" << field.to_string() << '\n';
  for (std::size_t i = 0; i < count; ++i) {
    const auto [a, b] = dims[i];
    bool identity_ok = series[i].dim() == dims[i] && a < b && a * a + b * b == n * a * b + 1;
    oss << "i=" << i << " dim=" << dims[i].to_string() << " identity="
        << (identity_ok ? "ok" : "violated");
    if (field.is_prime_field()) {
      bool empty = eigenvector_variety(series[i], global.enums()).empty();
      oss << " empty=" << (empty ? "yes" : "no");
    } else {
      oss << " empty=skipped";
    }
    oss << '\n';
  }
  emit(out, oss.str());
  return 0;
}

int cmd_verify(const GlobalArgs& global, const std::string& pencil_path, const std::string& out) {
  Pencil p = load_pencil(pencil_path);
  EnumOptions opts = global.enums();
  auto fast = eigenvector_variety(p, opts);
  auto slow = eigenvector_variety_oracle(p, opts);
  bool match = fast == slow;
  std::ostringstream oss;
  oss << global.meta("verify");
  oss << "fast=" << fast.size() << " oracle=" << slow.size() << " match="
      << (match ? "yes" : "no") << '\n';
  emit(out, oss.str());
  return match ? 0 : 3;
}

int cmd_check(const GlobalArgs& global, const std::string& suite, std::uint64_t seed,
              std::size_t count) {
  SuiteOptions opts;
  opts.seed = seed;
  opts.count = count;
  opts.enums = global.enums();
  SuiteResult result = run_suite(suite, opts, std::cout);
  return result.passed() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for matrix pencils: eigenvector varieties, quadric realizations, "
               "and reflection functors"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  GlobalArgs global;
  app.add_option("--threads", global.threads, "worker count for enumeration loops")
      ->capture_default_str();
  app.add_flag("--no-meta", global.no_meta, "omit tool metadata lines from reports");
  app.add_option("--budget", global.budget,
                 "enumeration budget (default 10^7, or PENCIL_ENUM_BUDGET)");

  std::size_t arg_n = 1, arg_count = 5, arg_t = 0;
  std::string arg_field = "rational", arg_out = "-", arg_report, arg_pencil, arg_quadrics;
  std::string arg_eigenvalues = "all", arg_lambda, arg_suite;
  std::uint64_t arg_seed = 0;
  std::size_t arg_suite_count = 0;
  bool arg_values = false, arg_inverse = false, arg_e0 = false;

  CLI::App* canonical = app.add_subcommand("canonical", "write the fully bristled module");
  canonical->add_option("--n", arg_n, "number of matrices")->required();
  canonical->add_option("--field", arg_field, "rational or gf<p>")->required();
  canonical->add_option("--out", arg_out, "output pencil file ('-' = stdout)");

  CLI::App* realize = app.add_subcommand("realize", "realize a quadric zero locus as an "
                                                    "eigenvector variety");
  realize->add_option("--quadrics", arg_quadrics, "quadrics input file")->required();
  realize->add_option("--out", arg_out, "output pencil file");
  realize->add_option("--report", arg_report, "verification report file");

  CLI::App* eigen = app.add_subcommand("eigen", "list eigenvectors (or eigenvalues) of a pencil");
  eigen->add_option("--pencil", arg_pencil, "pencil input file")->required();
  eigen->add_option("--eigenvalues", arg_eigenvalues,
                    "'all' or semicolon-separated tuples like '1,0,0;1,1,0'");
  eigen->add_flag("--values", arg_values, "list eigenvalues instead of eigenvectors");
  eigen->add_option("--points-out", arg_out, "output point-set file");

  CLI::App* eigenspace = app.add_subcommand("eigenspace", "basis of one eigenvector space");
  eigenspace->add_option("--pencil", arg_pencil, "pencil input file")->required();
  eigenspace->add_option("--lambda", arg_lambda, "eigenvalue coordinates, e.g. '1,0,2'")
      ->required();
  eigenspace->add_option("--out", arg_out, "output file");

  CLI::App* squareize_cmd = app.add_subcommand("squareize", "square pencil with the same "
                                                            "eigenvalue set");
  squareize_cmd->add_option("--pencil", arg_pencil, "pencil input file")->required();
  squareize_cmd->add_option("--out", arg_out, "output pencil file");

  CLI::App* reflect = app.add_subcommand("reflect", "iterate the reflection functor");
  reflect->add_option("--pencil", arg_pencil, "pencil input file")->required();
  reflect->add_option("--t", arg_t, "iteration count")->required();
  reflect->add_flag("--inverse", arg_inverse, "apply the left adjoint instead");
  reflect->add_flag("--e0-track", arg_e0, "test E0 sufficiency per iterate");
  reflect->add_option("--out", arg_out, "output pencil file");
  reflect->add_option("--report", arg_report, "orbit report file")->default_val("-");

  CLI::App* preprojective = app.add_subcommand("preprojective", "dimension table of the "
                                                                "preprojective series");
  preprojective->add_option("--n", arg_n, "number of matrices")->required();
  preprojective->add_option("--count", arg_count, "series length");
  preprojective->add_option("--field", arg_field, "rational or gf<p>")->required();
  preprojective->add_option("--out", arg_out, "output file");

  CLI::App* verify = app.add_subcommand("verify", "compare the eigenvalue-indexed variety "
                                                  "against the brute-force scan");
  verify->add_option("--pencil", arg_pencil, "pencil input file")->required();
  verify->add_option("--out", arg_out, "report file");

  CLI::App* check = app.add_subcommand("check", "run a named invariant suite");
  check->add_option("--suite", arg_suite, "oracle-equivalence | canonical | realization | "
                                          "reflection")
      ->required();
  check->add_option("--seed", arg_seed, "random seed")->capture_default_str();
  check->add_option("--count", arg_suite_count, "case count (0 = suite default)");

  // Global flags may appear after the subcommand name.
  for (CLI::App* sub : {canonical, realize, eigen, eigenspace, squareize_cmd, reflect,
                        preprojective, verify, check})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (canonical->parsed()) return cmd_canonical(global, arg_n, arg_field, arg_out);
    if (realize->parsed()) return cmd_realize(global, arg_quadrics, arg_out, arg_report);
    if (eigen->parsed())
      return cmd_eigen(global, arg_pencil, arg_eigenvalues, arg_values, arg_out);
    if (eigenspace->parsed()) return cmd_eigenspace(arg_pencil, arg_lambda, arg_out);
    if (squareize_cmd->parsed()) return cmd_squareize(global, arg_pencil, arg_out);
    if (reflect->parsed())
      return cmd_reflect(global, arg_pencil, arg_t, arg_inverse, arg_e0, arg_out, arg_report);
    if (preprojective->parsed())
      return cmd_preprojective(global, arg_n, arg_count, arg_field, arg_out);
    if (verify->parsed()) return cmd_verify(global, arg_pencil, arg_out);
    if (check->parsed()) return cmd_check(global, arg_suite, arg_seed, arg_suite_count);
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}

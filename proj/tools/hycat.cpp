// hycat: command-line front end.
//
//   hycat solve   --type elliptic --u0 1 --theta0 0.5236 --smax 4 --out curve.csv
//   hycat revolve --type elliptic --out surface.obj [--curve curve.csv]
//   hycat check   [--only mean-curvature] [--seed 7]
//   hycat relax   --type elliptic --u0 1 --v0 -0.5 --u1 1 --v1 0.5 --slack 0.1 --out chain.csv
//
// Exit codes: 0 success, 1 invalid configuration, 2 domain error or
// infeasible problem (also: a failed check), 3 I/O error.

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hycat/catenary.hpp"
#include "hycat/checks.hpp"
#include "hycat/error.hpp"
#include "hycat/io.hpp"
#include "hycat/kernels.hpp"
#include "hycat/relaxer.hpp"
#include "hycat/revolution.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

enum Exit { kOk = 0, kConfig = 1, kDomain = 2, kIo = 3 };

struct Globals {
  bool no_banner{false};
};

struct SolveArgs {
  std::string type{"elliptic"};
  double r{1.0};
  double lambda{0.0};
  double u0{1.0};
  double v0{0.0};
  double theta0{std::numbers::pi / 6};
  double smax{4.0};
  double step{1e-3};
};

struct RevolveArgs {
  std::string curve_path;
  std::size_t ntheta{40};
  std::size_t nrows{40};
  std::optional<double> theta_min;
  std::optional<double> theta_max;
  std::string projection{"ambient"};
  std::string out;
};

struct RelaxArgs {
  std::string type{"elliptic"};
  double r{1.0};
  double u0{1.0}, v0{-0.5}, u1{1.0}, v1{0.5};
  double slack{0.1};
  std::size_t n{64};
  std::size_t max_iter{200000};
  double grad_tol{1e-8};
  double step_size{1e-2};
  std::string out;
  std::string report;
};

void write_banner(std::ostream& os, const Globals& g, const std::string& command) {
  if (g.no_banner) return;
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  os << "# hycat " << kVersion << ' ' << command << ' ' << stamp << '\n';
}

std::string short_double(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 4);
  return {buf, res.ptr};
}

void add_solve_options(CLI::App* cmd, SolveArgs& a) {
  cmd->add_option("--type", a.type, "Catenary type")
      ->check(CLI::IsMember({"elliptic", "hyperbolic", "parabolic"}))
      ->capture_default_str();
  cmd->add_option("--r", a.r, "Radius of H^2(r)")->check(CLI::PositiveNumber)->capture_default_str();
  cmd->add_option("--lambda", a.lambda, "Additive weight offset")->capture_default_str();
  cmd->add_option("--u0", a.u0, "Initial u")->capture_default_str();
  cmd->add_option("--v0", a.v0, "Initial v")->capture_default_str();
  cmd->add_option("--theta0", a.theta0, "Initial heading from d_u (radians)")->capture_default_str();
  cmd->add_option("--smax", a.smax, "Arc length to integrate")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--step", a.step, "RK4 step")->check(CLI::PositiveNumber)->capture_default_str();
}

hycat::Curve run_solve(const SolveArgs& a) {
  const auto type = hycat::parse_catenary_type(a.type);
  hycat::Curve c = hycat::integrate(type, {a.u0, a.v0, a.theta0}, a.r, a.lambda, a.smax, a.step);
  if (c.status != hycat::IntegrationStatus::Completed) {
    std::cerr << "note: integration stopped early at s = "
              << hycat::format_double(c.samples.back().s) << " ("
              << hycat::to_string(c.status) << ")\n";
  }
  return c;
}

int cmd_solve(const Globals& g, const SolveArgs& a, const std::string& out) {
  const hycat::Curve c = run_solve(a);
  std::vector<hycat::SampleDiagnostics> diag(c.samples.size());
  hycat::curve_diagnostics(hycat::Backend::OpenMP, c, diag);
  std::ofstream os = hycat::open_output(out);
  write_banner(os, g, "solve");
  hycat::write_curve_csv(os, c, diag);
  os.close();
  if (!os) throw hycat::IoError("failed to write '" + out + "'");
  std::cout << "wrote " << c.samples.size() << " samples to " << out << '\n';
  return kOk;
}

int cmd_revolve(const Globals& g, const SolveArgs& s, const RevolveArgs& a) {
  const auto type = hycat::parse_catenary_type(s.type);
  const auto mode = hycat::parse_projection(a.projection);
  hycat::Curve c;
  if (!a.curve_path.empty()) {
    std::ifstream is(a.curve_path);
    if (!is) throw hycat::IoError("cannot open '" + a.curve_path + "'");
    c = hycat::read_curve_csv(is, s.r);
    c.type = type;
    c.lambda = s.lambda;
  } else {
    c = run_solve(s);
  }
  const bool elliptic = type == hycat::CatenaryType::Elliptic;
  const double th0 = a.theta_min.value_or(elliptic ? 0.0 : -1.0);
  const double th1 = a.theta_max.value_or(elliptic ? 2.0 * std::numbers::pi : 1.0);
  const hycat::Mesh mesh = hycat::build_mesh(type, c, th0, th1, a.ntheta, a.nrows);

  std::ofstream obj = hycat::open_output(a.out);
  write_banner(obj, g, "revolve");
  hycat::write_obj(obj, mesh, s.r, mode);
  std::ofstream hcsv = hycat::open_output(a.out + ".H.csv");
  write_banner(hcsv, g, "revolve");
  hycat::write_mesh_h_csv(hcsv, mesh);
  std::ofstream vcsv = hycat::open_output(a.out + ".vertices.csv");
  write_banner(vcsv, g, "revolve");
  hycat::write_mesh_vertices_csv(vcsv, mesh);
  obj.close();
  hcsv.close();
  vcsv.close();
  if (!obj || !hcsv || !vcsv) throw hycat::IoError("failed to write mesh files");

  double max_h = 0.0, sum_h = 0.0;
  for (const double h : mesh.H) {
    max_h = std::max(max_h, std::abs(h));
    sum_h += std::abs(h);
  }
  std::cout << "vertices " << mesh.vertices.size() << " (" << mesh.rows << " x " << mesh.cols
            << ")\n"
            << "max|H| " << hycat::format_double(max_h) << '\n'
            << "mean|H| " << hycat::format_double(sum_h / static_cast<double>(mesh.H.size()))
            << '\n';
  return kOk;
}

int cmd_check(const hycat::CheckConfig& cfg) {
  const auto results = hycat::run_checks(cfg);
  std::cout << "seed " << cfg.seed << ", random curves per family " << cfg.n_curves << ", r "
            << hycat::format_double(cfg.r) << '\n';
  std::cout << "family           check                                      samples  "
               "max residual  tolerance  result\n";
  bool all = true;
  for (const auto& res : results) {
    std::ostringstream line;
    line << std::left;
    line.width(17);
    line << res.family;
    line.width(43);
    line << res.name;
    line.width(9);
    line << res.samples;
    line.width(14);
    line << short_double(res.max_residual);
    line.width(11);
    line << short_double(res.tolerance);
    line << (res.passed ? "pass" : "FAIL");
    std::cout << line.str() << '\n';
    if (!res.note.empty()) std::cout << "    " << res.note << '\n';
    all = all && res.passed;
  }
  std::cout << (all ? "all checks passed" : "some checks FAILED") << '\n';
  return all ? kOk : kDomain;
}

int cmd_relax(const Globals& g, const RelaxArgs& a) {
  const auto type = hycat::parse_catenary_type(a.type);
  const hycat::ChainNode p{a.u0, a.v0}, q{a.u1, a.v1};
  const double d = hycat::hyperbolic_distance(hycat::psi(p.u, p.v, a.r), hycat::psi(q.u, q.v, a.r),
                                              a.r);
  const double target = (1.0 + a.slack) * d;
  const hycat::DiscreteChain chain0 = hycat::make_initial_chain(type, a.r, p, q, target, a.n);
  hycat::RelaxOptions opts;
  opts.max_iter = a.max_iter;
  opts.grad_tol = a.grad_tol;
  opts.step_size = a.step_size;
  const auto [chain, report] = hycat::relax(chain0, opts);
  if (report.status == hycat::RelaxStatus::Infeasible) {
    std::cerr << "error: infeasible: target length " << hycat::format_double(target)
              << " cannot be realized between the endpoints\n";
    return kDomain;
  }
  std::ofstream csv = hycat::open_output(a.out);
  write_banner(csv, g, "relax");
  hycat::write_chain_csv(csv, chain, report.lambda);
  const std::string report_path = a.report.empty() ? a.out + ".json" : a.report;
  std::ofstream js = hycat::open_output(report_path);
  js << hycat::relax_report_json(report) << '\n';
  csv.close();
  js.close();
  if (!csv || !js) throw hycat::IoError("failed to write relax output");
  std::cout << "status " << hycat::to_string(report.status) << ", iterations " << report.iterations
            << ", energy " << hycat::format_double(report.final_energy) << ", lambda "
            << hycat::format_double(report.lambda) << '\n';
  return report.status == hycat::RelaxStatus::Converged ? kOk : kDomain;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hycat: weighted-length catenaries of H^2(r), their rotation surfaces in H^3(r), and chain relaxation"};
  app.set_version_flag("--version", kVersion);
  app.config_formatter(std::make_shared<CLI::ConfigINI>());
  app.set_config("--config", "", "INI file with [solve], [revolve], [check], [relax] sections");
  app.require_subcommand(1);
  app.fallthrough();

  Globals globals;
  app.add_flag("--no-banner", globals.no_banner, "Omit the '#' header line from data files");

  SolveArgs solve_args;
  std::string solve_out;
  auto* solve = app.add_subcommand("solve", "Integrate a catenary and write the curve CSV");
  add_solve_options(solve, solve_args);
  solve->add_option("--out", solve_out, "Output CSV")->required();

  SolveArgs rev_solve;
  RevolveArgs rev;
  auto* revolve = app.add_subcommand("revolve", "Rotate a catenary into a surface mesh");
  add_solve_options(revolve, rev_solve);
  revolve->add_option("--curve", rev.curve_path, "Curve CSV from `solve` instead of integrating");
  revolve->add_option("--ntheta", rev.ntheta, "Columns (theta samples)")
      ->check(CLI::Range(std::size_t{2}, std::size_t{100000}))
      ->capture_default_str();
  revolve->add_option("--nrows", rev.nrows, "Rows picked from the curve samples (0 = all)")
      ->capture_default_str();
  revolve->add_option("--theta-min", rev.theta_min, "Default 0 (elliptic) or -1");
  revolve->add_option("--theta-max", rev.theta_max, "Default 2 pi (elliptic) or 1");
  revolve->add_option("--projection", rev.projection, "Vertex projection for the OBJ")
      ->check(CLI::IsMember({"ambient", "poincare"}))
      ->capture_default_str();
  revolve->add_option("--out", rev.out, "Output OBJ; sidecars <out>.H.csv, <out>.vertices.csv")
      ->required();

  hycat::CheckConfig check_cfg;
  auto* check = app.add_subcommand("check", "Run the invariant suites and print a report");
  check->add_option("--seed", check_cfg.seed, "Random seed")->capture_default_str();
  check->add_option("--curves", check_cfg.n_curves, "Random curves per family")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  check->add_option("--r", check_cfg.r, "Radius")->check(CLI::PositiveNumber)->capture_default_str();
  check->add_option("--only", check_cfg.only, "Restrict to one family")
      ->check(CLI::IsMember(hycat::check_families()));

  RelaxArgs relax_args;
  auto* relax = app.add_subcommand("relax", "Relax a fixed-length chain between two points");
  relax->add_option("--type", relax_args.type, "Catenary type")
      ->check(CLI::IsMember({"elliptic", "hyperbolic", "parabolic"}))
      ->capture_default_str();
  relax->add_option("--r", relax_args.r, "Radius")->check(CLI::PositiveNumber)->capture_default_str();
  relax->add_option("--u0", relax_args.u0, "First endpoint u")->capture_default_str();
  relax->add_option("--v0", relax_args.v0, "First endpoint v")->capture_default_str();
  relax->add_option("--u1", relax_args.u1, "Second endpoint u")->capture_default_str();
  relax->add_option("--v1", relax_args.v1, "Second endpoint v")->capture_default_str();
  relax->add_option("--slack", relax_args.slack, "Length = (1 + slack) * endpoint distance")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  relax->add_option("--N", relax_args.n, "Segments")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1000000}))
      ->capture_default_str();
  relax->add_option("--max-iter", relax_args.max_iter, "Iteration cap")->capture_default_str();
  relax->add_option("--grad-tol", relax_args.grad_tol, "Projected gradient tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  relax->add_option("--step-size", relax_args.step_size, "Initial step in units of r")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  relax->add_option("--out", relax_args.out, "Chain CSV")->required();
  relax->add_option("--report", relax_args.report, "JSON report (default <out>.json)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfig;
  }

  try {
    if (*solve) return cmd_solve(globals, solve_args, solve_out);
    if (*revolve) return cmd_revolve(globals, rev_solve, rev);
    if (*check) return cmd_check(check_cfg);
    if (*relax) return cmd_relax(globals, relax_args);
  } catch (const hycat::UsageError& e) {
    std::cerr << "error: invalid configuration: " << e.what() << '\n';
    return kConfig;
  } catch (const hycat::DomainError& e) {
    std::cerr << "error: domain: " << e.what() << '\n';
    return kDomain;
  } catch (const hycat::IoError& e) {
    std::cerr << "error: i/o: " << e.what() << '\n';
    return kIo;
  }
  return kConfig;
}

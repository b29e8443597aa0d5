// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "hycat/catenary.hpp"
#include "hycat/charts.hpp"
#include "hycat/relaxer.hpp"
#include "hycat/revolution.hpp"
#include "hycat/sample_curves.hpp"
#include "oracles.hpp"

using namespace hycat;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::array<CatenaryType, 3> kTypes{CatenaryType::Elliptic, CatenaryType::Hyperbolic,
                                             CatenaryType::Parabolic};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Line {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

// 1: rotated catenaries are minimal.
Line minimal_surfaces() {
  bool pass = true;
  std::ostringstream d;
  for (const CatenaryType type : kTypes) {
    const auto t0 = std::chrono::steady_clock::now();
    const Curve c = integrate(type, {1.0, 0.0, kPi / 6}, 1.0, 0.0, 4.0, 1e-3);
    const GeneratingCurve g = interpolate_generating_curve(c);
    const double th_lo = type == CatenaryType::Elliptic ? 0.0 : -1.0;
    const double th_hi = type == CatenaryType::Elliptic ? 2 * kPi : 1.0;
    // build_mesh evaluates the closed form on every row it picks.
    const Mesh mesh = build_mesh(type, c, th_lo, th_hi, 40, 40);
    double closed = 0.0;
    for (const double h : mesh.H) closed = std::max(closed, std::abs(h));
    double numeric = 0.0;
    for (int i = 0; i < 40; ++i) {
      const double t = 0.05 + 0.1 * i;  // interior rows, 40 of them
      closed = std::max(closed, std::abs(mean_curvature_closed(
                                    type, generating_jet(c.jet(50 + 100 * static_cast<std::size_t>(i))))));
      for (int j = 0; j < 40; ++j) {
        const double th = th_lo + (th_hi - th_lo) * j / 40.0;
        numeric = std::max(numeric, std::abs(mean_curvature_numeric(type, g, 1.0, t, th, 1e-4)));
      }
    }
    const double secs = seconds_since(t0);
    const bool ok = c.status == IntegrationStatus::Completed && mesh.H.size() == 1600 &&
                    closed < 1e-5 && numeric < 1e-4 && secs < 5.0;
    pass = pass && ok;
    d << ' ' << to_string(type) << " closed " << fmt("%.2e", closed) << " numeric "
      << fmt("%.2e", numeric) << " in " << fmt("%.2f", secs) << "s;";
  }
  return {pass, d.str()};
}

// 2: closed-form H against finite differences on random generating curves.
Line closed_vs_numeric() {
  bool pass = true;
  std::ostringstream d;
  for (const CatenaryType type : kTypes) {
    std::mt19937_64 rng(1234 + static_cast<int>(type));
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
      const TrigCurve c = random_trig_curve(rng, ChartId::SemiGeodesic, 1.0, 0.6, 1.2);
      const GeneratingCurve g = [&c](double t) { return c.point(t); };
      for (const double t : {0.2, 0.5, 0.8}) {
        const double theta = 0.1 + 0.7 * t;
        worst = std::max(worst, std::abs(mean_curvature_closed(type, generating_jet(c.jet(t))) -
                                         mean_curvature_numeric(type, g, 1.0, t, theta, 1e-4)));
      }
    }
    pass = pass && worst < 1e-5;
    d << ' ' << to_string(type) << ' ' << fmt("%.2e", worst) << ';';
  }
  // Parabolic constant: which multiple of N/(r D |g'|) does a parabolic
  // catenary's curvature equal.
  const Curve cat = integrate(CatenaryType::Parabolic, {1.0, 0.0, kPi / 6}, 1.0, 0.0, 4.0, 1e-3);
  const std::array<double, 4> cands{1.0, -1.0, 0.5, -0.5};
  std::array<double, 4> err{};
  for (std::size_t i = 0; i < cat.samples.size(); i += 25) {
    const GeneratingJet j = generating_jet(cat.jet(i));
    const double kappa = kappa_extrinsic(j.p, j.dp, j.ddp, 1.0);
    const double base = minimal_kappa_target(CatenaryType::Parabolic, j);
    for (std::size_t c = 0; c < cands.size(); ++c) {
      err[c] = std::max(err[c], std::abs(kappa - cands[c] * base));
    }
  }
  const auto best = static_cast<std::size_t>(std::min_element(err.begin(), err.end()) - err.begin());
  pass = pass && err[best] < 1e-6 && cands[best] == 1.0;
  d << " parabolic constant " << fmt("%+.1f", cands[best]) << " (err " << fmt("%.1e", err[best])
    << ", next best " << fmt("%.1e", *std::min_element(err.begin() + (best == 0 ? 1 : 0), err.end()))
    << ')';
  return {pass, d.str()};
}

// 3: chart curvature formulas against the ambient one.
Line curvature_formulas() {
  std::mt19937_64 rng(99);
  double worst[2]{0.0, 0.0};
  for (const ChartId chart : {ChartId::SemiGeodesic, ChartId::HoroGeodesic}) {
    double& w = worst[chart == ChartId::SemiGeodesic ? 0 : 1];
    for (int k = 0; k < 100; ++k) {
      const TrigCurve c = random_trig_curve(rng, chart, 1.0, -1.0, 1.0);
      for (const double t : {0.15, 0.5, 0.85}) {
        const ChartJet2 jet = c.jet(t);
        const double chart_k =
            chart == ChartId::SemiGeodesic ? kappa_semigeo(jet) : kappa_horo(jet);
        w = std::max(w, std::abs(chart_k - kappa_extrinsic(embed_jet(jet), 1.0)));
      }
    }
  }
  double circles = 0.0;
  for (const double r : {0.5, 1.0, 2.0}) {
    for (int i = -5; i <= 5; ++i) {
      const double u0 = 0.35 * i * r;
      const ChartJet2 vc{{ChartId::SemiGeodesic, u0, 0.1, r}, 0.0, 1.0, 0.0, 0.0};
      circles = std::max(circles, std::abs(kappa_semigeo(vc) + std::tanh(u0 / r) / r));
      const ChartJet2 hc{{ChartId::HoroGeodesic, 0.3 * r, u0, r}, 1.0, 0.0, 0.0, 0.0};
      circles = std::max(circles, std::abs(std::abs(kappa_horo(hc)) - 1.0 / r));
    }
  }
  const bool pass = worst[0] < 1e-6 && worst[1] < 1e-6 && circles < 1e-8;
  return {pass, " semi-geodesic " + fmt("%.2e", worst[0]) + ", horo " + fmt("%.2e", worst[1]) +
                    ", coordinate circles and horocycles " + fmt("%.2e", circles)};
}

double max_killing_residual(CatenaryType type, const Curve& c, double lambda) {
  double worst = 0.0;
  for (std::size_t i = 0; i < c.samples.size(); i += 5) {
    worst = std::max(worst, std::abs(killing_residual(type, c.jet(i), lambda)));
  }
  return worst;
}

// 4: Killing-field law along catenaries, violated by controls.
Line killing_law() {
  const std::array<InitialCondition, 5> ics{InitialCondition{1.0, 0.0, kPi / 6},
                                            {0.5, 0.0, kPi / 3},
                                            {1.5, 0.2, -kPi / 4},
                                            {0.8, -0.3, 2 * kPi / 3},
                                            {1.2, 0.1, kPi / 2}};
  double worst = 0.0, control_min = 1e300;
  std::mt19937_64 rng(7);
  for (const CatenaryType type : kTypes) {
    for (const auto& ic : ics) {
      const Curve c = integrate(type, ic, 1.0, 0.0, 2.0, 1e-3);
      worst = std::max(worst, max_killing_residual(type, c, 0.0));
      // Control: the same curve judged with another multiplier.
      control_min = std::min(control_min, max_killing_residual(type, c, 0.4));
    }
    for (int k = 0; k < 10; ++k) {
      const TrigCurve t = random_trig_curve(rng, ChartId::SemiGeodesic, 1.0, 0.6, 1.2);
      double w = 0.0;
      for (int i = 0; i <= 20; ++i) {
        w = std::max(w, std::abs(killing_residual(type, t.jet(0.05 * i))));
      }
      control_min = std::min(control_min, w);
    }
  }
  const bool pass = worst < 1e-6 && control_min > 1e-2;
  return {pass, " catenaries " + fmt("%.2e", worst) + ", weakest control " + fmt("%.2e", control_min)};
}

// 5: catenaries are critical points of the weighted length.
Line criticality() {
  const std::array<double, 5> eps{1e-2, 3e-3, 1e-3, 3e-4, 1e-4};
  std::mt19937_64 rng(5);
  double min_slope = 1e300, max_control = -1e300;
  for (const CatenaryType type : kTypes) {
    const Curve c = integrate(type, {1.0, 0.0, kPi / 6}, 1.0, 0.0, 4.0, 1e-3);
    // Control: the hypercycle u = 1 at unit speed, perturbed along its normal.
    Curve control;
    control.type = type;
    const double ch = std::cosh(1.0);
    for (int i = 0; i <= 4000; ++i) {
      const double s = 1e-3 * i;
      control.samples.push_back({s, 1.0, (s - 2.0) / ch, 0.0, 1.0 / ch, 0.0, 0.0});
    }
    for (int k = 0; k < 3; ++k) {
      double au = 2 * uniform01(rng) - 1, av = 2 * uniform01(rng) - 1;
      const double n = std::hypot(au, av);
      const Bump b{1.0 + 2.0 * uniform01(rng), 0.3 + 0.5 * uniform01(rng), au / n, av / n};
      min_slope = std::min(min_slope, first_variation_slope(c, b, eps));
      max_control = std::max(max_control,
                             first_variation_slope(control, {b.center, b.half_width, 1.0, 0.0}, eps));
    }
  }
  const bool pass = min_slope >= 1.9 && max_control < 1.3;
  return {pass, " catenary slope min " + fmt("%.3f", min_slope) + ", control slope max " +
                    fmt("%.3f", max_control)};
}

// 6: Clairaut first integral and RK4 order.
Line clairaut_and_order() {
  double drift = 0.0;
  for (const InitialCondition ic : {InitialCondition{1.0, 0.0, kPi / 6}, {0.7, 0.0, kPi / 2},
                                    {1.3, 0.5, -kPi / 3}}) {
    const Curve c = integrate(CatenaryType::Elliptic, ic, 1.0, 0.0, 10.0, 1e-3);
    if (c.status != IntegrationStatus::Completed) return {false, " integration stopped early"};
    double lo = 1e300, hi = -1e300;
    for (const auto& s : c.samples) {
      const double q = clairaut_of_sample(s.u, s.dv, 1.0);
      lo = std::min(lo, q);
      hi = std::max(hi, q);
    }
    drift = std::max(drift, hi - lo);
  }
  double min_ratio = 1e300;
  for (const CatenaryType type : kTypes) {
    auto end = [&](double h) {
      const auto& s = integrate(type, {1.0, 0.0, kPi / 6}, 1.0, 0.0, 4.0, h).samples.back();
      return std::array<double, 2>{s.u, s.v};
    };
    const auto ref = end(0.02 / 16), e1 = end(0.02), e2 = end(0.01);
    const double err1 = std::hypot(e1[0] - ref[0], e1[1] - ref[1]);
    const double err2 = std::hypot(e2[0] - ref[0], e2[1] - ref[1]);
    min_ratio = std::min(min_ratio, err1 / err2);
  }
  const bool pass = drift < 1e-8 && min_ratio >= 14.0;
  return {pass, " Clairaut drift " + fmt("%.2e", drift) + ", error ratio " + fmt("%.2f", min_ratio) +
                    " (order " + fmt("%.2f", std::log2(min_ratio)) + ")"};
}

// 7: horocatenary law and horocycle distance.
Line horocatenary() {
  const Curve c = integrate(CatenaryType::Elliptic, {1.0, 0.0, kPi / 6}, 1.0, 0.0, 4.0, 1e-3);
  double worst = 0.0;
  int n = 0;
  std::pair<double, double> guess{0.0, 0.0};
  for (std::size_t i = 20; i + 1 < c.samples.size() && n < 200; i += 19, ++n) {
    const ChartJet2 h = horo_jet_from_ambient(embed_jet(c.jet(i)), 1.0, guess);
    guess = {h.point.u, h.point.v};
    worst = std::max(worst, std::abs(kappa_horo(h) -
                                     horocatenary_kappa(h.point.u, h.point.v, h.du, h.dv, 1.0)));
  }
  double zerr = 0.0;
  for (const double r : {0.5, 1.0, 3.0}) {
    for (int i = -8; i <= 8; ++i) {
      for (int j = -8; j <= 8; ++j) {
        const double u = 0.3 * i * r, v = 0.3 * j * r;
        const double z = oracle::horo_point_by_rotation(u, v, r)[2];
        zerr = std::max(zerr, std::abs(horocycle_distance(u, v, r) - z) / std::max(1.0, std::abs(z)));
      }
    }
  }
  const bool pass = n == 200 && worst < 1e-6 && zerr < 1e-12;
  return {pass, " " + std::to_string(n) + " samples " + fmt("%.2e", worst) + ", distance vs z " +
                    fmt("%.2e", zerr)};
}

// 8: relaxed chain against the shooting-matched ODE catenary.
Line relaxer_vs_ode() {
  const ChainNode a{1.0, -0.5}, b{1.0, 0.5};
  double gaps[2]{};
  double secs64 = 0.0, kres = 0.0;
  bool converged = true;
  for (int k = 0; k < 2; ++k) {
    const std::size_t N = k == 0 ? 64 : 128;
    const double L = 1.1 * hyperbolic_distance(psi(a.u, a.v, 1.0), psi(b.u, b.v, 1.0), 1.0);
    const DiscreteChain c0 = make_initial_chain(CatenaryType::Elliptic, 1.0, a, b, L, N);
    const auto t0 = std::chrono::steady_clock::now();
    const auto [chain, report] = relax(c0, RelaxOptions{});
    if (k == 0) {
      secs64 = seconds_since(t0);
      for (std::size_t i = 1; i < N; ++i) {
        kres = std::max(kres, std::abs(discrete_kappa_residual(chain, i, report.lambda)));
      }
    }
    converged = converged && report.status == RelaxStatus::Converged;
    const auto shot = oracle::shoot(CatenaryType::Elliptic, 1.0, a, b, L, L / 4096);
    if (shot.miss > 1e-10) return {false, " shooting did not converge, miss " + fmt("%.2e", shot.miss)};
    gaps[k] = oracle::chain_gap(chain, shot, 4096.0 / static_cast<double>(N));
  }
  const double factor = gaps[0] / gaps[1];
  const bool pass = converged && gaps[0] < 5e-3 && factor >= 2.0 && secs64 < 10.0 && kres < 5e-2;
  return {pass, " gap N=64 " + fmt("%.2e", gaps[0]) + ", N=128 " + fmt("%.2e", gaps[1]) +
                    " (factor " + fmt("%.2f", factor) + "), relax " + fmt("%.2f", secs64) +
                    "s, kappa residual " + fmt("%.2e", kres)};
}

// 9: deterministic outputs and exit codes of the CLI.
Line cli_contract() {
  namespace fs = std::filesystem;
  const std::string cli = HYCAT_CLI_PATH;
  const fs::path dir = fs::temp_directory_path() / ("hycat_accept_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::string d = dir.string() + "/";
  const std::string q = " >/dev/null 2>&1";
  auto twice = [&](const std::string& args, const std::vector<std::string>& outputs) {
    for (const char* tag : {"a", "b"}) {
      std::string cmd = args;
      for (std::size_t pos; (pos = cmd.find("@")) != std::string::npos;) cmd.replace(pos, 1, d + tag);
      if (oracle::run(cli + " --no-banner " + cmd + q) != 0) return false;
    }
    for (const auto& o : outputs) {
      const std::string x = oracle::slurp(d + "a" + o), y = oracle::slurp(d + "b" + o);
      if (x.empty() || x != y) return false;
    }
    return true;
  };
  int same = 0, same_total = 0;
  same_total++; same += twice("solve --type hyperbolic --smax 3 --out @.csv", {".csv"});
  same_total++; same += twice("revolve --type elliptic --smax 2 --ntheta 16 --nrows 12 --out @.obj",
                              {".obj", ".obj.H.csv", ".obj.vertices.csv"});
  same_total++; same += twice("relax --N 32 --out @.chain.csv", {".chain.csv", ".chain.csv.json"});

  struct Neg { std::string args; int code; };
  const std::vector<Neg> negs{
      {"solve --r -1 --out " + d + "n.csv", 1},
      {"solve --type foo --out " + d + "n.csv", 1},
      {"relax --slack -0.1 --out " + d + "n.csv", 1},
      {"solve --u0 0 --out " + d + "n.csv", 2},
      {"relax --u0 -1 --out " + d + "n.csv", 2},
      {"solve --out " + d + "missing_dir/n.csv", 3},
      {"revolve --curve " + d + "missing.csv --out " + d + "n.obj", 3}};
  int neg_ok = 0;
  std::string bad;
  for (const auto& n : negs) {
    const int code = oracle::run(cli + " --no-banner " + n.args + q);
    if (code == n.code) {
      ++neg_ok;
    } else {
      bad += " [" + n.args.substr(0, n.args.find(" --out")) + " -> " + std::to_string(code) + "]";
    }
  }
  fs::remove_all(dir);
  const bool pass = same == same_total && neg_ok == static_cast<int>(negs.size());
  return {pass, " byte-identical " + std::to_string(same) + "/" + std::to_string(same_total) +
                    ", exit codes " + std::to_string(neg_ok) + "/" + std::to_string(negs.size()) + bad};
}

}  // namespace

int main() {
  using Fn = std::function<Line()>;
  const std::vector<std::pair<const char*, Fn>> criteria{
      {"rotated catenaries are minimal", minimal_surfaces},
      {"closed-form H matches finite differences", closed_vs_numeric},
      {"chart curvature formulas agree with the ambient one", curvature_formulas},
      {"Killing-field law", killing_law},
      {"catenaries are critical", criticality},
      {"Clairaut integral and RK4 order", clairaut_and_order},
      {"horocatenary law", horocatenary},
      {"relaxed chain matches the ODE catenary", relaxer_vs_ode},
      {"CLI determinism and exit codes", cli_contract}};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Line line;
    try {
      line = criteria[i].second();
    } catch (const std::exception& e) {
      line = {false, std::string(" exception: ") + e.what()};
    }
    failed += line.pass ? 0 : 1;
    std::printf("%s %zu %s:%s\n", line.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                line.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}

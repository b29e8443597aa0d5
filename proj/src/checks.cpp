#include "hycat/checks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "hycat/catenary.hpp"
#include "hycat/charts.hpp"
#include "hycat/error.hpp"
#include "hycat/io.hpp"
#include "hycat/revolution.hpp"
#include "hycat/sample_curves.hpp"

namespace hycat {

const std::vector<std::string>& check_families() {
  static const std::vector<std::string> families{"metric-pullback", "curvature", "killing",
                                                 "mean-curvature", "horocatenary"};
  return families;
}

namespace {

CheckResult make_result(std::string family, std::string name, int samples, double max_residual,
                        double tol, std::string note = {}) {
  return {std::move(family), std::move(name), samples, max_residual, tol,
          std::isfinite(max_residual) && max_residual < tol, std::move(note)};
}

void metric_pullback(const CheckConfig& cfg, std::vector<CheckResult>& out) {
  const double r = cfg.r;
  for (const ChartId chart : {ChartId::SemiGeodesic, ChartId::HoroGeodesic}) {
    double worst = 0.0, worst_hyp = 0.0;
    int n = 0;
    for (int i = -8; i <= 8; ++i) {
      for (int j = -8; j <= 8; ++j) {
        const ChartPoint pt{chart, 0.25 * i * r, 0.25 * j * r, r};
        const ChartPartials d = chart_partials(pt);
        const MetricCoeffs m = metric(pt);
        const double scale = std::max({m.E, m.G, 1.0});
        worst = std::max({worst, std::abs(inner1(d.du, d.du) - m.E) / scale,
                          std::abs(inner1(d.du, d.dv) - m.F) / scale,
                          std::abs(inner1(d.dv, d.dv) - m.G) / scale});
        const LorentzVec3 p = chart_map(pt);
        worst_hyp = std::max(worst_hyp, std::abs(inner1(p, p) + r * r) / (p.c0 * p.c0));
        ++n;
      }
    }
    const std::string tag = chart == ChartId::SemiGeodesic ? "semi-geodesic" : "horo-geodesic";
    out.push_back(make_result("metric-pullback", tag + " first fundamental form", n, worst, 1e-12));
    out.push_back(make_result("metric-pullback", tag + " on hyperboloid", n, worst_hyp, 1e-13));
  }
}

void curvature(const CheckConfig& cfg, std::vector<CheckResult>& out) {
  const double r = cfg.r;
  std::mt19937_64 rng(cfg.seed);
  for (const ChartId chart : {ChartId::SemiGeodesic, ChartId::HoroGeodesic}) {
    double worst = 0.0;
    int n = 0;
    for (int k = 0; k < cfg.n_curves; ++k) {
      const TrigCurve c = random_trig_curve(rng, chart, r, -1.0 * r, 1.0 * r);
      for (const double t : {0.1, 0.5, 0.9}) {
        const ChartJet2 jet = c.jet(t);
        worst = std::max(worst, std::abs(kappa_chart(jet) - kappa_extrinsic(embed_jet(jet), r)));
        ++n;
      }
    }
    const std::string tag = chart == ChartId::SemiGeodesic ? "kappa_semigeo" : "kappa_horo";
    out.push_back(make_result("curvature", tag + " vs extrinsic", n, worst, 1e-6));
  }
  double worst_circle = 0.0, worst_horocycle = 0.0;
  int n = 0;
  for (int i = -6; i <= 6; ++i) {
    const double u0 = 0.3 * i * r;
    const ChartJet2 circle{{ChartId::SemiGeodesic, u0, 0.2 * r, r}, 0.0, 1.0, 0.0, 0.0};
    worst_circle = std::max(worst_circle,
                            std::abs(kappa_semigeo(circle) + std::tanh(u0 / r) / r));
    const ChartJet2 horocycle{{ChartId::HoroGeodesic, 0.2 * r, u0, r}, 1.0, 0.0, 0.0, 0.0};
    worst_horocycle = std::max(worst_horocycle, std::abs(std::abs(kappa_horo(horocycle)) - 1.0 / r));
    ++n;
  }
  out.push_back(make_result("curvature", "v-curves: -(1/r) tanh(u0/r)", n, worst_circle, 1e-8));
  out.push_back(make_result("curvature", "horocycles: |kappa| = 1/r", n, worst_horocycle, 1e-8));
}

void killing(const CheckConfig& cfg, std::vector<CheckResult>& out) {
  const double r = cfg.r;
  const double pi = std::numbers::pi;
  for (const CatenaryType type :
       {CatenaryType::Elliptic, CatenaryType::Hyperbolic, CatenaryType::Parabolic}) {
    double worst = 0.0;
    int n = 0;
    for (const InitialCondition ic : {InitialCondition{1.0 * r, 0.0, pi / 6},
                                      InitialCondition{0.5 * r, 0.0, pi / 3},
                                      InitialCondition{1.5 * r, 0.2 * r, -pi / 4},
                                      InitialCondition{0.8 * r, -0.3 * r, 2.0 * pi / 3},
                                      InitialCondition{1.2 * r, 0.1 * r, pi / 2}}) {
      const Curve c = integrate(type, ic, r, 0.0, 2.0 * r, 1e-3 * r);
      for (std::size_t i = 0; i < c.samples.size(); i += 10) {
        worst = std::max(worst, std::abs(killing_residual(type, c.jet(i))));
        ++n;
      }
    }
    out.push_back(make_result("killing", std::string(to_string(type)) + " catenaries", n, worst,
                              1e-6));
  }
}

void mean_curvature(const CheckConfig& cfg, std::vector<CheckResult>& out) {
  const double r = cfg.r;
  std::mt19937_64 rng(cfg.seed + 1);
  for (const CatenaryType type :
       {CatenaryType::Elliptic, CatenaryType::Hyperbolic, CatenaryType::Parabolic}) {
    double worst = 0.0;
    int n = 0;
    for (int k = 0; k < cfg.n_curves; ++k) {
      const TrigCurve c = random_trig_curve(rng, ChartId::SemiGeodesic, r, 0.6 * r, 1.2 * r);
      const GeneratingCurve g = [&c](double t) { return c.point(t); };
      for (const double t : {0.25, 0.75}) {
        const double closed = mean_curvature_closed(type, generating_jet(c.jet(t)));
        const double numeric = mean_curvature_numeric(type, g, r, t, 0.3, 1e-4 * r);
        worst = std::max(worst, std::abs(closed - numeric));
        ++n;
      }
    }
    out.push_back(make_result("mean-curvature",
                              std::string(to_string(type)) + " closed vs numeric", n, worst,
                              1e-5));
  }

  // Which constant c makes kappa = c [(x-y) z' - (x'-y') z] / (r (x-y) |g'|)
  // hold along a parabolic catenary (whose rotation is minimal)?
  const Curve cat = integrate(CatenaryType::Parabolic, {1.0 * r, 0.0, std::numbers::pi / 6}, r,
                              0.0, 4.0 * r, 1e-3 * r);
  const std::array<double, 4> candidates{1.0, -1.0, 0.5, -0.5};
  std::array<double, 4> err{};
  int n = 0;
  for (std::size_t i = 0; i < cat.samples.size(); i += 20) {
    const GeneratingJet j = generating_jet(cat.jet(i));
    const double kappa = kappa_extrinsic(j.p, j.dp, j.ddp, r);
    const double base = minimal_kappa_target(CatenaryType::Parabolic, j);
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      err[c] = std::max(err[c], std::abs(kappa - candidates[c] * base));
    }
    ++n;
  }
  const auto best = static_cast<std::size_t>(std::min_element(err.begin(), err.end()) - err.begin());
  std::ostringstream note;
  note << "resolved factor " << format_double(candidates[best]) << " over r(x-y)|g'|; others:";
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    if (c != best) note << ' ' << format_double(candidates[c]) << "->" << err[c];
  }
  out.push_back(make_result("mean-curvature", "parabolic minimality constant", n, err[best], 1e-6,
                            note.str()));
}

void horocatenary(const CheckConfig& cfg, std::vector<CheckResult>& out) {
  const double r = cfg.r;
  const Curve cat = integrate(CatenaryType::Elliptic, {1.0 * r, 0.0, std::numbers::pi / 6}, r,
                              0.0, 4.0 * r, 1e-3 * r);
  double worst = 0.0;
  int n = 0;
  std::pair<double, double> guess{0.0, 0.0};
  const std::size_t stride = std::max<std::size_t>(1, cat.samples.size() / 201);
  for (std::size_t i = stride; i + 1 < cat.samples.size() && n < 200; i += stride) {
    const ChartJet2 h = horo_jet_from_ambient(embed_jet(cat.jet(i)), r, guess);
    guess = {h.point.u, h.point.v};
    worst = std::max(worst, std::abs(kappa_horo(h) -
                                     horocatenary_kappa(h.point.u, h.point.v, h.du, h.dv, r)));
    ++n;
  }
  out.push_back(make_result("horocatenary", "elliptic catenary in horo coordinates", n, worst,
                            1e-6));

  double worst_z = 0.0;
  int m = 0;
  for (int i = -6; i <= 6; ++i) {
    for (int j = -6; j <= 6; ++j) {
      const double u = 0.4 * i * r, v = 0.4 * j * r;
      const double z = phi(u, v, r).c2;
      worst_z = std::max(worst_z, std::abs(horocycle_distance(u, v, r) - z));
      ++m;
    }
  }
  out.push_back(make_result("horocatenary", "horocycle distance = z", m, worst_z, 1e-12));
}

}  // namespace

std::vector<CheckResult> run_checks(const CheckConfig& config) {
  using Runner = std::function<void(const CheckConfig&, std::vector<CheckResult>&)>;
  const std::vector<std::pair<std::string, Runner>> runners{
      {"metric-pullback", metric_pullback},
      {"curvature", curvature},
      {"killing", killing},
      {"mean-curvature", mean_curvature},
      {"horocatenary", horocatenary}};
  if (!config.only.empty() &&
      std::none_of(runners.begin(), runners.end(),
                   [&](const auto& e) { return e.first == config.only; })) {
    throw UsageError("unknown check family '" + config.only + "'");
  }
  if (config.n_curves < 1) {
    throw UsageError("check: number of curves must be positive");
  }
  std::vector<CheckResult> out;
  for (const auto& [family, run] : runners) {
    if (config.only.empty() || config.only == family) {
      run(config, out);
    }
  }
  return out;
}

}  // namespace hycat

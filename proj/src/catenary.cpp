#include "hycat/catenary.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "hycat/error.hpp"

namespace hycat {

std::string_view to_string(CatenaryType type) {
  switch (type) {
    case CatenaryType::Elliptic:
      return "elliptic";
    case CatenaryType::Hyperbolic:
      return "hyperbolic";
    case CatenaryType::Parabolic:
      return "parabolic";
  }
  return "unknown";
}

CatenaryType parse_catenary_type(std::string_view name) {
  if (name == "elliptic") return CatenaryType::Elliptic;
  if (name == "hyperbolic") return CatenaryType::Hyperbolic;
  if (name == "parabolic") return CatenaryType::Parabolic;
  throw UsageError("unknown catenary type '" + std::string(name) + "'");
}

std::string_view to_string(IntegrationStatus status) {
  switch (status) {
    case IntegrationStatus::Completed:
      return "completed";
    case IntegrationStatus::HitReferencePlane:
      return "hit-reference-plane";
    case IntegrationStatus::ChartLimit:
      return "chart-limit";
  }
  return "unknown";
}

PlaneType reference_plane(CatenaryType type) {
  switch (type) {
    case CatenaryType::Elliptic:
      return PlaneType::SpanXY;
    case CatenaryType::Hyperbolic:
      return PlaneType::SpanYZ;
    case CatenaryType::Parabolic:
      return PlaneType::SpanLight;
  }
  throw UsageError("reference_plane: unknown type");
}

WeightJet weight_jet(CatenaryType type, double u, double v, double r) {
  check_chart_domain(u, v, r);
  const double cu = std::cosh(u / r), su = std::sinh(u / r);
  switch (type) {
    case CatenaryType::Elliptic:
      return {su, cu / r, 0.0};
    case CatenaryType::Hyperbolic: {
      const double cv = std::cosh(v / r), sv = std::sinh(v / r);
      return {cu * cv, su * cv / r, cu * sv / r};
    }
    case CatenaryType::Parabolic: {
      const double e = std::exp(-v / r);
      return {e * cu, e * su / r, -e * cu / r};
    }
  }
  throw UsageError("weight_jet: unknown type");
}

double weight(CatenaryType type, double u, double v, double r, double lambda) {
  const double w = weight_jet(type, u, v, r).f + lambda;
  if (!(w > 0.0)) {
    throw DomainError("weight: total weight is not positive (curve crosses the reference level)");
  }
  return w;
}

double catenary_kappa(CatenaryType type, double u, double v, double du, double dv, double r,
                      double lambda) {
  const WeightJet wj = weight_jet(type, u, v, r);
  const double w = wj.f + lambda;
  if (!(w > 0.0)) {
    throw DomainError("catenary_kappa: total weight is not positive");
  }
  const double c = std::cosh(u / r);
  const double speed2 = du * du + c * c * dv * dv;
  if (!(speed2 > 0.0)) {
    throw DomainError("catenary_kappa: zero velocity");
  }
  return (dv * wj.f_u * c - du * wj.f_v / c) / (w * std::sqrt(speed2));
}

std::pair<double, double> catenary_acceleration(CatenaryType type, double u, double v, double du,
                                                double dv, double r, double lambda) {
  const double kappa = catenary_kappa(type, u, v, du, dv, r, lambda);
  const double c = std::cosh(u / r), s = std::sinh(u / r);
  const double speed = std::sqrt(du * du + c * c * dv * dv);
  const double nu_u = dv * c / speed;
  const double nu_v = -du / c / speed;
  // Γ^1_22 = -sinh cosh / r, Γ^2_12 = tanh / r.
  const double ddu = s * c / r * dv * dv + kappa * nu_u;
  const double ddv = -2.0 * (s / c) / r * du * dv + kappa * nu_v;
  return {ddu, ddv};
}

ChartJet2 Curve::jet(std::size_t i) const {
  const CurveSample& s = samples.at(i);
  return {{chart, s.u, s.v, r}, s.du, s.dv, s.ddu, s.ddv};
}

namespace {

using State = std::array<double, 4>;

State rhs(CatenaryType type, const State& y, double r, double lambda) {
  const auto [ddu, ddv] = catenary_acceleration(type, y[0], y[1], y[2], y[3], r, lambda);
  return {y[2], y[3], ddu, ddv};
}

State axpy(const State& y, double h, const State& k) {
  return {y[0] + h * k[0], y[1] + h * k[1], y[2] + h * k[2], y[3] + h * k[3]};
}

CurveSample make_sample(CatenaryType type, double s, const State& y, double r, double lambda) {
  const auto [ddu, ddv] = catenary_acceleration(type, y[0], y[1], y[2], y[3], r, lambda);
  return {s, y[0], y[1], y[2], y[3], ddu, ddv};
}

bool beyond_chart(const State& y, double r) {
  return std::abs(y[0] / r) > kChartLimit || std::abs(y[1] / r) > kChartLimit;
}

}  // namespace

Curve integrate(CatenaryType type, const InitialCondition& ic, double r, double lambda,
                double s_max, double step) {
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw UsageError("integrate: step must be positive");
  }
  if (!(s_max > 0.0) || !std::isfinite(s_max)) {
    throw UsageError("integrate: s_max must be positive");
  }
  if (!(r > 0.0)) {
    throw UsageError("integrate: r must be positive");
  }
  if (weight(type, ic.u0, ic.v0, r, lambda) < kWeightFloor * r) {
    throw DomainError("integrate: initial weight below the positivity floor");
  }

  Curve curve;
  curve.type = type;
  curve.chart = ChartId::SemiGeodesic;
  curve.r = r;
  curve.lambda = lambda;

  const double c0 = std::cosh(ic.u0 / r);
  State y{ic.u0, ic.v0, std::cos(ic.theta0), std::sin(ic.theta0) / c0};

  const auto n_steps = static_cast<std::size_t>(std::ceil(s_max / step - 1e-9));
  curve.samples.reserve(n_steps + 1);
  curve.embedded.reserve(n_steps + 1);
  curve.samples.push_back(make_sample(type, 0.0, y, r, lambda));
  curve.embedded.push_back(psi(y[0], y[1], r));

  double s = 0.0;
  for (std::size_t k = 1; k <= n_steps; ++k) {
    const double s_next = (k == n_steps) ? s_max : static_cast<double>(k) * step;
    const double h = s_next - s;
    State next{};
    try {
      const State k1 = rhs(type, y, r, lambda);
      const State k2 = rhs(type, axpy(y, 0.5 * h, k1), r, lambda);
      const State k3 = rhs(type, axpy(y, 0.5 * h, k2), r, lambda);
      const State k4 = rhs(type, axpy(y, h, k3), r, lambda);
      for (int i = 0; i < 4; ++i) {
        next[i] = y[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
      }
    } catch (const DomainError&) {
      curve.status = (std::abs(y[0] / r) + h / r > kChartLimit ||
                      std::abs(y[1] / r) + h / r > kChartLimit)
                         ? IntegrationStatus::ChartLimit
                         : IntegrationStatus::HitReferencePlane;
      break;
    }
    if (beyond_chart(next, r)) {
      curve.status = IntegrationStatus::ChartLimit;
      break;
    }
    const double c = std::cosh(next[0] / r);
    const double speed = std::sqrt(next[2] * next[2] + c * c * next[3] * next[3]);
    next[2] /= speed;
    next[3] /= speed;
    if (weight_jet(type, next[0], next[1], r).f + lambda < kWeightFloor * r) {
      curve.status = IntegrationStatus::HitReferencePlane;
      break;
    }
    y = next;
    s = s_next;
    curve.samples.push_back(make_sample(type, s, y, r, lambda));
    curve.embedded.push_back(psi(y[0], y[1], r));
  }
  return curve;
}

double clairaut(double u, double theta, double r) {
  return 0.5 * std::sinh(2.0 * u / r) * std::cos(theta);
}

double clairaut_of_sample(double u, double dv, double r) {
  return 0.5 * std::sinh(2.0 * u / r) * dv * std::cosh(u / r);
}

LorentzVec3 killing_field(CatenaryType type, const LorentzVec3& /*p*/, double r) {
  switch (type) {
    case CatenaryType::Elliptic:
      return {0.0, 0.0, 1.0};
    case CatenaryType::Hyperbolic:
      return {-1.0, 0.0, 0.0};
    case CatenaryType::Parabolic: {
      const double k = -1.0 / (r * std::numbers::sqrt2);
      return {k, k, 0.0};
    }
  }
  throw UsageError("killing_field: unknown type");
}

LorentzVec3 tangent_part(const LorentzVec3& X, const LorentzVec3& p, double r) {
  return X + (inner1(X, p) / (r * r)) * p;
}

namespace {

double potential_scale(CatenaryType type, double r) {
  return type == CatenaryType::Parabolic ? 1.0 / std::numbers::sqrt2 : r;
}

// Same potential evaluated from ambient coordinates, valid in either chart.
double ambient_potential(CatenaryType type, const LorentzVec3& p, double r, double lambda) {
  switch (type) {
    case CatenaryType::Elliptic:
      return p.c2 + r * lambda;
    case CatenaryType::Hyperbolic:
      return p.c0 + r * lambda;
    case CatenaryType::Parabolic:
      return ((p.c0 - p.c1) / r + lambda) / std::numbers::sqrt2;
  }
  throw UsageError("ambient_potential: unknown type");
}

}  // namespace

double killing_potential(CatenaryType type, double u, double v, double r, double lambda) {
  return potential_scale(type, r) * (weight_jet(type, u, v, r).f + lambda);
}

double killing_residual(CatenaryType type, const ChartJet2& jet, double lambda) {
  const double r = jet.point.r;
  const AmbientJet amb = embed_jet(jet);
  const double potential = ambient_potential(type, amb.p, r, lambda);
  if (!(potential > 0.0)) {
    throw DomainError("killing_residual: zero distance to the reference plane");
  }
  const auto [n_u, n_v] = chart_normal(jet);
  const ChartPartials d = chart_partials(jet.point);
  const LorentzVec3 n = n_u * d.du + n_v * d.dv;
  const LorentzVec3 X = killing_field(type, amb.p, r);
  return kappa_extrinsic(amb, r) + inner1(n, X) / potential;
}

double Bump::profile(double s) const {
  const double x = (s - center) / half_width;
  if (std::abs(x) >= 1.0) return 0.0;
  const double q = 1.0 - x * x;
  return (q * q) * (q * q);
}

double Bump::profile_derivative(double s) const {
  const double x = (s - center) / half_width;
  if (std::abs(x) >= 1.0) return 0.0;
  const double q = 1.0 - x * x;
  return -8.0 * x * q * q * q / half_width;
}

namespace {

// Weights of the exact integral over [a,b] of the quadratic interpolant
// through (x0,x1,x2), evaluated with 2-point Gauss-Legendre (exact for cubics).
std::array<double, 3> quadratic_weights(double x0, double x1, double x2, double a, double b) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  const double g = half / std::numbers::sqrt3;
  std::array<double, 3> w{};
  for (const double x : {mid - g, mid + g}) {
    w[0] += half * (x - x1) * (x - x2) / ((x0 - x1) * (x0 - x2));
    w[1] += half * (x - x0) * (x - x2) / ((x1 - x0) * (x1 - x2));
    w[2] += half * (x - x0) * (x - x1) / ((x2 - x0) * (x2 - x1));
  }
  return w;
}

// Composite quadratic (Simpson-type) weights for arbitrary increasing nodes.
std::vector<double> quadrature_weights(std::span<const double> s) {
  const std::size_t n = s.size();
  std::vector<double> w(n, 0.0);
  if (n < 3) {
    if (n == 2) {
      w[0] = w[1] = 0.5 * (s[1] - s[0]);
    }
    return w;
  }
  std::size_t i = 0;
  for (; i + 2 < n; i += 2) {
    const auto q = quadratic_weights(s[i], s[i + 1], s[i + 2], s[i], s[i + 2]);
    w[i] += q[0];
    w[i + 1] += q[1];
    w[i + 2] += q[2];
  }
  if (i + 1 < n) {
    // One trailing interval: integrate the quadratic through the last three nodes.
    const auto q = quadratic_weights(s[n - 3], s[n - 2], s[n - 1], s[n - 2], s[n - 1]);
    w[n - 3] += q[0];
    w[n - 2] += q[1];
    w[n - 1] += q[2];
  }
  return w;
}

double perturbed_integrand(const Curve& curve, const CurveSample& smp, const Bump& bump,
                           double eps) {
  const CatenaryType type = curve.type.value();
  const double b = bump.profile(smp.s), db = bump.profile_derivative(smp.s);
  const double u = smp.u + eps * bump.amp_u * b;
  const double v = smp.v + eps * bump.amp_v * b;
  const double du = smp.du + eps * bump.amp_u * db;
  const double dv = smp.dv + eps * bump.amp_v * db;
  const double w = weight(type, u, v, curve.r, curve.lambda);
  const double c = std::cosh(u / curve.r);
  return w * std::sqrt(du * du + c * c * dv * dv);
}

void check_variation_inputs(const Curve& curve, const Bump& bump) {
  if (!curve.type) {
    throw UsageError("first variation: curve has no catenary type");
  }
  if (curve.chart != ChartId::SemiGeodesic) {
    throw UsageError("first variation: curve must be in semi-geodesic coordinates");
  }
  if (curve.samples.size() < 3) {
    throw UsageError("first variation: need at least three samples");
  }
  if (!(bump.half_width > 0.0) || bump.center - bump.half_width < curve.samples.front().s ||
      bump.center + bump.half_width > curve.samples.back().s) {
    throw UsageError("first variation: bump support must lie inside the curve");
  }
}

}  // namespace

double weighted_length(const Curve& curve, const Bump& bump, double eps) {
  check_variation_inputs(curve, bump);
  std::vector<double> s(curve.samples.size());
  std::ranges::transform(curve.samples, s.begin(), &CurveSample::s);
  const std::vector<double> w = quadrature_weights(s);
  double acc = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    acc += w[i] * perturbed_integrand(curve, curve.samples[i], bump, eps);
  }
  return acc;
}

double el_first_variation(const Curve& curve, const Bump& bump, double eps) {
  check_variation_inputs(curve, bump);
  if (eps == 0.0) {
    return 0.0;
  }
  std::vector<double> s(curve.samples.size());
  std::ranges::transform(curve.samples, s.begin(), &CurveSample::s);
  const std::vector<double> w = quadrature_weights(s);
  double acc = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const CurveSample& smp = curve.samples[i];
    if (bump.profile(smp.s) == 0.0 && bump.profile_derivative(smp.s) == 0.0) {
      continue;
    }
    acc += w[i] * (perturbed_integrand(curve, smp, bump, eps) -
                   perturbed_integrand(curve, smp, bump, 0.0));
  }
  return acc;
}

double first_variation_slope(const Curve& curve, const Bump& bump, std::span<const double> eps) {
  if (eps.size() < 2) {
    throw UsageError("first_variation_slope: need at least two eps values");
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const double e : eps) {
    const double dw = std::abs(el_first_variation(curve, bump, e));
    const double x = std::log(e);
    const double y = std::log(std::max(dw, 1e-300));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(eps.size());
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double horocatenary_kappa(double u, double v, double du, double dv, double r) {
  check_chart_domain(u, v, r);
  if (!(u > 0.0)) {
    throw DomainError("horocatenary_kappa: u must be positive");
  }
  const double e2 = std::exp(-2.0 * v / r);
  const double speed2 = e2 * du * du + dv * dv;
  if (!(speed2 > 0.0)) {
    throw DomainError("horocatenary_kappa: zero velocity");
  }
  return std::exp(v / r) * (dv + u * du / r * e2) / (u * std::sqrt(speed2));
}

}  // namespace hycat

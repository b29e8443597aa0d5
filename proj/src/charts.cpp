#include "hycat/charts.hpp"

#include <cmath>
#include <string>

#include "hycat/error.hpp"

namespace hycat {

void check_chart_domain(double u, double v, double r) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw UsageError("chart: r must be positive and finite");
  }
  if (!std::isfinite(u) || !std::isfinite(v)) {
    throw DomainError("chart: non-finite coordinates");
  }
  if (std::abs(u / r) > kChartLimit || std::abs(v / r) > kChartLimit) {
    throw DomainError("chart: |u/r| or |v/r| exceeds the chart limit " +
                      std::to_string(kChartLimit));
  }
}

// ---------------------------------------------------------------------------
// semi-geodesic chart

LorentzVec3 psi(double u, double v, double r) {
  check_chart_domain(u, v, r);
  const double cu = std::cosh(u / r);
  return {r * cu * std::cosh(v / r), r * cu * std::sinh(v / r), r * std::sinh(u / r)};
}

ChartPartials psi_partials(double u, double v, double r) {
  check_chart_domain(u, v, r);
  const double cu = std::cosh(u / r), su = std::sinh(u / r);
  const double cv = std::cosh(v / r), sv = std::sinh(v / r);
  return {{su * cv, su * sv, cu}, {cu * sv, cu * cv, 0.0}};
}

ChartSecondPartials psi_second_partials(double u, double v, double r) {
  check_chart_domain(u, v, r);
  const double cu = std::cosh(u / r), su = std::sinh(u / r);
  const double cv = std::cosh(v / r), sv = std::sinh(v / r);
  return {{cu * cv / r, cu * sv / r, su / r},
          {su * sv / r, su * cv / r, 0.0},
          {cu * cv / r, cu * sv / r, 0.0}};
}

// ---------------------------------------------------------------------------
// horo-geodesic chart

LorentzVec3 phi(double u, double v, double r) {
  check_chart_domain(u, v, r);
  const double e = std::exp(-v / r);
  const double q = u * u / (2.0 * r * r) * e;
  return {r * (std::cosh(v / r) + q), r * (std::sinh(v / r) + q), u * e};
}

ChartPartials phi_partials(double u, double v, double r) {
  check_chart_domain(u, v, r);
  const double e = std::exp(-v / r);
  const double q = u * u / (2.0 * r * r) * e;
  return {{e * u / r, e * u / r, e}, {std::sinh(v / r) - q, std::cosh(v / r) - q, -u / r * e}};
}

ChartSecondPartials phi_second_partials(double u, double v, double r) {
  check_chart_domain(u, v, r);
  const double e = std::exp(-v / r);
  const double q = u * u / (2.0 * r * r) * e;
  return {{e / r, e / r, 0.0},
          {-e * u / (r * r), -e * u / (r * r), -e / r},
          {(std::cosh(v / r) + q) / r, (std::sinh(v / r) + q) / r, u * e / (r * r)}};
}

// ---------------------------------------------------------------------------
// dispatch

LorentzVec3 chart_map(const ChartPoint& pt) {
  return pt.chart == ChartId::SemiGeodesic ? psi(pt.u, pt.v, pt.r) : phi(pt.u, pt.v, pt.r);
}

ChartPartials chart_partials(const ChartPoint& pt) {
  return pt.chart == ChartId::SemiGeodesic ? psi_partials(pt.u, pt.v, pt.r)
                                           : phi_partials(pt.u, pt.v, pt.r);
}

ChartSecondPartials chart_second_partials(const ChartPoint& pt) {
  return pt.chart == ChartId::SemiGeodesic ? psi_second_partials(pt.u, pt.v, pt.r)
                                           : phi_second_partials(pt.u, pt.v, pt.r);
}

MetricCoeffs metric(const ChartPoint& pt) {
  check_chart_domain(pt.u, pt.v, pt.r);
  if (pt.chart == ChartId::SemiGeodesic) {
    const double c = std::cosh(pt.u / pt.r);
    return {1.0, 0.0, c * c};
  }
  return {std::exp(-2.0 * pt.v / pt.r), 0.0, 1.0};
}

ChristoffelSet christoffel(const ChartPoint& pt) {
  check_chart_domain(pt.u, pt.v, pt.r);
  ChristoffelSet g;
  const double r = pt.r;
  if (pt.chart == ChartId::SemiGeodesic) {
    g.G122 = -std::sinh(pt.u / r) * std::cosh(pt.u / r) / r;
    g.G212 = std::tanh(pt.u / r) / r;
  } else {
    g.G211 = std::exp(-2.0 * pt.v / r) / r;
    g.G112 = -1.0 / r;
  }
  return g;
}

double speed_squared(const ChartJet2& jet) {
  const MetricCoeffs m = metric(jet.point);
  return m.E * jet.du * jet.du + 2.0 * m.F * jet.du * jet.dv + m.G * jet.dv * jet.dv;
}

namespace {

double regular_speed(const ChartJet2& jet) {
  const double s2 = speed_squared(jet);
  if (!(s2 > 0.0)) {
    throw DomainError("curvature: zero velocity");
  }
  return std::sqrt(s2);
}

}  // namespace

double kappa_semigeo(const ChartJet2& jet) {
  const double speed = regular_speed(jet);
  const ChristoffelSet g = christoffel(jet.point);
  const MetricCoeffs m = metric(jet.point);
  const double du = jet.du, dv = jet.dv;
  const double bracket = g.G122 * dv * dv * dv - g.G211 * du * du * du -
                         (2.0 * g.G212 - g.G111) * du * du * dv +
                         (2.0 * g.G112 - g.G222) * du * dv * dv + jet.ddu * dv - du * jet.ddv;
  const double sqrt_det = std::sqrt(m.E * m.G - m.F * m.F);
  return sqrt_det * bracket / (speed * speed * speed);
}

double kappa_horo(const ChartJet2& jet) {
  const double r = jet.point.r, v = jet.point.v;
  const double du = jet.du, dv = jet.dv;
  const double e2 = std::exp(-2.0 * v / r);
  const double s2 = e2 * du * du + dv * dv;
  if (!(s2 > 0.0)) {
    throw DomainError("kappa_horo: zero velocity");
  }
  const double num = jet.ddu * dv - du * (jet.ddv + du * du / r * e2 + 2.0 * dv * dv / r);
  return num / (std::exp(v / r) * std::pow(s2, 1.5));
}

double kappa_chart(const ChartJet2& jet) {
  return jet.point.chart == ChartId::SemiGeodesic ? kappa_semigeo(jet) : kappa_horo(jet);
}

double kappa_extrinsic(const LorentzVec3& p, const LorentzVec3& dp, const LorentzVec3& ddp,
                       double r) {
  const double s2 = inner1(dp, dp);
  if (!(s2 > 0.0)) {
    throw DomainError("kappa_extrinsic: velocity is not spacelike");
  }
  const double speed = std::sqrt(s2);
  return inner1(cross3(p, dp), ddp) / (r * speed * speed * speed);
}

double kappa_extrinsic(const AmbientJet& jet, double r) {
  return kappa_extrinsic(jet.p, jet.dp, jet.ddp, r);
}

AmbientJet embed_jet(const ChartJet2& jet) {
  const ChartPartials d = chart_partials(jet.point);
  const ChartSecondPartials dd = chart_second_partials(jet.point);
  const double du = jet.du, dv = jet.dv;
  AmbientJet out;
  out.p = chart_map(jet.point);
  out.dp = du * d.du + dv * d.dv;
  out.ddp = (du * du) * dd.uu + (2.0 * du * dv) * dd.uv + (dv * dv) * dd.vv + jet.ddu * d.du +
            jet.ddv * d.dv;
  return out;
}

LorentzVec3 lightlike_rotation(double theta, const LorentzVec3& p) {
  const double h = 0.5 * theta * theta;
  return {(1.0 + h) * p.c0 - h * p.c1 + theta * p.c2,  //
          h * p.c0 + (1.0 - h) * p.c1 + theta * p.c2,  //
          theta * p.c0 - theta * p.c1 + p.c2};
}

double horocycle_distance(double u, double v, double r) {
  if (!(r > 0.0)) {
    throw UsageError("horocycle_distance: r must be positive");
  }
  return u * std::exp(-v / r);
}

std::pair<double, double> chart_normal(const ChartJet2& jet) {
  const double speed = regular_speed(jet);
  const MetricCoeffs m = metric(jet.point);
  const double a = std::sqrt(m.G / m.E);
  return {-jet.dv * a / speed, jet.du / a / speed};
}

std::pair<double, double> chart_gradient(double f_u, double f_v, const ChartPoint& point) {
  const MetricCoeffs m = metric(point);
  return {f_u / m.E, f_v / m.G};
}

double chart_inner(const ChartPoint& point, std::pair<double, double> a,
                   std::pair<double, double> b) {
  const MetricCoeffs m = metric(point);
  return m.E * a.first * b.first + m.F * (a.first * b.second + a.second * b.first) +
         m.G * a.second * b.second;
}

std::pair<double, double> to_horo_coordinates(const LorentzVec3& p, double r,
                                              std::pair<double, double> guess) {
  auto residual_norm = [&](double u, double v) {
    const LorentzVec3 d = phi(u, v, r) - p;
    return std::sqrt(d.c0 * d.c0 + d.c1 * d.c1 + d.c2 * d.c2);
  };
  double u = guess.first, v = guess.second;
  double res = residual_norm(u, v);
  const double scale = std::max(r, std::abs(p.c0));
  for (int it = 0; it < 200; ++it) {
    if (res <= 1e-15 * scale) {
      return {u, v};
    }
    const LorentzVec3 d = phi(u, v, r) - p;
    const ChartPartials t = phi_partials(u, v, r);
    const double step_u = -inner1(d, t.du) / inner1(t.du, t.du);
    const double step_v = -inner1(d, t.dv) / inner1(t.dv, t.dv);
    double alpha = 1.0;
    bool improved = false;
    for (int k = 0; k < 40; ++k) {
      const double nu = u + alpha * step_u, nv = v + alpha * step_v;
      if (std::abs(nu / r) <= kChartLimit && std::abs(nv / r) <= kChartLimit) {
        const double nres = residual_norm(nu, nv);
        if (nres < res) {
          u = nu;
          v = nv;
          res = nres;
          improved = true;
          break;
        }
      }
      alpha *= 0.5;
    }
    if (!improved) {
      break;
    }
  }
  if (res <= 1e-11 * scale) {
    return {u, v};
  }
  throw DomainError("to_horo_coordinates: Gauss-Newton did not converge");
}

ChartJet2 horo_jet_from_ambient(const AmbientJet& jet, double r, std::pair<double, double> guess) {
  const auto [u, v] = to_horo_coordinates(jet.p, r, guess);
  const ChartPartials t = phi_partials(u, v, r);
  const ChartSecondPartials tt = phi_second_partials(u, v, r);
  const double e_coef = inner1(t.du, t.du);
  const double g_coef = inner1(t.dv, t.dv);
  ChartJet2 out;
  out.point = {ChartId::HoroGeodesic, u, v, r};
  out.du = inner1(jet.dp, t.du) / e_coef;
  out.dv = inner1(jet.dp, t.dv) / g_coef;
  const LorentzVec3 tangential = jet.ddp - (out.du * out.du) * tt.uu -
                                 (2.0 * out.du * out.dv) * tt.uv - (out.dv * out.dv) * tt.vv;
  out.ddu = inner1(tangential, t.du) / e_coef;
  out.ddv = inner1(tangential, t.dv) / g_coef;
  return out;
}

}  // namespace hycat

#include "hycat/revolution.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <memory>

#include "hycat/error.hpp"

namespace hycat {

LorentzVec4 rotate(CatenaryType type, const LorentzVec4& p, double theta) {
  switch (type) {
    case CatenaryType::Elliptic: {
      const double c = std::cos(theta), s = std::sin(theta);
      return {p.c0, p.c1, c * p.c2 - s * p.c3, s * p.c2 + c * p.c3};
    }
    case CatenaryType::Hyperbolic: {
      const double c = std::cosh(theta), s = std::sinh(theta);
      return {c * p.c0 + s * p.c3, p.c1, p.c2, s * p.c0 + c * p.c3};
    }
    case CatenaryType::Parabolic: {
      const double h = 0.5 * theta * theta;
      const double d = p.c0 - p.c1;
      return {p.c0 + h * d - theta * p.c3, p.c1 + h * d - theta * p.c3, p.c2,
              -theta * d + p.c3};
    }
  }
  throw UsageError("rotate: unknown type");
}

GeneratingJet generating_jet(const ChartJet2& jet) {
  const AmbientJet a = embed_jet(jet);
  return {a.p, a.dp, a.ddp, jet.point.r};
}

namespace {

struct JetTerms {
  double speed;
  double T;
};

JetTerms jet_terms(const GeneratingJet& j) {
  const double s2 = inner1(j.dp, j.dp);
  if (!(s2 > 0.0)) {
    throw DomainError("generating curve: velocity is not spacelike");
  }
  const auto& [x, y, z] = j.p;
  const auto& [dx, dy, dz] = j.dp;
  const auto& [ddx, ddy, ddz] = j.ddp;
  const double T =
      x * (ddy * dz - dy * ddz) - y * (ddx * dz - dx * ddz) + z * (ddx * dy - dx * ddy);
  return {std::sqrt(s2), T};
}

struct AxisTerms {
  double D;     // vanishes on the rotation axis plane
  double N;
  double sign;  // H = sign [D T + N |g'|^2] / (2 r D |g'|^3)
};

AxisTerms axis_terms(CatenaryType type, const GeneratingJet& j) {
  const auto& [x, y, z] = j.p;
  const auto& [dx, dy, dz] = j.dp;
  AxisTerms a{0.0, 0.0, 1.0};
  switch (type) {
    case CatenaryType::Elliptic:
      a.D = z;
      a.N = x * dy - dx * y;
      break;
    case CatenaryType::Hyperbolic:
      a.D = x;
      a.N = -(y * dz - dy * z);
      break;
    case CatenaryType::Parabolic:
      a.D = x - y;
      a.N = (x - y) * dz - (dx - dy) * z;
      a.sign = -1.0;
      break;
  }
  const double scale = std::max({std::abs(x), std::abs(y), std::abs(z), j.r});
  if (std::abs(a.D) <= 1e-12 * scale) {
    throw DomainError("generating curve touches the rotation axis plane");
  }
  return a;
}

}  // namespace

double mean_curvature_closed(CatenaryType type, const GeneratingJet& jet) {
  const auto [speed, T] = jet_terms(jet);
  const AxisTerms a = axis_terms(type, jet);
  return a.sign * (a.D * T + a.N * speed * speed) / (2.0 * jet.r * a.D * speed * speed * speed);
}

double minimal_kappa_target(CatenaryType type, const GeneratingJet& jet) {
  // kappa_extrinsic = -T / (r |g'|^3), so H = 0 <=> kappa = N / (r D |g'|).
  const double speed = jet_terms(jet).speed;
  const AxisTerms a = axis_terms(type, jet);
  return a.N / (jet.r * a.D * speed);
}

SurfaceSample surface_sample_numeric(CatenaryType type, const GeneratingCurve& curve, double r,
                                     double t, double theta, double h_fd) {
  if (!(h_fd > 0.0)) {
    throw UsageError("mean_curvature_numeric: h_fd must be positive");
  }
  auto S = [&](double tt, double th) { return rotate(type, embed_h2_in_h3(curve(tt)), th); };
  const double h = h_fd;
  const double k = 10.0 * h_fd;

  SurfaceSample out;
  out.S = S(t, theta);
  out.S_t = (1.0 / (2.0 * h)) * (S(t + h, theta) - S(t - h, theta));
  out.S_theta = (1.0 / (2.0 * h)) * (S(t, theta + h) - S(t, theta - h));
  const LorentzVec4 S_tt = (1.0 / (k * k)) * (S(t + k, theta) - 2.0 * out.S + S(t - k, theta));
  const LorentzVec4 S_pp = (1.0 / (k * k)) * (S(t, theta + k) - 2.0 * out.S + S(t, theta - k));
  const LorentzVec4 S_tp = (1.0 / (4.0 * k * k)) * (S(t + k, theta + k) - S(t + k, theta - k) -
                                                    S(t - k, theta + k) + S(t - k, theta - k));

  out.g11 = inner1(out.S_t, out.S_t);
  out.g12 = inner1(out.S_t, out.S_theta);
  out.g22 = inner1(out.S_theta, out.S_theta);
  const double det = out.g11 * out.g22 - out.g12 * out.g12;
  if (!(det > 0.0)) {
    throw DomainError("mean_curvature_numeric: degenerate first fundamental form");
  }
  LorentzVec4 xi = (1.0 / std::sqrt(det)) * cross4(out.S_t, out.S_theta, out.S, r);
  xi *= 1.0 / spacelike_norm(xi);

  out.h11 = inner1(S_tt, xi);
  out.h12 = inner1(S_tp, xi);
  out.h22 = inner1(S_pp, xi);
  out.H = (out.g22 * out.h11 - 2.0 * out.g12 * out.h12 + out.g11 * out.h22) / (2.0 * det);
  return out;
}

double mean_curvature_numeric(CatenaryType type, const GeneratingCurve& curve, double r, double t,
                              double theta, double h_fd) {
  return surface_sample_numeric(type, curve, r, t, theta, h_fd).H;
}

GeneratingCurve interpolate_generating_curve(const Curve& curve) {
  if (curve.samples.size() < 2) {
    throw UsageError("interpolate_generating_curve: need at least two samples");
  }
  auto samples = std::make_shared<const std::vector<CurveSample>>(curve.samples);
  const ChartId chart = curve.chart;
  const double r = curve.r;
  return [samples, chart, r](double s) {
    const auto& smp = *samples;
    auto it = std::upper_bound(smp.begin(), smp.end(), s,
                               [](double x, const CurveSample& c) { return x < c.s; });
    std::size_t i1 = static_cast<std::size_t>(it - smp.begin());
    i1 = std::clamp<std::size_t>(i1, 1, smp.size() - 1);
    const CurveSample& a = smp[i1 - 1];
    const CurveSample& b = smp[i1];
    const double h = b.s - a.s;
    const double t = (s - a.s) / h;
    const double t2 = t * t, t3 = t2 * t, t4 = t3 * t, t5 = t4 * t;
    const double H0 = 1.0 - 10.0 * t3 + 15.0 * t4 - 6.0 * t5;
    const double H1 = t - 6.0 * t3 + 8.0 * t4 - 3.0 * t5;
    const double H2 = 0.5 * t2 - 1.5 * t3 + 1.5 * t4 - 0.5 * t5;
    const double H3 = 0.5 * t3 - t4 + 0.5 * t5;
    const double H4 = -4.0 * t3 + 7.0 * t4 - 3.0 * t5;
    const double H5 = 10.0 * t3 - 15.0 * t4 + 6.0 * t5;
    const double u = H0 * a.u + h * H1 * a.du + h * h * H2 * a.ddu + h * h * H3 * b.ddu +
                     h * H4 * b.du + H5 * b.u;
    const double v = H0 * a.v + h * H1 * a.dv + h * h * H2 * a.ddv + h * h * H3 * b.ddv +
                     h * H4 * b.dv + H5 * b.v;
    return chart_map({chart, u, v, r});
  };
}

Mesh build_mesh(CatenaryType type, const Curve& curve, double theta_min, double theta_max,
                std::size_t n_theta, std::size_t n_rows, Backend backend) {
  if (curve.samples.empty()) {
    throw UsageError("build_mesh: empty curve");
  }
  if (n_theta < 2) {
    throw UsageError("build_mesh: n_theta must be at least 2");
  }
  if (!(theta_max > theta_min)) {
    throw UsageError("build_mesh: theta_max must exceed theta_min");
  }
  const std::size_t n = curve.samples.size();
  if (n_rows == 0 || n_rows > n) {
    n_rows = n;
  }
  if (n_rows < 2 && n > 1) {
    throw UsageError("build_mesh: need at least two rows");
  }

  Mesh mesh;
  mesh.rows = n_rows;
  mesh.cols = n_theta;
  std::vector<std::size_t> idx(n_rows);
  for (std::size_t k = 0; k < n_rows; ++k) {
    idx[k] = n_rows == 1 ? 0
                         : static_cast<std::size_t>(std::llround(
                               static_cast<double>(k) * static_cast<double>(n - 1) /
                               static_cast<double>(n_rows - 1)));
  }
  mesh.thetas.resize(n_theta);
  for (std::size_t j = 0; j < n_theta; ++j) {
    mesh.thetas[j] = theta_min + (theta_max - theta_min) * static_cast<double>(j) /
                                     static_cast<double>(n_theta - 1);
  }

  std::vector<LorentzVec3> points(n_rows);
  std::vector<double> row_H(n_rows);
  mesh.ts.resize(n_rows);
  for (std::size_t k = 0; k < n_rows; ++k) {
    const ChartJet2 jet = curve.jet(idx[k]);
    points[k] = chart_map(jet.point);
    row_H[k] = mean_curvature_closed(type, generating_jet(jet));
    mesh.ts[k] = curve.samples[idx[k]].s;
  }

  mesh.vertices.resize(n_rows * n_theta);
  revolve_grid(backend, type, points, mesh.thetas, mesh.vertices);
  mesh.H.resize(n_rows * n_theta);
  for (std::size_t k = 0; k < n_rows; ++k) {
    std::fill_n(mesh.H.begin() + static_cast<std::ptrdiff_t>(k * n_theta), n_theta, row_H[k]);
  }
  return mesh;
}

}  // namespace hycat

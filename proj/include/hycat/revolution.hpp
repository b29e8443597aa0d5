#pragma once

// Surfaces of revolution in H^3(r) generated by curves of H^2(r) x {0}.
//
//   Elliptic    E_theta rotates the (z,w) plane, fixing span[e_x, e_y].
//   Hyperbolic  H_theta boosts the (x,w) plane, fixing span[e_y, e_z].
//   Parabolic   P_theta = I + theta A + theta^2/2 A^2, fixing span[e_x + e_y, e_z].

#include <cstddef>
#include <functional>
#include <vector>

#include "hycat/catenary.hpp"
#include "hycat/charts.hpp"
#include "hycat/kernels.hpp"
#include "hycat/lorentz.hpp"

namespace hycat {

LorentzVec4 rotate(CatenaryType type, const LorentzVec4& p, double theta);

/// Generating curve (x,y,z) with its first and second derivatives.
struct GeneratingJet {
  LorentzVec3 p;
  LorentzVec3 dp;
  LorentzVec3 ddp;
  double r{1.0};
};

GeneratingJet generating_jet(const ChartJet2& jet);

struct SurfaceSample {
  LorentzVec4 S;
  LorentzVec4 S_t;
  LorentzVec4 S_theta;
  double g11{0.0};
  double g12{0.0};
  double g22{0.0};
  double h11{0.0};
  double h12{0.0};
  double h22{0.0};
  double H{0.0};
};

/// Closed-form mean curvature of the rotated surface along the orbit of jet.p.
/// DomainError when the curve touches the rotation axis plane (z, x or x - y
/// vanishes) or the velocity is not spacelike.
double mean_curvature_closed(CatenaryType type, const GeneratingJet& jet);

/// Curvature a generating curve needs for the rotated surface to be minimal,
/// i.e. the kappa_extrinsic that zeroes mean_curvature_closed:
///   elliptic    (x y' - x' y) / (r z |g'|)
///   hyperbolic  -(y z' - y' z) / (r x |g'|)
///   parabolic   ((x - y) z' - (x' - y') z) / (r (x - y) |g'|)
double minimal_kappa_target(CatenaryType type, const GeneratingJet& jet);

using GeneratingCurve = std::function<LorentzVec3(double)>;

/// First and second fundamental forms of S(t,theta) = rotate(gamma(t), theta)
/// by centred differences: step h_fd for first derivatives, 10 h_fd for
/// second derivatives. The unit normal is cross4(S_t, S_theta, S) / sqrt(det g).
SurfaceSample surface_sample_numeric(CatenaryType type, const GeneratingCurve& curve, double r,
                                     double t, double theta, double h_fd);

double mean_curvature_numeric(CatenaryType type, const GeneratingCurve& curve, double r, double t,
                              double theta, double h_fd);

/// C^2 generating curve through the samples of `curve`, quintic Hermite in the
/// chart coordinates (matches u, v, u', v', u'', v'' at every sample).
GeneratingCurve interpolate_generating_curve(const Curve& curve);

struct Mesh {
  std::size_t rows{0};
  std::size_t cols{0};
  std::vector<LorentzVec4> vertices;  // row-major, rows = curve samples
  std::vector<double> H;              // per vertex
  std::vector<double> thetas;
  std::vector<double> ts;
};

/// Rotates the curve over the inclusive grid theta_min..theta_max with n_theta
/// columns. n_rows = 0 keeps every sample; otherwise n_rows samples are picked
/// evenly by index.
Mesh build_mesh(CatenaryType type, const Curve& curve, double theta_min, double theta_max,
                std::size_t n_theta, std::size_t n_rows = 0, Backend backend = Backend::OpenMP);

}  // namespace hycat

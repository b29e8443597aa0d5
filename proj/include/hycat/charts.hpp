#pragma once

// Coordinate charts of H^2(r) inside E^3_1.
//
// SemiGeodesic: psi(u,v) = r(cosh(u/r)cosh(v/r), cosh(u/r)sinh(v/r), sinh(u/r)),
//               metric du^2 + cosh^2(u/r) dv^2.
// HoroGeodesic: phi(u,v) = L_{u/r}(l(v)), metric e^{-2v/r} du^2 + dv^2.
//
// Both charts agree at (0,0) with the same orientation, so curvature signs are
// comparable between them and with the extrinsic formula.

#include <utility>

#include "hycat/lorentz.hpp"

namespace hycat {

enum class ChartId { SemiGeodesic, HoroGeodesic };

struct ChartPoint {
  ChartId chart{ChartId::SemiGeodesic};
  double u{0.0};
  double v{0.0};
  double r{1.0};
};

/// 2-jet of a curve in chart coordinates, derivatives w.r.t. the curve parameter.
struct ChartJet2 {
  ChartPoint point;
  double du{0.0};
  double dv{0.0};
  double ddu{0.0};
  double ddv{0.0};
};

struct MetricCoeffs {
  double E{1.0};
  double F{0.0};
  double G{1.0};
};

/// Gkij = Γ^k_ij; symmetric in the lower pair.
struct ChristoffelSet {
  double G111{0.0};
  double G112{0.0};
  double G122{0.0};
  double G211{0.0};
  double G212{0.0};
  double G222{0.0};
};

struct ChartPartials {
  LorentzVec3 du;
  LorentzVec3 dv;
};

struct ChartSecondPartials {
  LorentzVec3 uu;
  LorentzVec3 uv;
  LorentzVec3 vv;
};

/// Position, velocity and acceleration of a curve in E^3_1.
struct AmbientJet {
  LorentzVec3 p;
  LorentzVec3 dp;
  LorentzVec3 ddp;
};

/// |u/r| and |v/r| above this raise DomainError in every chart operation.
inline constexpr double kChartLimit = 25.0;

/// Throws UsageError for r <= 0 and DomainError outside the chart limits.
void check_chart_domain(double u, double v, double r);

LorentzVec3 psi(double u, double v, double r);
ChartPartials psi_partials(double u, double v, double r);
ChartSecondPartials psi_second_partials(double u, double v, double r);

LorentzVec3 phi(double u, double v, double r);
ChartPartials phi_partials(double u, double v, double r);
ChartSecondPartials phi_second_partials(double u, double v, double r);

/// Chart map and partials dispatched on point.chart.
LorentzVec3 chart_map(const ChartPoint& point);
ChartPartials chart_partials(const ChartPoint& point);
ChartSecondPartials chart_second_partials(const ChartPoint& point);

MetricCoeffs metric(const ChartPoint& point);
ChristoffelSet christoffel(const ChartPoint& point);

/// Squared speed E du^2 + 2F du dv + G dv^2.
double speed_squared(const ChartJet2& jet);

/// Geodesic curvature in the semi-geodesic chart, from the general Christoffel
/// expression (includes the u''v' - u'v'' term).
double kappa_semigeo(const ChartJet2& jet);

/// Geodesic curvature in the horo-geodesic chart:
///   [u''v' - u'(v'' + (u'^2/r)e^{-2v/r} + 2v'^2/r)] / [e^{v/r}(e^{-2v/r}u'^2 + v'^2)^{3/2}].
double kappa_horo(const ChartJet2& jet);

/// Dispatches on jet.point.chart.
double kappa_chart(const ChartJet2& jet);

/// kappa = <p x dp, ddp>_1 / (r |dp|^3). DomainError if dp is not spacelike.
double kappa_extrinsic(const LorentzVec3& p, const LorentzVec3& dp, const LorentzVec3& ddp,
                       double r);
double kappa_extrinsic(const AmbientJet& jet, double r);

/// Chain rule: ambient position, velocity and acceleration of a chart jet.
AmbientJet embed_jet(const ChartJet2& jet);

/// Lightlike rotation L_theta with axis (1,1,0). phi(u,v) = L_{u/r}(l(v)).
LorentzVec3 lightlike_rotation(double theta, const LorentzVec3& p);

/// Length of the horocycle arc from l to phi(u,v): u e^{-v/r}.
double horocycle_distance(double u, double v, double r);

/// Unit normal (n_u, n_v) in chart components,
///   n = (-v' sqrt(G/E) d_u + u' sqrt(E/G) d_v) / |gamma'|,
/// which for the semi-geodesic chart is (-v' cosh(u/r), u'/cosh(u/r)) / |gamma'|.
/// The signed curvature is measured against -n.
std::pair<double, double> chart_normal(const ChartJet2& jet);

/// Raise the differential (f_u, f_v) with the inverse chart metric.
std::pair<double, double> chart_gradient(double f_u, double f_v, const ChartPoint& point);

/// Chart-metric inner product of two chart vectors at a point.
double chart_inner(const ChartPoint& point, std::pair<double, double> a, std::pair<double, double> b);

/// Solve phi(u,v) = p for horo-geodesic coordinates by Gauss-Newton on the
/// ambient residual. Throws DomainError if it fails to converge.
std::pair<double, double> to_horo_coordinates(const LorentzVec3& p, double r,
                                              std::pair<double, double> guess = {0.0, 0.0});

/// Re-express an ambient 2-jet in the horo-geodesic chart.
ChartJet2 horo_jet_from_ambient(const AmbientJet& jet, double r,
                                std::pair<double, double> guess = {0.0, 0.0});

}  // namespace hycat

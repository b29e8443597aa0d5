#pragma once

// Extrinsic catenaries of H^2(r): critical curves of int (f + lambda) ds with
// f the (normalized) ambient distance to a reference plane of E^4_1.
//
//   Elliptic    f = sinh(u/r)                 plane [e_x, e_y]
//   Hyperbolic  f = cosh(u/r) cosh(v/r)       plane [e_y, e_z]
//   Parabolic   f = e^{-v/r} cosh(u/r)        plane [e_x + e_y, e_z]
//
// All curve quantities live in the semi-geodesic chart unless noted.

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hycat/charts.hpp"
#include "hycat/lorentz.hpp"

namespace hycat {

enum class CatenaryType { Elliptic, Hyperbolic, Parabolic };

std::string_view to_string(CatenaryType type);
/// Accepts "elliptic", "hyperbolic", "parabolic"; UsageError otherwise.
CatenaryType parse_catenary_type(std::string_view name);

PlaneType reference_plane(CatenaryType type);

struct WeightJet {
  double f{0.0};
  double f_u{0.0};
  double f_v{0.0};
};

/// Normalized weight and its chart partials (no lambda).
WeightJet weight_jet(CatenaryType type, double u, double v, double r);

/// f(u,v) + lambda; DomainError if the total weight is not positive.
double weight(CatenaryType type, double u, double v, double r, double lambda);

/// Prescribed curvature [v' f_u cosh(u/r) - u' f_v / cosh(u/r)] / ((f + lambda)|gamma'|).
double catenary_kappa(CatenaryType type, double u, double v, double du, double dv, double r,
                      double lambda);

struct InitialCondition {
  double u0{1.0};
  double v0{0.0};
  double theta0{0.0};  // metric angle from d_u
};

struct OdeState {
  double s{0.0};
  double u{0.0};
  double v{0.0};
  double du{0.0};
  double dv{0.0};
};

struct CurveSample {
  double s{0.0};
  double u{0.0};
  double v{0.0};
  double du{0.0};
  double dv{0.0};
  double ddu{0.0};
  double ddv{0.0};
};

enum class IntegrationStatus { Completed, HitReferencePlane, ChartLimit };

std::string_view to_string(IntegrationStatus status);

struct Curve {
  std::optional<CatenaryType> type;
  ChartId chart{ChartId::SemiGeodesic};
  double r{1.0};
  double lambda{0.0};
  std::vector<CurveSample> samples;
  std::vector<LorentzVec3> embedded;
  IntegrationStatus status{IntegrationStatus::Completed};

  [[nodiscard]] ChartJet2 jet(std::size_t i) const;
};

/// Weight below kWeightFloor * r halts integration with HitReferencePlane.
inline constexpr double kWeightFloor = 1e-8;

/// Acceleration (u'', v'') of the unit-speed prescribed-curvature system
///   gamma''^k + Γ^k_ij gamma'^i gamma'^j = kappa nu^k,
/// with nu = (v' cosh(u/r), -u'/cosh(u/r)) / |gamma'| the normal that the
/// signed curvature is measured against.
std::pair<double, double> catenary_acceleration(CatenaryType type, double u, double v, double du,
                                                double dv, double r, double lambda);

/// Fixed-step classical RK4 from (u0, v0) with heading theta0, renormalizing
/// the velocity to unit speed after every step. Samples are spaced `step`
/// apart (the last one may be shorter so that it lands on s_max). Stops early,
/// with a status, when the weight drops below kWeightFloor or the chart limit
/// would be crossed.
Curve integrate(CatenaryType type, const InitialCondition& ic, double r, double lambda,
                double s_max, double step);

/// (1/2) sinh(2u/r) cos(theta), theta measured from the v-coordinate curve.
double clairaut(double u, double theta, double r);

/// clairaut() evaluated from a unit-speed sample, cos(theta) = v' cosh(u/r).
double clairaut_of_sample(double u, double dv, double r);

/// Constant Killing fields of E^3_1 whose tangent parts are the gradients of the
/// plane distances: e_z, -e_x, -(e_x + e_y)/(r sqrt2).
LorentzVec3 killing_field(CatenaryType type, const LorentzVec3& p, double r);

/// X + <X,p>_1 p / r^2.
LorentzVec3 tangent_part(const LorentzVec3& X, const LorentzVec3& p, double r);

/// The potential whose H^2 gradient is tangent_part(killing_field): r f for
/// elliptic/hyperbolic, f/sqrt2 for parabolic, plus the same scale times lambda.
double killing_potential(CatenaryType type, double u, double v, double r, double lambda);

/// kappa_extrinsic + <n, X>_1 / potential, zero exactly on catenaries.
/// n is the embedded unit normal from chart_normal.
double killing_residual(CatenaryType type, const ChartJet2& jet, double lambda = 0.0);

/// Smooth compactly supported chart perturbation
///   b(s) = (amp_u, amp_v) (1 - x^2)^4,  x = (s - center) / half_width.
struct Bump {
  double center{0.0};
  double half_width{1.0};
  double amp_u{0.0};
  double amp_v{0.0};

  [[nodiscard]] double profile(double s) const;
  [[nodiscard]] double profile_derivative(double s) const;
};

/// W[gamma] = int (f + lambda) |gamma'| ds by composite Simpson over the
/// curve samples, with the curve perturbed by eps*bump. A shorter last step
/// is handled by the quadratic through the last three samples.
double weighted_length(const Curve& curve, const Bump& bump, double eps);

/// W[gamma + eps bump] - W[gamma].
double el_first_variation(const Curve& curve, const Bump& bump, double eps);

/// Least-squares slope of log|dW| against log eps.
double first_variation_slope(const Curve& curve, const Bump& bump, std::span<const double> eps);

/// Horocatenary law in the horo-geodesic chart with f = u e^{-v/r}:
///   -<n, grad f>/f = e^{v/r} [v' + (u u'/r) e^{-2v/r}] / (u |gamma'|).
double horocatenary_kappa(double u, double v, double du, double dv, double r);

}  // namespace hycat

#pragma once

// Seeded random smooth chart curves with exact derivatives, for property
// checks of the curvature and mean-curvature formulas.

#include <array>
#include <cstdint>
#include <random>

#include "hycat/charts.hpp"

namespace hycat {

/// x(t) = x0 + drift t + sum_k a_k cos(k t) + b_k sin(k t), for x in {u, v}.
struct TrigCurve {
  static constexpr int kModes = 3;

  ChartId chart{ChartId::SemiGeodesic};
  double r{1.0};
  double u0{0.0}, v0{0.0};
  double u_drift{0.0}, v_drift{0.0};
  std::array<double, kModes> ua{}, ub{}, va{}, vb{};

  [[nodiscard]] ChartJet2 jet(double t) const;
  [[nodiscard]] LorentzVec3 point(double t) const;
};

/// Uniform in [0,1) from the top 53 bits, identical on every platform.
double uniform01(std::mt19937_64& rng);

/// Random curve over t in [0, 1]. u0 is drawn from [u_lo, u_hi]; the drift
/// dominates the oscillating part so the curve is regular, and u stays within
/// u0 +- 0.5.
TrigCurve random_trig_curve(std::mt19937_64& rng, ChartId chart, double r, double u_lo,
                            double u_hi);

}  // namespace hycat

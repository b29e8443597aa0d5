#include "hycat/sample_curves.hpp"

#include <cmath>

namespace hycat {

ChartJet2 TrigCurve::jet(double t) const {
  ChartJet2 j;
  double u = u0 + u_drift * t, v = v0 + v_drift * t;
  double du = u_drift, dv = v_drift, ddu = 0.0, ddv = 0.0;
  for (int m = 0; m < kModes; ++m) {
    const double k = m + 1;
    const double c = std::cos(k * t), s = std::sin(k * t);
    u += ua[m] * c + ub[m] * s;
    v += va[m] * c + vb[m] * s;
    du += k * (-ua[m] * s + ub[m] * c);
    dv += k * (-va[m] * s + vb[m] * c);
    ddu -= k * k * (ua[m] * c + ub[m] * s);
    ddv -= k * k * (va[m] * c + vb[m] * s);
  }
  j.point = {chart, u, v, r};
  j.du = du;
  j.dv = dv;
  j.ddu = ddu;
  j.ddv = ddv;
  return j;
}

LorentzVec3 TrigCurve::point(double t) const { return chart_map(jet(t).point); }

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

TrigCurve random_trig_curve(std::mt19937_64& rng, ChartId chart, double r, double u_lo,
                            double u_hi) {
  auto in = [&](double lo, double hi) { return lo + (hi - lo) * uniform01(rng); };
  TrigCurve c;
  c.chart = chart;
  c.r = r;
  c.u0 = in(u_lo, u_hi);
  c.v0 = in(-0.5, 0.5) * r;
  // Unit-ish drift in a random direction; modes with |a_k|, |b_k| <= 0.04 r / k^2
  // perturb the velocity by at most 0.04 r (1 + 1/2 + 1/3) * 2 < 0.25 r.
  const double phi = in(0.0, 2.0 * std::acos(-1.0));
  c.u_drift = 0.25 * r * std::cos(phi);
  c.v_drift = 0.8 * std::sin(phi) + (std::sin(phi) >= 0.0 ? 0.4 : -0.4);
  for (int m = 0; m < TrigCurve::kModes; ++m) {
    const double k = m + 1;
    const double amp = 0.04 * r / (k * k);
    c.ua[m] = in(-amp, amp);
    c.ub[m] = in(-amp, amp);
    c.va[m] = in(-amp, amp);
    c.vb[m] = in(-amp, amp);
  }
  return c;
}

}  // namespace hycat

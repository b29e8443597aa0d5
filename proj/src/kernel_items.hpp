#pragma once

// Per-item bodies shared by the serial and OpenMP kernel loops.

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>

#include "hycat/catenary.hpp"
#include "hycat/error.hpp"
#include "hycat/kernels.hpp"
#include "hycat/revolution.hpp"

namespace hycat::detail {

inline void revolve_row(CatenaryType type, const LorentzVec3& point,
                        std::span<const double> thetas, LorentzVec4* row) {
  const LorentzVec4 p = embed_h2_in_h3(point);
  for (std::size_t j = 0; j < thetas.size(); ++j) {
    row[j] = rotate(type, p, thetas[j]);
  }
}

inline SegmentTerms segment_terms(CatenaryType type, double r, double lambda, const ChainNode& a,
                                  const ChainNode& b) {
  const double mu = 0.5 * (a.u + b.u), mv = 0.5 * (a.v + b.v);
  const double du = b.u - a.u, dv = b.v - a.v;
  const WeightJet wj = weight_jet(type, mu, mv, r);
  const double w = wj.f + lambda;
  if (!(w > 0.0)) {
    throw DomainError("chain: nonpositive weight at a segment midpoint");
  }
  const double C = std::cosh(mu / r), S = std::sinh(mu / r);
  const double len = std::sqrt(du * du + C * C * dv * dv);
  if (!(len > 0.0)) {
    throw DomainError("chain: repeated nodes");
  }
  const double l_du = du / len;
  const double l_dv = C * C * dv / len;
  const double l_mu = C * S * dv * dv / (r * len);

  SegmentTerms t;
  t.length = len;
  t.energy = w * len;
  t.d_length[0] = -l_du + 0.5 * l_mu;
  t.d_length[1] = -l_dv;
  t.d_length[2] = l_du + 0.5 * l_mu;
  t.d_length[3] = l_dv;
  t.d_energy[0] = w * t.d_length[0] + 0.5 * len * wj.f_u;
  t.d_energy[1] = w * t.d_length[1] + 0.5 * len * wj.f_v;
  t.d_energy[2] = w * t.d_length[2] + 0.5 * len * wj.f_u;
  t.d_energy[3] = w * t.d_length[3] + 0.5 * len * wj.f_v;
  return t;
}

inline SampleDiagnostics sample_diagnostics(const Curve& curve, std::size_t i) {
  const ChartJet2 jet = curve.jet(i);
  const double r = curve.r;
  SampleDiagnostics d;
  d.kappa = kappa_chart(jet);
  d.speed_error = std::abs(std::sqrt(speed_squared(jet)) - 1.0);
  const LorentzVec3 p = i < curve.embedded.size() ? curve.embedded[i] : chart_map(jet.point);
  d.hyperboloid_error = std::abs(inner1(p, p) + r * r);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  d.clairaut = curve.chart == ChartId::SemiGeodesic ? clairaut_of_sample(jet.point.u, jet.dv, r)
                                                     : nan;
  if (curve.type && curve.chart == ChartId::SemiGeodesic) {
    d.kappa_target = catenary_kappa(*curve.type, jet.point.u, jet.point.v, jet.du, jet.dv, r,
                                    curve.lambda);
  } else {
    d.kappa_target = nan;
  }
  d.killing_residual = curve.type ? killing_residual(*curve.type, jet, curve.lambda) : nan;
  return d;
}

void revolve_grid_omp(CatenaryType type, std::span<const LorentzVec3> points,
                      std::span<const double> thetas, std::span<LorentzVec4> out);
void chain_segment_terms_omp(CatenaryType type, double r, double lambda,
                             std::span<const ChainNode> nodes, std::span<SegmentTerms> out);
void curve_diagnostics_omp(const Curve& curve, std::span<SampleDiagnostics> out);

}  // namespace hycat::detail

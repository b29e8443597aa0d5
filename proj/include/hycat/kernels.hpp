#pragma once

// Data-parallel kernels with a serial reference and an OpenMP version.
// Every kernel is a pure per-item map, so both backends produce identical
// bits; any reduction is done afterwards, serially, by the caller.

#include <span>
#include <string_view>

#include "hycat/catenary.hpp"
#include "hycat/lorentz.hpp"

namespace hycat {

enum class Backend { Serial, OpenMP };

std::string_view to_string(Backend backend);

/// out[i * thetas.size() + j] = rotate(type, embed_h2_in_h3(points[i]), thetas[j]).
void revolve_grid(Backend backend, CatenaryType type, std::span<const LorentzVec3> points,
                  std::span<const double> thetas, std::span<LorentzVec4> out);

struct ChainNode {
  double u{0.0};
  double v{0.0};
};

/// Midpoint-rule length and energy of one chain segment and their partials
/// with respect to (u0, v0, u1, v1), the segment's two end nodes.
struct SegmentTerms {
  double length{0.0};
  double energy{0.0};
  double d_length[4]{};
  double d_energy[4]{};
};

/// out[i] describes the segment nodes[i] -> nodes[i + 1]. Semi-geodesic chart.
void chain_segment_terms(Backend backend, CatenaryType type, double r, double lambda,
                         std::span<const ChainNode> nodes, std::span<SegmentTerms> out);

struct SampleDiagnostics {
  double kappa{0.0};         // realized, kappa_semigeo
  double kappa_target{0.0};  // catenary_kappa
  double clairaut{0.0};
  double killing_residual{0.0};
  double speed_error{0.0};       // | |gamma'| - 1 |
  double hyperboloid_error{0.0};  // |<p,p>_1 + r^2|
};

/// Per-sample diagnostics of an integrated catenary.
void curve_diagnostics(Backend backend, const Curve& curve, std::span<SampleDiagnostics> out);

}  // namespace hycat

#pragma once

// Direct minimization of the hanging-chain energy sum_i (f(mid_i) + lambda) len_i
// over polylines in the semi-geodesic chart with fixed endpoints and fixed
// total length. Every link is held at length target_length / N, so the length
// constraint is N scalar equations with a tridiagonal Gram matrix.

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "hycat/catenary.hpp"
#include "hycat/kernels.hpp"

namespace hycat {

struct DiscreteChain {
  CatenaryType type{CatenaryType::Elliptic};
  double r{1.0};
  std::vector<ChainNode> nodes;  // N + 1 nodes; first and last are fixed
  double target_length{0.0};

  [[nodiscard]] std::size_t segments() const { return nodes.empty() ? 0 : nodes.size() - 1; }
};

enum class RelaxStatus { Converged, MaxIter, Infeasible };

std::string_view to_string(RelaxStatus status);

struct RelaxOptions {
  std::size_t max_iter{200000};
  double step_size{1e-2};  // initial step, in units of r
  double grad_tol{1e-8};
  Backend backend{Backend::Serial};
};

struct RelaxReport {
  std::size_t iterations{0};
  double final_energy{0.0};
  double grad_norm{0.0};
  double max_kappa_residual{0.0};
  double lambda{0.0};  // fitted multiplier
  bool taut{false};    // target length equals the endpoint distance
  RelaxStatus status{RelaxStatus::MaxIter};
};

/// Sum of chart-metric segment lengths, metric evaluated at segment midpoints.
double chain_length(const DiscreteChain& chain);

/// Midpoint-rule energy. DomainError on a nonpositive midpoint weight.
double chain_energy(const DiscreteChain& chain, double lambda);

/// Intrinsic distance between the two endpoints.
double endpoint_distance(const DiscreteChain& chain);

/// Chart-linear interpolation bulged by a sine arch along the chord normal,
/// on the side where the weight decreases, with the amplitude chosen so that
/// the equal-arc-length resampled chain has the target length. The result is
/// then projected onto equal link lengths. A target equal to the endpoint
/// distance gives the discrete geodesic. DomainError if the target is shorter
/// than the endpoint distance or no admissible bulge exists.
DiscreteChain make_initial_chain(CatenaryType type, double r, ChainNode a, ChainNode b,
                                 double target_length, std::size_t n_segments);

/// Projected gradient descent with Barzilai-Borwein steps and monotone
/// backtracking, Newton restoration onto the link-length constraints after
/// every step. A target length equal to the endpoint distance (relative
/// 1e-9) returns the discrete geodesic flagged as taut; a shorter one is
/// Infeasible.
std::pair<DiscreteChain, RelaxReport> relax(const DiscreteChain& chain0, const RelaxOptions& opts);

/// Least-squares multiplier for the catenary law kappa (f + lambda) = A over
/// the interior nodes, kappa and A from three-point jets.
double fit_multiplier(const DiscreteChain& chain);

/// kappa_semigeo - catenary_kappa at interior node i (1 <= i <= N-1), from a
/// non-uniform three-point arc-length stencil.
double discrete_kappa_residual(const DiscreteChain& chain, std::size_t i, double lambda);

/// Three-point arc-length 2-jet at interior node i.
ChartJet2 discrete_jet(const DiscreteChain& chain, std::size_t i);

}  // namespace hycat

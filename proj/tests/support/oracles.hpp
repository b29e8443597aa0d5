#pragma once

// Test-only reference computations, written against plain arrays or built
// from different constructions than the library code they check.

#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "hycat/catenary.hpp"
#include "hycat/relaxer.hpp"

namespace oracle {

using Vec3 = std::array<double, 3>;

double minkowski(const Vec3& a, const Vec3& b);

/// Geodesic curvature of t -> p(t) on H^2(r) from centred differences of the
/// ambient positions: <p'', n>_1 / |p'|^2 with n the unit tangent normal
/// orthogonal to p and p' (orientation fixed by det[p, p', n] > 0).
double fd_geodesic_curvature(const std::function<Vec3(double)>& p, double t, double r,
                             double h = 1e-4);

/// Point of the horo-geodesic chart built as the lightlike rotation of the
/// reference geodesic point, independent of hycat::phi.
Vec3 horo_point_by_rotation(double u, double v, double r);

struct ShootingResult {
  double theta0{0.0};
  double lambda{0.0};
  double miss{0.0};  // chart distance from the target after convergence
  int iterations{0};
};

/// Catenary from a with length L that ends at b: Newton on (theta0, lambda)
/// over hycat::integrate, seeded by a coarse grid scan.
ShootingResult shoot(hycat::CatenaryType type, double r, hycat::ChainNode a, hycat::ChainNode b,
                     double L, double step);

/// max_i d_H(node_i, gamma(i L / N)) for the ODE catenary gamma from shooting.
double chain_gap(const hycat::DiscreteChain& chain, const ShootingResult& shot, double step_per_link);

/// Runs a shell command, returns its exit status (-1 if it did not exit).
int run(const std::string& command);

std::string slurp(const std::string& path);

}  // namespace oracle

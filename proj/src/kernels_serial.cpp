// Serial reference loops and backend dispatch.

#include <string>

#include "hycat/error.hpp"
#include "hycat/kernels.hpp"
#include "kernel_items.hpp"

namespace hycat {

std::string_view to_string(Backend backend) {
  return backend == Backend::Serial ? "serial" : "openmp";
}

void revolve_grid(Backend backend, CatenaryType type, std::span<const LorentzVec3> points,
                  std::span<const double> thetas, std::span<LorentzVec4> out) {
  if (out.size() != points.size() * thetas.size()) {
    throw UsageError("revolve_grid: output size must be points * thetas");
  }
  if (backend == Backend::OpenMP) {
    detail::revolve_grid_omp(type, points, thetas, out);
    return;
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    detail::revolve_row(type, points[i], thetas, out.data() + i * thetas.size());
  }
}

void chain_segment_terms(Backend backend, CatenaryType type, double r, double lambda,
                         std::span<const ChainNode> nodes, std::span<SegmentTerms> out) {
  if (nodes.size() < 2 || out.size() != nodes.size() - 1) {
    throw UsageError("chain_segment_terms: need one output per segment");
  }
  if (backend == Backend::OpenMP) {
    detail::chain_segment_terms_omp(type, r, lambda, nodes, out);
    return;
  }
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    out[i] = detail::segment_terms(type, r, lambda, nodes[i], nodes[i + 1]);
  }
}

void curve_diagnostics(Backend backend, const Curve& curve, std::span<SampleDiagnostics> out) {
  if (out.size() != curve.samples.size()) {
    throw UsageError("curve_diagnostics: need one output per sample");
  }
  if (backend == Backend::OpenMP) {
    detail::curve_diagnostics_omp(curve, out);
    return;
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = detail::sample_diagnostics(curve, i);
  }
}

}  // namespace hycat

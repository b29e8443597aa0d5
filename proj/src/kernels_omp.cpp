// OpenMP loops. Exceptions cannot leave a parallel region, so the one thrown
// by the lowest index is kept and rethrown afterwards, which matches what the
// serial loop would have thrown.

#include <omp.h>

#include <cstdint>
#include <exception>
#include <limits>

#include "kernel_items.hpp"

namespace hycat::detail {

namespace {

template <class Body>
void parallel_for(std::size_t n, Body&& body) {
  std::exception_ptr error;
  std::int64_t error_index = std::numeric_limits<std::int64_t>::max();
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(hycat_kernel_error)
      {
        if (i < error_index) {
          error_index = i;
          error = std::current_exception();
        }
      }
    }
  }
  if (error) {
    std::rethrow_exception(error);
  }
}

}  // namespace

void revolve_grid_omp(CatenaryType type, std::span<const LorentzVec3> points,
                      std::span<const double> thetas, std::span<LorentzVec4> out) {
  parallel_for(points.size(), [&](std::size_t i) {
    revolve_row(type, points[i], thetas, out.data() + i * thetas.size());
  });
}

void chain_segment_terms_omp(CatenaryType type, double r, double lambda,
                             std::span<const ChainNode> nodes, std::span<SegmentTerms> out) {
  parallel_for(out.size(), [&](std::size_t i) {
    out[i] = segment_terms(type, r, lambda, nodes[i], nodes[i + 1]);
  });
}

void curve_diagnostics_omp(const Curve& curve, std::span<SampleDiagnostics> out) {
  parallel_for(out.size(), [&](std::size_t i) { out[i] = sample_diagnostics(curve, i); });
}

}  // namespace hycat::detail

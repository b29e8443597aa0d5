#pragma once

// Plain-text serialization. Numbers are written with 17 significant digits
// through std::to_chars, so output is locale independent and round-trips.

#include <array>
#include <fstream>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hycat/catenary.hpp"
#include "hycat/kernels.hpp"
#include "hycat/relaxer.hpp"
#include "hycat/revolution.hpp"

namespace hycat {

enum class ProjectionMode { Ambient, PoincareBall };

ProjectionMode parse_projection(std::string_view name);

/// Ambient: (x1, x2, x3). PoincareBall: r (x1, x2, x3) / (r + x0).
std::array<double, 3> project_vertex(const LorentzVec4& p, double r, ProjectionMode mode);

std::string format_double(double x);

inline constexpr std::string_view kCurveCsvHeader =
    "s,u,v,du,dv,x,y,z,kappa,clairaut,killing_residual";

void write_curve_csv(std::ostream& os, const Curve& curve,
                     const std::vector<SampleDiagnostics>& diagnostics);

/// Reads a curve CSV with kCurveCsvHeader. The 2-jet is rebuilt from the
/// kappa column through the prescribed-curvature system. IoError on malformed
/// input.
Curve read_curve_csv(std::istream& is, double r);

/// Vertices projected per mode, quads split into two triangles.
void write_obj(std::ostream& os, const Mesh& mesh, double r, ProjectionMode mode);

/// "row,col,H"
void write_mesh_h_csv(std::ostream& os, const Mesh& mesh);

/// "row,col,x0,x1,x2,x3", the lossless ambient coordinates.
void write_mesh_vertices_csv(std::ostream& os, const Mesh& mesh);

/// "i,u,v,kappa_residual"; endpoint residuals are written as 0.
void write_chain_csv(std::ostream& os, const DiscreteChain& chain, double lambda);

/// {iterations, final_energy, grad_norm, max_kappa_residual, status} plus
/// lambda and taut.
std::string relax_report_json(const RelaxReport& report);

/// Opens for writing; IoError if that fails.
std::ofstream open_output(const std::string& path);

}  // namespace hycat

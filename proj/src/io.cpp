#include "hycat/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <type_traits>

#include "json.hpp"

#include "hycat/error.hpp"

namespace hycat {

ProjectionMode parse_projection(std::string_view name) {
  if (name == "ambient") return ProjectionMode::Ambient;
  if (name == "poincare") return ProjectionMode::PoincareBall;
  throw UsageError("unknown projection '" + std::string(name) + "'");
}

std::array<double, 3> project_vertex(const LorentzVec4& p, double r, ProjectionMode mode) {
  if (mode == ProjectionMode::Ambient) {
    return {p.c1, p.c2, p.c3};
  }
  const double k = r / (r + p.c0);
  return {k * p.c1, k * p.c2, k * p.c3};
}

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return {buf, res.ptr};
}

namespace {

template <class... Ts>
void write_row(std::ostream& os, const Ts&... xs) {
  bool first = true;
  auto one = [&](const auto& x) {
    if (!first) os << ',';
    first = false;
    if constexpr (std::is_floating_point_v<std::decay_t<decltype(x)>>) {
      os << format_double(x);
    } else {
      os << x;
    }
  };
  (one(xs), ...);
  os << '\n';
}

}  // namespace

void write_curve_csv(std::ostream& os, const Curve& curve,
                     const std::vector<SampleDiagnostics>& diagnostics) {
  if (diagnostics.size() != curve.samples.size()) {
    throw UsageError("write_curve_csv: one diagnostics entry per sample expected");
  }
  os << kCurveCsvHeader << '\n';
  for (std::size_t i = 0; i < curve.samples.size(); ++i) {
    const CurveSample& s = curve.samples[i];
    const LorentzVec3 p = i < curve.embedded.size() ? curve.embedded[i]
                                                     : chart_map({curve.chart, s.u, s.v, curve.r});
    const SampleDiagnostics& d = diagnostics[i];
    write_row(os, s.s, s.u, s.v, s.du, s.dv, p.c0, p.c1, p.c2, d.kappa, d.clairaut,
              d.killing_residual);
  }
  if (!os) {
    throw IoError("write failed");
  }
}

Curve read_curve_csv(std::istream& is, double r) {
  if (!(r > 0.0)) {
    throw UsageError("read_curve_csv: r must be positive");
  }
  Curve curve;
  curve.r = r;
  std::string line;
  bool header = false;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (!header) {
      if (line != kCurveCsvHeader) {
        throw IoError("curve CSV: unexpected header '" + line + "'");
      }
      header = true;
      continue;
    }
    std::array<double, 11> f{};
    std::size_t k = 0;
    const char* p = line.data();
    const char* end = line.data() + line.size();
    while (k < f.size()) {
      const auto res = std::from_chars(p, end, f[k]);
      if (res.ec != std::errc()) {
        throw IoError("curve CSV: bad number on line " + std::to_string(line_no));
      }
      ++k;
      p = res.ptr;
      if (p == end) break;
      if (*p != ',') {
        throw IoError("curve CSV: bad separator on line " + std::to_string(line_no));
      }
      ++p;
    }
    if (k != f.size() || p != end) {
      throw IoError("curve CSV: expected 11 columns on line " + std::to_string(line_no));
    }
    const double u = f[1], v = f[2], du = f[3], dv = f[4], kappa = f[8];
    const double c = std::cosh(u / r), sh = std::sinh(u / r);
    const double speed = std::sqrt(du * du + c * c * dv * dv);
    if (!(speed > 0.0)) {
      throw IoError("curve CSV: zero velocity on line " + std::to_string(line_no));
    }
    CurveSample s{f[0], u, v, du, dv, 0.0, 0.0};
    s.ddu = sh * c / r * dv * dv + kappa * dv * c / speed;
    s.ddv = -2.0 * (sh / c) / r * du * dv - kappa * du / c / speed;
    curve.samples.push_back(s);
    curve.embedded.push_back({f[5], f[6], f[7]});
  }
  if (!header) {
    throw IoError("curve CSV: missing header");
  }
  if (curve.samples.empty()) {
    throw IoError("curve CSV: no samples");
  }
  return curve;
}

void write_obj(std::ostream& os, const Mesh& mesh, double r, ProjectionMode mode) {
  os << "o surface\n";
  for (const LorentzVec4& p : mesh.vertices) {
    const auto q = project_vertex(p, r, mode);
    os << "v " << format_double(q[0]) << ' ' << format_double(q[1]) << ' '
       << format_double(q[2]) << '\n';
  }
  for (std::size_t i = 0; i + 1 < mesh.rows; ++i) {
    for (std::size_t j = 0; j + 1 < mesh.cols; ++j) {
      const std::size_t a = i * mesh.cols + j + 1;  // OBJ is 1-based
      const std::size_t b = a + 1;
      const std::size_t c = a + mesh.cols;
      const std::size_t d = c + 1;
      os << "f " << a << ' ' << b << ' ' << d << '\n';
      os << "f " << a << ' ' << d << ' ' << c << '\n';
    }
  }
  if (!os) {
    throw IoError("write failed");
  }
}

void write_mesh_h_csv(std::ostream& os, const Mesh& mesh) {
  os << "row,col,H\n";
  for (std::size_t i = 0; i < mesh.rows; ++i) {
    for (std::size_t j = 0; j < mesh.cols; ++j) {
      write_row(os, i, j, mesh.H[i * mesh.cols + j]);
    }
  }
  if (!os) {
    throw IoError("write failed");
  }
}

void write_mesh_vertices_csv(std::ostream& os, const Mesh& mesh) {
  os << "row,col,x0,x1,x2,x3\n";
  for (std::size_t i = 0; i < mesh.rows; ++i) {
    for (std::size_t j = 0; j < mesh.cols; ++j) {
      const LorentzVec4& p = mesh.vertices[i * mesh.cols + j];
      write_row(os, i, j, p.c0, p.c1, p.c2, p.c3);
    }
  }
  if (!os) {
    throw IoError("write failed");
  }
}

void write_chain_csv(std::ostream& os, const DiscreteChain& chain, double lambda) {
  os << "i,u,v,kappa_residual\n";
  const std::size_t N = chain.segments();
  for (std::size_t i = 0; i <= N; ++i) {
    const double res = (i == 0 || i == N) ? 0.0 : discrete_kappa_residual(chain, i, lambda);
    write_row(os, i, chain.nodes[i].u, chain.nodes[i].v, res);
  }
  if (!os) {
    throw IoError("write failed");
  }
}

std::string relax_report_json(const RelaxReport& report) {
  nlohmann::ordered_json j;
  j["iterations"] = report.iterations;
  j["final_energy"] = report.final_energy;
  j["grad_norm"] = report.grad_norm;
  j["max_kappa_residual"] = report.max_kappa_residual;
  j["status"] = std::string(to_string(report.status));
  j["lambda"] = report.lambda;
  j["taut"] = report.taut;
  return j.dump(2);
}

std::ofstream open_output(const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  return os;
}

}  // namespace hycat

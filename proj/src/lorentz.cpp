#include "hycat/lorentz.hpp"

#include <cmath>
#include <numbers>

#include "hycat/error.hpp"

namespace hycat {

double inner1(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw UsageError("inner1: dimension mismatch");
  }
  if (a.size() < 2) {
    throw UsageError("inner1: need at least one timelike and one spacelike component");
  }
  double acc = -a[0] * b[0];
  for (std::size_t i = 1; i < a.size(); ++i) {
    acc += a[i] * b[i];
  }
  return acc;
}

namespace {

double det3(double a00, double a01, double a02, double a10, double a11, double a12,
            double a20, double a21, double a22) {
  return a00 * (a11 * a22 - a12 * a21) - a01 * (a10 * a22 - a12 * a20) +
         a02 * (a10 * a21 - a11 * a20);
}

}  // namespace

LorentzVec4 cross4(const LorentzVec4& x, const LorentzVec4& y, const LorentzVec4& p, double r) {
  if (!(r > 0.0)) {
    throw UsageError("cross4: r must be positive");
  }
  // Cofactor expansion along the basis row (row index 3). The cofactor sign
  // is (-1)^(3+k); the timelike basis entry carries an extra minus.
  const std::array<std::array<double, 4>, 3> m{{{x.c0, x.c1, x.c2, x.c3},
                                               {y.c0, y.c1, y.c2, y.c3},
                                               {p.c0, p.c1, p.c2, p.c3}}};
  std::array<double, 4> out{};
  for (int k = 0; k < 4; ++k) {
    std::array<int, 3> cols{};
    for (int c = 0, j = 0; c < 4; ++c) {
      if (c != k) cols[j++] = c;
    }
    const double minor = det3(m[0][cols[0]], m[0][cols[1]], m[0][cols[2]],  //
                              m[1][cols[0]], m[1][cols[1]], m[1][cols[2]],  //
                              m[2][cols[0]], m[2][cols[1]], m[2][cols[2]]);
    const double cofactor_sign = ((3 + k) % 2 == 0) ? 1.0 : -1.0;
    const double basis_sign = (k == 0) ? -1.0 : 1.0;
    out[k] = basis_sign * cofactor_sign * minor / r;
  }
  return {out[0], out[1], out[2], out[3]};
}

bool on_hyperboloid(const LorentzVec3& p, double r, double tol) {
  return std::abs(inner1(p, p) + r * r) <= tol && p.c0 > 0.0;
}

bool on_hyperboloid(const LorentzVec4& p, double r, double tol) {
  return std::abs(inner1(p, p) + r * r) <= tol && p.c0 > 0.0;
}

double spacelike_norm(const LorentzVec3& a) {
  const double n2 = inner1(a, a);
  if (!(n2 > 0.0)) {
    throw DomainError("vector is not spacelike");
  }
  return std::sqrt(n2);
}

double spacelike_norm(const LorentzVec4& a) {
  const double n2 = inner1(a, a);
  if (!(n2 > 0.0)) {
    throw DomainError("vector is not spacelike");
  }
  return std::sqrt(n2);
}

double hyperbolic_distance(const LorentzVec3& p, const LorentzVec3& q, double r) {
  // d = 2r asinh(|p - q| / 2r) avoids the cancellation of acosh near 1.
  const LorentzVec3 d = p - q;
  const double chord2 = std::max(0.0, inner1(d, d));
  return 2.0 * r * std::asinh(std::sqrt(chord2) / (2.0 * r));
}

std::array<LorentzVec4, 2> plane_generators(PlaneType plane) {
  switch (plane) {
    case PlaneType::SpanXY:
      return {LorentzVec4{1, 0, 0, 0}, LorentzVec4{0, 1, 0, 0}};
    case PlaneType::SpanYZ:
      return {LorentzVec4{0, 1, 0, 0}, LorentzVec4{0, 0, 1, 0}};
    case PlaneType::SpanLight: {
      const double s = 1.0 / std::numbers::sqrt2;
      return {LorentzVec4{s, s, 0, 0}, LorentzVec4{0, 0, 1, 0}};
    }
  }
  throw UsageError("plane_generators: unknown plane");
}

std::array<double, 3> plane_gram(PlaneType plane) {
  const auto g = plane_generators(plane);
  return {inner1(g[0], g[0]), inner1(g[0], g[1]), inner1(g[1], g[1])};
}

CausalCharacter causal_character(PlaneType plane) {
  const auto [g11, g12, g22] = plane_gram(plane);
  const double det = g11 * g22 - g12 * g12;
  constexpr double eps = 1e-14;
  if (det < -eps) return CausalCharacter::Lorentzian;
  if (det > eps && g11 + g22 > 0.0) return CausalCharacter::Riemannian;
  return CausalCharacter::Degenerate;
}

double dist_to_plane(const LorentzVec4& p, PlaneType plane, double r) {
  if (!(r > 0.0)) {
    throw UsageError("dist_to_plane: r must be positive");
  }
  double d = 0.0;
  switch (plane) {
    case PlaneType::SpanXY:
      d = std::hypot(p.c2, p.c3);
      break;
    case PlaneType::SpanYZ:
      d = std::sqrt(std::max(0.0, (p.c0 - p.c3) * (p.c0 + p.c3)));
      break;
    case PlaneType::SpanLight:
      d = std::abs(p.c0 - p.c1) / std::numbers::sqrt2;
      break;
  }
  if (!(d > 0.0)) {
    throw DomainError("dist_to_plane: point lies on the reference plane");
  }
  return d;
}

}  // namespace hycat

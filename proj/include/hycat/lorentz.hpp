#pragma once

// Lorentz-Minkowski linear algebra for E^3_1 and E^4_1.
//
// Component 0 is the timelike direction (e_x in the hyperboloid model); the
// bilinear form is <a,b>_1 = -a0 b0 + sum_{i>=1} ai bi.

#include <array>
#include <span>

namespace hycat {

struct LorentzVec3 {
  double c0{0.0};
  double c1{0.0};
  double c2{0.0};

  constexpr LorentzVec3& operator+=(const LorentzVec3& o) {
    c0 += o.c0;
    c1 += o.c1;
    c2 += o.c2;
    return *this;
  }
  constexpr LorentzVec3& operator-=(const LorentzVec3& o) {
    c0 -= o.c0;
    c1 -= o.c1;
    c2 -= o.c2;
    return *this;
  }
  constexpr LorentzVec3& operator*=(double s) {
    c0 *= s;
    c1 *= s;
    c2 *= s;
    return *this;
  }
  friend constexpr bool operator==(const LorentzVec3&, const LorentzVec3&) = default;
};

struct LorentzVec4 {
  double c0{0.0};
  double c1{0.0};
  double c2{0.0};
  double c3{0.0};

  constexpr LorentzVec4& operator+=(const LorentzVec4& o) {
    c0 += o.c0;
    c1 += o.c1;
    c2 += o.c2;
    c3 += o.c3;
    return *this;
  }
  constexpr LorentzVec4& operator-=(const LorentzVec4& o) {
    c0 -= o.c0;
    c1 -= o.c1;
    c2 -= o.c2;
    c3 -= o.c3;
    return *this;
  }
  constexpr LorentzVec4& operator*=(double s) {
    c0 *= s;
    c1 *= s;
    c2 *= s;
    c3 *= s;
    return *this;
  }
  friend constexpr bool operator==(const LorentzVec4&, const LorentzVec4&) = default;
};

constexpr LorentzVec3 operator+(LorentzVec3 a, const LorentzVec3& b) { return a += b; }
constexpr LorentzVec3 operator-(LorentzVec3 a, const LorentzVec3& b) { return a -= b; }
constexpr LorentzVec3 operator*(double s, LorentzVec3 a) { return a *= s; }
constexpr LorentzVec3 operator*(LorentzVec3 a, double s) { return a *= s; }
constexpr LorentzVec3 operator-(const LorentzVec3& a) { return {-a.c0, -a.c1, -a.c2}; }

constexpr LorentzVec4 operator+(LorentzVec4 a, const LorentzVec4& b) { return a += b; }
constexpr LorentzVec4 operator-(LorentzVec4 a, const LorentzVec4& b) { return a -= b; }
constexpr LorentzVec4 operator*(double s, LorentzVec4 a) { return a *= s; }
constexpr LorentzVec4 operator*(LorentzVec4 a, double s) { return a *= s; }
constexpr LorentzVec4 operator-(const LorentzVec4& a) { return {-a.c0, -a.c1, -a.c2, -a.c3}; }

constexpr double inner1(const LorentzVec3& a, const LorentzVec3& b) {
  return -a.c0 * b.c0 + a.c1 * b.c1 + a.c2 * b.c2;
}
constexpr double inner1(const LorentzVec4& a, const LorentzVec4& b) {
  return -a.c0 * b.c0 + a.c1 * b.c1 + a.c2 * b.c2 + a.c3 * b.c3;
}

/// Runtime-sized variant for coordinate arrays of E^n_1. Throws UsageError
/// when the sizes differ or fewer than two components are given.
double inner1(std::span<const double> a, std::span<const double> b);

/// Lorentz cross product of E^3_1:
///   (x,y,z) x (x',y',z') = (y'z - yz', x'z - xz', xy' - x'y).
/// The result is <.,.>_1-orthogonal to both factors.
constexpr LorentzVec3 cross3(const LorentzVec3& a, const LorentzVec3& b) {
  return {b.c1 * a.c2 - a.c1 * b.c2, b.c0 * a.c2 - a.c0 * b.c2, a.c0 * b.c1 - b.c0 * a.c1};
}

/// Ternary product x ×₁ y ×₁ (p/r) of E^4_1, i.e. (1/r) det[x; y; p; (-e_x, e_y, e_z, e_w)].
/// Oriented so that e_x × e_y × e_z = e_w.
LorentzVec4 cross4(const LorentzVec4& x, const LorentzVec4& y, const LorentzVec4& p, double r);

/// True iff |<p,p>_1 + r^2| <= tol and p lies on the upper sheet.
bool on_hyperboloid(const LorentzVec3& p, double r, double tol);
bool on_hyperboloid(const LorentzVec4& p, double r, double tol);

/// Natural inclusion H^2(r) -> H^3(r), (x,y,z) -> (x,y,z,0).
constexpr LorentzVec4 embed_h2_in_h3(const LorentzVec3& p) { return {p.c0, p.c1, p.c2, 0.0}; }

/// Lorentz norm sqrt(<a,a>_1) of a spacelike vector; DomainError otherwise.
double spacelike_norm(const LorentzVec3& a);
double spacelike_norm(const LorentzVec4& a);

/// Intrinsic distance between two points of H^n(r).
double hyperbolic_distance(const LorentzVec3& p, const LorentzVec3& q, double r);

// ---------------------------------------------------------------------------
// Reference planes

enum class PlaneType { SpanXY, SpanYZ, SpanLight };

enum class CausalCharacter { Lorentzian, Riemannian, Degenerate };

/// Generators [e_x, e_y], [e_y, e_z], [(e_x + e_y)/sqrt2, e_z].
std::array<LorentzVec4, 2> plane_generators(PlaneType plane);

/// Gram matrix (g11, g12, g22) of the generators under <.,.>_1.
std::array<double, 3> plane_gram(PlaneType plane);

/// Classified from the Gram matrix, not from the tag.
CausalCharacter causal_character(PlaneType plane);

/// Ambient distance of a point of H^3(r) to the reference plane:
///   SpanXY    -> sqrt(z^2 + w^2)    (= r sinh(u/r) on psi(u,v))
///   SpanYZ    -> sqrt(x^2 - w^2)    (= r cosh(u/r) cosh(v/r))
///   SpanLight -> |x - y| / sqrt2    (= (r/sqrt2) e^{-v/r} cosh(u/r))
/// Throws DomainError when the point lies on the plane.
double dist_to_plane(const LorentzVec4& p, PlaneType plane, double r);

}  // namespace hycat

#include <cmath>
#include <vector>

#include "doctest.h"
#include "hycat/charts.hpp"
#include "hycat/error.hpp"
#include "hycat/lorentz.hpp"

using namespace hycat;

namespace {

// det of the 4x4 matrix with rows a, b, c, d (cofactor expansion along d).
double det4(const LorentzVec4& a, const LorentzVec4& b, const LorentzVec4& c, const LorentzVec4& d) {
  const double m[4][4] = {{a.c0, a.c1, a.c2, a.c3},
                          {b.c0, b.c1, b.c2, b.c3},
                          {c.c0, c.c1, c.c2, c.c3},
                          {d.c0, d.c1, d.c2, d.c3}};
  auto det3 = [&](int skip_col) {
    int cols[3], n = 0;
    for (int j = 0; j < 4; ++j) {
      if (j != skip_col) cols[n++] = j;
    }
    return m[0][cols[0]] * (m[1][cols[1]] * m[2][cols[2]] - m[1][cols[2]] * m[2][cols[1]]) -
           m[0][cols[1]] * (m[1][cols[0]] * m[2][cols[2]] - m[1][cols[2]] * m[2][cols[0]]) +
           m[0][cols[2]] * (m[1][cols[0]] * m[2][cols[1]] - m[1][cols[1]] * m[2][cols[0]]);
  };
  double acc = 0.0;
  for (int j = 0; j < 4; ++j) {
    acc += ((3 + j) % 2 == 0 ? 1.0 : -1.0) * m[3][j] * det3(j);
  }
  return acc;
}

}  // namespace

TEST_SUITE("lorentz") {
  TEST_CASE("inner product has signature (-,+,+)") {
    CHECK(inner1(LorentzVec3{1, 0, 0}, LorentzVec3{1, 0, 0}) == -1.0);
    CHECK(inner1(LorentzVec3{0, 1, 0}, LorentzVec3{0, 1, 0}) == 1.0);
    CHECK(inner1(LorentzVec4{0, 0, 0, 2}, LorentzVec4{0, 0, 0, 3}) == 6.0);
    const std::vector<double> a{1, 2, 3, 4, 5}, b{2, 1, 0, 1, 1};
    CHECK(inner1(a, b) == doctest::Approx(-2 + 2 + 0 + 4 + 5));
    CHECK_THROWS_AS(inner1(std::vector<double>{1, 2}, std::vector<double>{1, 2, 3}), UsageError);
  }

  TEST_CASE("cross3 is orthogonal to its factors") {
    const LorentzVec3 a{0.3, -1.2, 2.0}, b{1.7, 0.4, -0.9};
    const LorentzVec3 c = cross3(a, b);
    CHECK(inner1(c, a) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(inner1(c, b) == doctest::Approx(0.0).epsilon(1e-14));
    // <a x b, c> = det[a; b; c] for the Lorentz cross product.
    const LorentzVec3 d{0.5, 0.25, -1.0};
    const double det = a.c0 * (b.c1 * d.c2 - b.c2 * d.c1) - a.c1 * (b.c0 * d.c2 - b.c2 * d.c0) +
                       a.c2 * (b.c0 * d.c1 - b.c1 * d.c0);
    CHECK(inner1(c, d) == doctest::Approx(det));
  }

  TEST_CASE("cross4 orientation and orthogonality") {
    const LorentzVec4 e = cross4({1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, 1.0);
    CHECK(e == LorentzVec4{0, 0, 0, 1});
    const LorentzVec4 x{0.2, 1.0, -0.3, 0.5}, y{-0.7, 0.1, 0.9, 0.4}, p{2.0, 0.5, 1.0, 1.3};
    const double r = 1.7;
    const LorentzVec4 n = cross4(x, y, p, r);
    CHECK(inner1(n, x) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(inner1(n, y) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(inner1(n, p) == doctest::Approx(0.0).epsilon(1e-14));
    // <x × y × p/r, q> = det[x; y; p; q] / r.
    const LorentzVec4 q{0.3, -0.2, 0.8, 1.1};
    CHECK(inner1(n, q) == doctest::Approx(det4(x, y, p, q) / r));
  }

  TEST_CASE("hyperboloid membership and norms") {
    CHECK(on_hyperboloid(LorentzVec3{2.0, 0.0, 0.0}, 2.0, 1e-14));
    CHECK_FALSE(on_hyperboloid(LorentzVec3{-2.0, 0.0, 0.0}, 2.0, 1e-14));
    CHECK(on_hyperboloid(embed_h2_in_h3(psi(0.4, -0.7, 1.3)), 1.3, 1e-13));
    CHECK(spacelike_norm(LorentzVec3{0, 3, 4}) == doctest::Approx(5.0));
    CHECK_THROWS_AS(spacelike_norm(LorentzVec3{2, 1, 0}), DomainError);
    CHECK_THROWS_AS(spacelike_norm(LorentzVec4{1, 1, 0, 0}), DomainError);
  }

  TEST_CASE("distance along the coordinate geodesics") {
    const double r = 1.5;
    // v = const lines of the semi-geodesic chart are unit-speed geodesics.
    CHECK(hyperbolic_distance(psi(-0.4, 0.3, r), psi(1.1, 0.3, r), r) == doctest::Approx(1.5));
    // The reference geodesic u = 0 is parametrized by arc length.
    CHECK(hyperbolic_distance(psi(0, -1, r), psi(0, 2, r), r) == doctest::Approx(3.0));
    CHECK(hyperbolic_distance(psi(0.2, 0.2, r), psi(0.2, 0.2, r), r) == 0.0);
  }

  TEST_CASE("reference planes") {
    CHECK(causal_character(PlaneType::SpanXY) == CausalCharacter::Lorentzian);
    CHECK(causal_character(PlaneType::SpanYZ) == CausalCharacter::Riemannian);
    CHECK(causal_character(PlaneType::SpanLight) == CausalCharacter::Degenerate);
    const auto g = plane_gram(PlaneType::SpanLight);
    CHECK(g[0] == doctest::Approx(0.0));
    CHECK(g[2] == doctest::Approx(1.0));

    const double r = 1.3, u = 0.8, v = -0.4;
    const LorentzVec4 p = embed_h2_in_h3(psi(u, v, r));
    CHECK(dist_to_plane(p, PlaneType::SpanXY, r) == doctest::Approx(r * std::sinh(u / r)));
    CHECK(dist_to_plane(p, PlaneType::SpanYZ, r) ==
          doctest::Approx(r * std::cosh(u / r) * std::cosh(v / r)));
    const LorentzVec4 h = embed_h2_in_h3(phi(u, v, r));
    CHECK(dist_to_plane(h, PlaneType::SpanLight, r) ==
          doctest::Approx(std::abs(h.c0 - h.c1) / std::sqrt(2.0)));
    CHECK_THROWS_AS(dist_to_plane(embed_h2_in_h3(psi(0.0, 0.5, r)), PlaneType::SpanXY, r),
                    DomainError);
  }
}

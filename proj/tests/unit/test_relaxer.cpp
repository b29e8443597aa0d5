#include <cmath>

#include "doctest.h"
#include "hycat/charts.hpp"
#include "hycat/error.hpp"
#include "hycat/relaxer.hpp"

using namespace hycat;

namespace {

double dist(ChainNode a, ChainNode b, double r) { return hyperbolic_distance(psi(a.u, a.v, r), psi(b.u, b.v, r), r); }

}  // namespace

TEST_SUITE("relaxer") {
  const ChainNode a{1.0, -0.5}, b{1.0, 0.5};

  TEST_CASE("initial chain has the target length and equal links") {
    const double L = 1.1 * dist(a, b, 1.0);
    const DiscreteChain c = make_initial_chain(CatenaryType::Elliptic, 1.0, a, b, L, 32);
    CHECK(c.segments() == 32);
    CHECK(chain_length(c) == doctest::Approx(L).epsilon(1e-12));
    CHECK(endpoint_distance(c) == doctest::Approx(dist(a, b, 1.0)));
    // Sags toward the reference plane.
    CHECK(c.nodes[16].u < 1.0);
    CHECK_THROWS_AS(make_initial_chain(CatenaryType::Elliptic, 1.0, a, b, 0.5 * L, 32), DomainError);
  }

  TEST_CASE("symmetric problem relaxes to a symmetric catenary") {
    const double L = 1.1 * dist(a, b, 1.0);
    const DiscreteChain c0 = make_initial_chain(CatenaryType::Elliptic, 1.0, a, b, L, 48);
    const auto [c, rep] = relax(c0, RelaxOptions{});
    REQUIRE(rep.status == RelaxStatus::Converged);
    CHECK_FALSE(rep.taut);
    CHECK(rep.grad_norm < 1e-8);
    CHECK(chain_length(c) == doctest::Approx(L).epsilon(1e-12));
    CHECK(rep.final_energy <= chain_energy(c0, 0.0) + 1e-12);
    for (std::size_t i = 0; i <= 48; ++i) {
      CHECK(c.nodes[i].u == doctest::Approx(c.nodes[48 - i].u).epsilon(1e-6));
      CHECK(c.nodes[i].v == doctest::Approx(-c.nodes[48 - i].v).epsilon(1e-6));
    }
    CHECK(rep.lambda == doctest::Approx(fit_multiplier(c)));
    CHECK(rep.max_kappa_residual < 5e-2);
  }

  TEST_CASE("backends give the same relaxed chain") {
    const double L = 1.2 * dist(a, b, 1.0);
    const DiscreteChain c0 = make_initial_chain(CatenaryType::Hyperbolic, 1.0, a, b, L, 40);
    RelaxOptions s, p;
    p.backend = Backend::OpenMP;
    const auto rs = relax(c0, s), rp = relax(c0, p);
    CHECK(rs.second.iterations == rp.second.iterations);
    for (std::size_t i = 0; i <= 40; ++i) {
      CHECK(rs.first.nodes[i].u == rp.first.nodes[i].u);
      CHECK(rs.first.nodes[i].v == rp.first.nodes[i].v);
    }
  }

  TEST_CASE("taut and infeasible targets") {
    const double d = dist(a, b, 1.0);
    DiscreteChain c = make_initial_chain(CatenaryType::Parabolic, 1.0, a, b, 1.05 * d, 16);
    c.target_length = d;
    const auto [g, rep] = relax(c, RelaxOptions{});
    CHECK(rep.taut);
    CHECK(rep.status == RelaxStatus::Converged);
    double sum = 0.0;
    for (std::size_t i = 0; i < 16; ++i) sum += dist(g.nodes[i], g.nodes[i + 1], 1.0);
    CHECK(sum == doctest::Approx(d).epsilon(1e-12));

    c.target_length = 0.9 * d;
    CHECK(relax(c, RelaxOptions{}).second.status == RelaxStatus::Infeasible);
  }

  TEST_CASE("iteration cap is reported") {
    const double L = 1.1 * dist(a, b, 1.0);
    const DiscreteChain c0 = make_initial_chain(CatenaryType::Elliptic, 1.0, a, b, L, 64);
    RelaxOptions o;
    o.max_iter = 3;
    const auto rep = relax(c0, o).second;
    CHECK(rep.status == RelaxStatus::MaxIter);
    CHECK(rep.iterations == 3);
    o.grad_tol = 0.0;
    CHECK_THROWS_AS(relax(c0, o), UsageError);
  }

  TEST_CASE("three-point jet on a geodesic") {
    // Nodes on the u-axis geodesic v = 0, unequally spaced.
    DiscreteChain c{CatenaryType::Elliptic, 1.0, {{0.5, 0.0}, {0.62, 0.0}, {0.9, 0.0}}, 0.4};
    const ChartJet2 j = discrete_jet(c, 1);
    CHECK(j.du == doctest::Approx(1.0));
    CHECK(j.dv == doctest::Approx(0.0));
    CHECK(kappa_semigeo(j) == doctest::Approx(0.0).epsilon(1e-12));
  }
}

#include "hycat/relaxer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <string>

#include "hycat/error.hpp"

namespace hycat {

std::string_view to_string(RelaxStatus status) {
  switch (status) {
    case RelaxStatus::Converged:
      return "Converged";
    case RelaxStatus::MaxIter:
      return "MaxIter";
    case RelaxStatus::Infeasible:
      return "Infeasible";
  }
  return "unknown";
}

namespace {

void check_chain(const DiscreteChain& chain) {
  if (!(chain.r > 0.0)) {
    throw UsageError("chain: r must be positive");
  }
  if (chain.nodes.size() < 3) {
    throw UsageError("chain: need at least two segments");
  }
}

std::vector<SegmentTerms> terms_of(const DiscreteChain& chain, Backend backend = Backend::Serial) {
  std::vector<SegmentTerms> t(chain.segments());
  chain_segment_terms(backend, chain.type, chain.r, 0.0, chain.nodes, t);
  return t;
}

// Solves the symmetric tridiagonal system (diag, off) x = rhs in place (Thomas).
void solve_tridiagonal(std::vector<double> diag, std::vector<double> off, std::vector<double>& rhs) {
  const std::size_t n = diag.size();
  for (std::size_t i = 1; i < n; ++i) {
    const double m = off[i - 1] / diag[i - 1];
    diag[i] -= m * off[i - 1];
    rhs[i] -= m * rhs[i - 1];
  }
  rhs[n - 1] /= diag[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) {
    rhs[i] = (rhs[i] - off[i] * rhs[i + 1]) / diag[i];
  }
}

// Constraint Jacobian J (one row per segment, columns = interior node
// coordinates) through its action and the tridiagonal J J^T.
struct Constraints {
  const std::vector<SegmentTerms>& t;
  std::size_t N;  // segments

  [[nodiscard]] bool interior(std::size_t k) const { return k >= 1 && k + 1 <= N; }

  void gram(std::vector<double>& diag, std::vector<double>& off) const {
    diag.assign(N, 0.0);
    off.assign(N - 1, 0.0);
    for (std::size_t i = 0; i < N; ++i) {
      const auto& d = t[i].d_length;
      if (interior(i)) diag[i] += d[0] * d[0] + d[1] * d[1];
      if (interior(i + 1)) diag[i] += d[2] * d[2] + d[3] * d[3];
      if (i + 1 < N) off[i] = d[2] * t[i + 1].d_length[0] + d[3] * t[i + 1].d_length[1];
    }
  }

  // g is indexed by node: g[2k], g[2k+1].
  [[nodiscard]] std::vector<double> apply(const std::vector<double>& g) const {
    std::vector<double> out(N, 0.0);
    for (std::size_t i = 0; i < N; ++i) {
      const auto& d = t[i].d_length;
      if (interior(i)) out[i] += d[0] * g[2 * i] + d[1] * g[2 * i + 1];
      if (interior(i + 1)) out[i] += d[2] * g[2 * i + 2] + d[3] * g[2 * i + 3];
    }
    return out;
  }

  [[nodiscard]] std::vector<double> apply_transpose(const std::vector<double>& mu) const {
    std::vector<double> out(2 * (N + 1), 0.0);
    for (std::size_t i = 0; i < N; ++i) {
      const auto& d = t[i].d_length;
      if (interior(i)) {
        out[2 * i] += d[0] * mu[i];
        out[2 * i + 1] += d[1] * mu[i];
      }
      if (interior(i + 1)) {
        out[2 * i + 2] += d[2] * mu[i];
        out[2 * i + 3] += d[3] * mu[i];
      }
    }
    return out;
  }

  // Component of g orthogonal to the rows of J.
  [[nodiscard]] std::vector<double> project(const std::vector<double>& g) const {
    std::vector<double> diag, off;
    gram(diag, off);
    std::vector<double> mu = apply(g);
    solve_tridiagonal(diag, off, mu);
    const std::vector<double> jt = apply_transpose(mu);
    std::vector<double> out(g.size());
    for (std::size_t k = 0; k < g.size(); ++k) out[k] = g[k] - jt[k];
    return out;
  }
};

std::vector<double> energy_gradient(const std::vector<SegmentTerms>& t) {
  const std::size_t N = t.size();
  std::vector<double> g(2 * (N + 1), 0.0);
  for (std::size_t i = 0; i < N; ++i) {
    g[2 * i] += t[i].d_energy[0];
    g[2 * i + 1] += t[i].d_energy[1];
    g[2 * i + 2] += t[i].d_energy[2];
    g[2 * i + 3] += t[i].d_energy[3];
  }
  g[0] = g[1] = g[2 * N] = g[2 * N + 1] = 0.0;
  return g;
}

double norm2(const std::vector<double>& a) {
  double s = 0.0;
  for (const double x : a) s += x * x;
  return std::sqrt(s);
}

double total_energy(const std::vector<SegmentTerms>& t) {
  double e = 0.0;
  for (const auto& s : t) e += s.energy;
  return e;
}

// Newton (minimal-norm Gauss-Newton) restoration of every link to L/N.
// Returns false if it fails to converge or leaves the admissible region.
bool restore(DiscreteChain& chain, Backend backend) {
  const std::size_t N = chain.segments();
  const double link = chain.target_length / static_cast<double>(N);
  const double tol = 1e-13 * std::max(link, 1e-300);
  try {
    for (int it = 0; it < 40; ++it) {
      const std::vector<SegmentTerms> t = terms_of(chain, backend);
      std::vector<double> c(N);
      double cmax = 0.0;
      for (std::size_t i = 0; i < N; ++i) {
        c[i] = t[i].length - link;
        cmax = std::max(cmax, std::abs(c[i]));
      }
      if (cmax <= tol) {
        return true;
      }
      const Constraints J{t, N};
      std::vector<double> diag, off;
      J.gram(diag, off);
      for (double& x : c) x = -x;
      solve_tridiagonal(diag, off, c);
      const std::vector<double> dx = J.apply_transpose(c);
      for (std::size_t k = 1; k < N; ++k) {
        chain.nodes[k].u += dx[2 * k];
        chain.nodes[k].v += dx[2 * k + 1];
      }
    }
  } catch (const DomainError&) {
    return false;
  }
  return false;
}

LorentzVec3 node_point(const DiscreteChain& chain, std::size_t k) {
  return psi(chain.nodes[k].u, chain.nodes[k].v, chain.r);
}

std::vector<ChainNode> geodesic_nodes(const ChainNode& a, const ChainNode& b, double r,
                                      std::size_t N) {
  const LorentzVec3 P = psi(a.u, a.v, r), Q = psi(b.u, b.v, r);
  const double d = hyperbolic_distance(P, Q, r);
  std::vector<ChainNode> nodes(N + 1);
  nodes.front() = a;
  nodes.back() = b;
  for (std::size_t k = 1; k < N; ++k) {
    const double s = d * static_cast<double>(k) / static_cast<double>(N);
    const LorentzVec3 X =
        (1.0 / std::sinh(d / r)) * (std::sinh((d - s) / r) * P + std::sinh(s / r) * Q);
    nodes[k] = {r * std::asinh(X.c2 / r), r * std::atanh(X.c1 / X.c0)};
  }
  return nodes;
}

double max_kappa_residual(const DiscreteChain& chain, double lambda) {
  double m = 0.0;
  for (std::size_t i = 1; i < chain.segments(); ++i) {
    m = std::max(m, std::abs(discrete_kappa_residual(chain, i, lambda)));
  }
  return m;
}

}  // namespace

double chain_length(const DiscreteChain& chain) {
  check_chain(chain);
  double len = 0.0;
  for (std::size_t i = 0; i < chain.segments(); ++i) {
    const ChainNode& a = chain.nodes[i];
    const ChainNode& b = chain.nodes[i + 1];
    const double C = std::cosh(0.5 * (a.u + b.u) / chain.r);
    const double du = b.u - a.u, dv = b.v - a.v;
    len += std::sqrt(du * du + C * C * dv * dv);
  }
  return len;
}

double chain_energy(const DiscreteChain& chain, double lambda) {
  check_chain(chain);
  double e = 0.0;
  for (std::size_t i = 0; i < chain.segments(); ++i) {
    const ChainNode& a = chain.nodes[i];
    const ChainNode& b = chain.nodes[i + 1];
    const double mu = 0.5 * (a.u + b.u), mv = 0.5 * (a.v + b.v);
    const double w = weight(chain.type, mu, mv, chain.r, lambda);
    const double C = std::cosh(mu / chain.r);
    const double du = b.u - a.u, dv = b.v - a.v;
    e += w * std::sqrt(du * du + C * C * dv * dv);
  }
  return e;
}

double endpoint_distance(const DiscreteChain& chain) {
  check_chain(chain);
  return hyperbolic_distance(node_point(chain, 0), node_point(chain, chain.segments()), chain.r);
}

DiscreteChain make_initial_chain(CatenaryType type, double r, ChainNode a, ChainNode b,
                                 double target_length, std::size_t n_segments) {
  if (!(r > 0.0)) {
    throw UsageError("make_initial_chain: r must be positive");
  }
  if (n_segments < 2) {
    throw UsageError("make_initial_chain: N must be at least 2");
  }
  if (!(target_length > 0.0)) {
    throw UsageError("make_initial_chain: target length must be positive");
  }
  DiscreteChain chain{type, r, {}, target_length};
  const double d = hyperbolic_distance(psi(a.u, a.v, r), psi(b.u, b.v, r), r);
  if (target_length < d * (1.0 - 1e-9)) {
    throw DomainError("infeasible: target length " + std::to_string(target_length) +
                      " is shorter than the endpoint distance " + std::to_string(d));
  }
  if (target_length <= d * (1.0 + 1e-9)) {
    chain.nodes = geodesic_nodes(a, b, r, n_segments);
    return chain;
  }

  // Chord normal in the chart metric at the chord midpoint, pointing downhill.
  const double mu = 0.5 * (a.u + b.u), mv = 0.5 * (a.v + b.v);
  const double C = std::cosh(mu / r);
  const double du = b.u - a.u, dv = b.v - a.v;
  double nu = -dv * C, nv = du / C;
  const double nn = std::sqrt(nu * nu + C * C * nv * nv);
  nu /= nn;
  nv /= nn;
  const WeightJet wj = weight_jet(type, mu, mv, r);
  if (nu * wj.f_u + nv * wj.f_v > 0.0) {
    nu = -nu;
    nv = -nv;
  }

  const std::size_t N = n_segments;
  const std::size_t M = 64 * N;
  auto at = [&](double tau, double amp) -> ChainNode {
    const double bulge = amp * std::sin(std::numbers::pi * tau);
    return {a.u + tau * du + bulge * nu, a.v + tau * dv + bulge * nv};
  };
  // Nodes at equal arc length along the finely sampled bulged curve.
  auto resample = [&](double amp) {
    std::vector<double> cum(M + 1, 0.0);
    ChainNode prev = at(0.0, amp);
    for (std::size_t k = 1; k <= M; ++k) {
      const ChainNode cur = at(static_cast<double>(k) / static_cast<double>(M), amp);
      const double c = std::cosh(0.5 * (prev.u + cur.u) / r);
      const double eu = cur.u - prev.u, ev = cur.v - prev.v;
      cum[k] = cum[k - 1] + std::sqrt(eu * eu + c * c * ev * ev);
      prev = cur;
    }
    std::vector<ChainNode> nodes(N + 1);
    nodes.front() = a;
    nodes.back() = b;
    for (std::size_t i = 1; i < N; ++i) {
      const double target = cum[M] * static_cast<double>(i) / static_cast<double>(N);
      const auto it = std::lower_bound(cum.begin(), cum.end(), target);
      const auto k = static_cast<std::size_t>(std::max<std::ptrdiff_t>(1, it - cum.begin()));
      const double frac = (target - cum[k - 1]) / (cum[k] - cum[k - 1]);
      const double tau = (static_cast<double>(k - 1) + frac) / static_cast<double>(M);
      nodes[i] = at(tau, amp);
    }
    return nodes;
  };
  auto excess = [&](double amp) {
    DiscreteChain trial{type, r, resample(amp), target_length};
    chain_energy(trial, 0.0);  // throws DomainError outside the admissible region
    return chain_length(trial) - target_length;
  };

  const double step = 0.01 * std::sqrt(du * du + C * C * dv * dv);
  double lo = 0.0, hi = 0.0;
  double f_lo = excess(0.0);
  bool bracketed = f_lo == 0.0;
  try {
    for (int k = 1; k <= 2000 && !bracketed; ++k) {
      hi = step * k;
      const double f_hi = excess(hi);
      if ((f_lo < 0.0) != (f_hi < 0.0) || f_hi == 0.0) {
        bracketed = true;
        break;
      }
      lo = hi;
      f_lo = f_hi;
    }
  } catch (const DomainError&) {
  }
  if (!bracketed) {
    throw DomainError("make_initial_chain: no admissible bulge reaches the target length");
  }
  if (f_lo != 0.0) {
    for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, hi); ++it) {
      const double mid = 0.5 * (lo + hi);
      const double f_mid = excess(mid);
      if ((f_mid < 0.0) == (f_lo < 0.0)) {
        lo = mid;
        f_lo = f_mid;
      } else {
        hi = mid;
      }
    }
  }
  chain.nodes = resample(f_lo == 0.0 ? lo : hi);
  if (!restore(chain, Backend::Serial)) {
    throw DomainError("make_initial_chain: could not equalize link lengths");
  }
  return chain;
}

ChartJet2 discrete_jet(const DiscreteChain& chain, std::size_t i) {
  check_chain(chain);
  if (i < 1 || i + 1 > chain.segments()) {
    throw UsageError("discrete_jet: index must be interior");
  }
  const double r = chain.r;
  const ChainNode& p = chain.nodes[i - 1];
  const ChainNode& q = chain.nodes[i];
  const ChainNode& n = chain.nodes[i + 1];
  auto seg = [r](const ChainNode& a, const ChainNode& b) {
    const double C = std::cosh(0.5 * (a.u + b.u) / r);
    const double du = b.u - a.u, dv = b.v - a.v;
    return std::sqrt(du * du + C * C * dv * dv);
  };
  const double hm = seg(p, q), hp = seg(q, n);
  if (!(hm > 0.0) || !(hp > 0.0)) {
    throw DomainError("discrete_jet: degenerate stencil (repeated nodes)");
  }
  const double s = hm + hp;
  const double a1 = -hp / (hm * s), b1 = (hp - hm) / (hm * hp), c1 = hm / (hp * s);
  const double a2 = 2.0 / (hm * s), b2 = -2.0 / (hm * hp), c2 = 2.0 / (hp * s);
  ChartJet2 jet;
  jet.point = {ChartId::SemiGeodesic, q.u, q.v, r};
  jet.du = a1 * p.u + b1 * q.u + c1 * n.u;
  jet.dv = a1 * p.v + b1 * q.v + c1 * n.v;
  jet.ddu = a2 * p.u + b2 * q.u + c2 * n.u;
  jet.ddv = a2 * p.v + b2 * q.v + c2 * n.v;
  return jet;
}

double discrete_kappa_residual(const DiscreteChain& chain, std::size_t i, double lambda) {
  const ChartJet2 jet = discrete_jet(chain, i);
  return kappa_semigeo(jet) - catenary_kappa(chain.type, jet.point.u, jet.point.v, jet.du,
                                             jet.dv, chain.r, lambda);
}

double fit_multiplier(const DiscreteChain& chain) {
  check_chain(chain);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 1; i < chain.segments(); ++i) {
    const ChartJet2 jet = discrete_jet(chain, i);
    const double kappa = kappa_semigeo(jet);
    const WeightJet wj = weight_jet(chain.type, jet.point.u, jet.point.v, chain.r);
    const double C = std::cosh(jet.point.u / chain.r);
    const double speed = std::sqrt(speed_squared(jet));
    const double A = (jet.dv * wj.f_u * C - jet.du * wj.f_v / C) / speed;
    num += kappa * (A - kappa * wj.f);
    den += kappa * kappa;
  }
  return den > 0.0 ? num / den : 0.0;
}

std::pair<DiscreteChain, RelaxReport> relax(const DiscreteChain& chain0, const RelaxOptions& opts) {
  check_chain(chain0);
  if (!(chain0.target_length > 0.0)) {
    throw UsageError("relax: target length must be positive");
  }
  if (!(opts.grad_tol > 0.0) || !(opts.step_size > 0.0)) {
    throw UsageError("relax: grad_tol and step_size must be positive");
  }
  RelaxReport report;
  DiscreteChain chain = chain0;
  const std::size_t N = chain.segments();
  const double d = endpoint_distance(chain);

  if (chain.target_length < d * (1.0 - 1e-9)) {
    report.status = RelaxStatus::Infeasible;
    return {chain, report};
  }
  if (chain.target_length <= d * (1.0 + 1e-9)) {
    chain.nodes = geodesic_nodes(chain.nodes.front(), chain.nodes.back(), chain.r, N);
    report.taut = true;
    report.status = RelaxStatus::Converged;
    report.final_energy = chain_energy(chain, 0.0);
    for (std::size_t i = 1; i < N; ++i) {
      report.max_kappa_residual =
          std::max(report.max_kappa_residual, std::abs(kappa_semigeo(discrete_jet(chain, i))));
    }
    return {chain, report};
  }

  if (!restore(chain, opts.backend)) {
    report.status = RelaxStatus::Infeasible;
    return {chain, report};
  }

  std::vector<SegmentTerms> t = terms_of(chain, opts.backend);
  double energy = total_energy(t);
  std::vector<double> gp = Constraints{t, N}.project(energy_gradient(t));
  double alpha = opts.step_size * chain.r;
  report.status = RelaxStatus::MaxIter;

  std::size_t it = 0;
  for (; it < opts.max_iter; ++it) {
    report.grad_norm = norm2(gp);
    if (report.grad_norm <= opts.grad_tol) {
      report.status = RelaxStatus::Converged;
      break;
    }
    bool accepted = false;
    DiscreteChain trial;
    std::vector<SegmentTerms> t_trial;
    double e_trial = 0.0;
    for (int halving = 0; halving < 60; ++halving) {
      trial = chain;
      for (std::size_t k = 1; k < N; ++k) {
        trial.nodes[k].u -= alpha * gp[2 * k];
        trial.nodes[k].v -= alpha * gp[2 * k + 1];
      }
      if (restore(trial, opts.backend)) {
        t_trial = terms_of(trial, opts.backend);
        e_trial = total_energy(t_trial);
        // Monotone up to the rounding of the energy sum itself.
        if (e_trial <= energy + 1e-14 * std::abs(energy)) {
          accepted = true;
          break;
        }
      }
      alpha *= 0.5;
    }
    if (!accepted) {
      break;
    }
    std::vector<double> gp_trial = Constraints{t_trial, N}.project(energy_gradient(t_trial));
    // Barzilai-Borwein step from the accepted displacement.
    double ss = 0.0, sy = 0.0;
    for (std::size_t k = 1; k < N; ++k) {
      const double su = trial.nodes[k].u - chain.nodes[k].u;
      const double sv = trial.nodes[k].v - chain.nodes[k].v;
      ss += su * su + sv * sv;
      sy += su * (gp_trial[2 * k] - gp[2 * k]) + sv * (gp_trial[2 * k + 1] - gp[2 * k + 1]);
    }
    alpha = sy > 0.0 ? ss / sy : 2.0 * alpha;
    alpha = std::clamp(alpha, 1e-12 * chain.r, 1e6 * chain.r);

    chain = std::move(trial);
    t = std::move(t_trial);
    energy = e_trial;
    gp = std::move(gp_trial);
  }
  report.iterations = it;
  report.grad_norm = norm2(gp);
  if (report.grad_norm <= opts.grad_tol) {
    report.status = RelaxStatus::Converged;
  }
  report.final_energy = energy;
  report.lambda = fit_multiplier(chain);
  report.max_kappa_residual = max_kappa_residual(chain, report.lambda);
  return {chain, report};
}

}  // namespace hycat

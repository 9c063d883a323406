#include "gfc/volterra.hpp"

#include <cmath>
#include <cstdio>

#include "gfc/errors.hpp"
#include "gfc/gamma.hpp"

namespace gfc {

namespace {

// Exponent below which the series head is subtracted before time-stepping.
// The remainder then behaves like t^2.25 or better near 0, which linear
// product integration handles at full second order.
constexpr double kStartupExponentCut = 3.25;

struct KernelMoments {
  // Per-distance panel weights for the convolution sum
  //   (K * g)(t_i) ~= sum_l g_l wl[i-l] + g_{l+1} wr[i-l].
  std::vector<double> wl;  // index d = i - l, d >= 1
  std::vector<double> wr;

  // Weight applied to g_1 for the singular first panel, basis h_mu0:
  // w0[i] ~= int_0^h K(t_i - tau) h_mu0(tau) dtau / h_mu0(h).
  std::vector<double> w0;
};

KernelMoments build_moments(const Gps& kernel, const UniformGrid& grid,
                            bool singular_first, double mu0) {
  const int n = grid.n_steps;
  const double h = grid.h();
  KernelMoments m;
  m.wl.assign(n + 1, 0.0);
  m.wr.assign(n + 1, 0.0);
  for (const GpsTerm& term : kernel.terms()) {
    const double mu = term.exponent;
    const double c = term.coeff.real();
    const double rg1 = rgamma(mu + 1.0);
    const double rg2 = rgamma(mu + 2.0);
    double prev_p = 0.0;   // ((d-1)h)^mu
    double prev_p1 = 0.0;  // ((d-1)h)^(mu+1)
    for (int d = 1; d <= n; ++d) {
      const double s2 = d * h;
      const double p = std::pow(s2, mu);
      const double p1 = p * s2;
      const double a = (p - prev_p) * rg1;         // int h_mu over the band
      const double b = (p1 - prev_p1) * mu * rg2;  // int s h_mu(s) ds
      const double s1 = s2 - h;
      m.wl[d] += c * (b - s1 * a) / h;
      m.wr[d] += c * (s2 * a - b) / h;
      prev_p = p;
      prev_p1 = p1;
    }
  }
  if (singular_first) {
    m.w0.assign(n + 1, 0.0);
    const double basis_at_h = std::pow(h, mu0 - 1.0) * rgamma(mu0);
    // i = 1: both factors are singular on the panel; the cross moment
    // int (h-tau)^(mu-1) tau^(mu0-1) dtau is an exact Beta integral, i.e.
    // the convolution of the two h-terms evaluated at h.
    double exact = 0.0;
    for (const GpsTerm& term : kernel.terms()) {
      exact += term.coeff.real() * std::pow(h, term.exponent + mu0 - 1.0) *
               rgamma(term.exponent + mu0);
    }
    m.w0[1] = exact / basis_at_h;
    // i >= 2: the kernel is smooth on [t_{i-1}, t_i]; interpolate it
    // linearly and integrate the singular basis exactly.
    const double m0s = std::pow(h, mu0) * rgamma(mu0 + 1.0);
    const double m1s = std::pow(h, mu0 + 1.0) * mu0 * rgamma(mu0 + 2.0);
    for (int i = 2; i <= n; ++i) {
      const double k_right = kernel.eval(grid.node(i));      // tau = 0
      const double k_left = kernel.eval(grid.node(i - 1));   // tau = h
      m.w0[i] = (k_right * m0s + (k_left - k_right) * m1s / h) / basis_at_h;
    }
  }
  return m;
}

}  // namespace

UniformGrid::UniformGrid(double t_end_, int n_steps_)
    : t_end(t_end_), n_steps(n_steps_) {
  if (!(t_end > 0.0)) throw InvalidParameter("grid requires t_end > 0");
  if (n_steps < 8) throw InvalidParameter("grid requires n_steps >= 8");
}

SampledFunction sample(const Gps& f, const UniformGrid& grid) {
  if (f.has_delta())
    throw InvalidParameter("cannot sample a series with a Dirac part");
  SampledFunction s;
  s.grid = grid;
  s.values.resize(grid.n_steps + 1);
  const double lead = f.leading_exponent();
  if (lead < 1.0 - Gps::kExponentTol) {
    s.t0_singular = true;
    s.singular_exponent = lead;
    s.values[0] = 0.0;  // placeholder, excluded from norms
  } else {
    s.values[0] = f.h1_coeff().real();
  }
  for (int i = 1; i <= grid.n_steps; ++i) s.values[i] = f.eval(grid.node(i));
  return s;
}

SampledFunction conv_quadrature(const Gps& kernel, const SampledFunction& g) {
  if (kernel.has_delta())
    throw InvalidParameter("quadrature kernel must be delta-free");
  const UniformGrid& grid = g.grid;
  const int n = grid.n_steps;
  KernelMoments m =
      build_moments(kernel, grid, g.t0_singular, g.singular_exponent);

  SampledFunction out;
  out.grid = grid;
  out.values.assign(n + 1, 0.0);
  const double out_lead = kernel.leading_exponent() +
                          (g.t0_singular ? g.singular_exponent : 1.0) - 1.0;
  if (out_lead < 1.0 - Gps::kExponentTol) {
    out.t0_singular = true;
    out.singular_exponent = out_lead;
  }
  for (int i = 1; i <= n; ++i) {
    double acc = 0.0;
    int l0 = 0;
    if (g.t0_singular) {
      acc += m.w0[i] * g.values[1];
      l0 = 1;
    }
    for (int l = l0; l < i; ++l) {
      const int d = i - l;
      acc += g.values[l] * m.wl[d] + g.values[l + 1] * m.wr[d];
    }
    out.values[i] = acc;
  }
  return out;
}

VolterraReduction reduce_to_volterra(const IVProblem& problem) {
  problem.validate();
  const int m = problem.order();
  const double bm = problem.b.back();
  const Gps& kappa = problem.triple.kappa;

  // kappa^<1> .. kappa^<m+1>
  std::vector<Gps> pow(m + 2);
  pow[1] = kappa;
  for (int i = 2; i <= m + 1; ++i) pow[i] = conv(pow[i - 1], kappa);

  VolterraReduction red;
  red.kernel = Gps::zero();
  for (int n = 0; n < m; ++n) {
    if (problem.b[n] == 0.0) continue;
    red.kernel = add(red.kernel, pow[m - n].scaled(problem.b[n] / bm));
  }
  red.rhs = conv(pow[m], problem.forcing).scaled(1.0 / bm);
  for (int n = 1; n <= m; ++n) {
    if (problem.b[n] == 0.0) continue;
    for (int j = 0; j < n; ++j) {
      if (problem.c[j] == 0.0) continue;
      const Gps& kp = pow[m - n + j + 1];
      red.rhs = add(red.rhs, conv(kp, problem.triple.k1)
                                 .scaled(problem.b[n] * problem.c[j] / bm));
    }
  }
  return red;
}

SampledFunction solve_volterra_ivp(const IVProblem& problem,
                                   const UniformGrid& grid) {
  VolterraReduction red = reduce_to_volterra(problem);
  const Gps& K = red.kernel;
  const Gps& F = red.rhs;

  // Exactly known head of the solution: the Neumann terms of
  // y = F - K*y restricted to exponents <= the startup cut.
  Gps head = F.truncated_to(kStartupExponentCut);
  Gps term = head;
  int guard = 0;
  while (!term.is_zero()) {
    term = conv(K, term, kStartupExponentCut).scaled(-1.0);
    head = add(head, term);
    if (++guard > 100000)
      throw NonConvergence("startup series did not terminate");
  }
  // The head is an exact finite function, not a truncation artifact.
  Gps v(std::vector<GpsTerm>(head.terms()), 0.0);

  // Remainder equation: w + K*w = F - v - K*v =: Fw, whose coefficients
  // below the cut cancel by construction.
  Gps fw_full = sub(sub(F, v), conv(K, v));
  std::vector<GpsTerm> fw_terms;
  const double scale = std::max(1.0, F.max_abs_coeff());
  for (const GpsTerm& t : fw_full.terms()) {
    if (t.exponent <= kStartupExponentCut + Gps::kExponentTol) {
      if (std::abs(t.coeff) > 1e-9 * scale) {
        throw NumericalError(
            "startup subtraction failed to cancel low-order terms");
      }
      continue;
    }
    fw_terms.push_back(t);
  }
  Gps fw(std::move(fw_terms), 0.0, fw_full.truncation_cap(),
         fw_full.truncated());

  const int n = grid.n_steps;
  KernelMoments mom = build_moments(K, grid, false, 1.0);
  const double implicit = 1.0 + mom.wr[1];
  if (std::fabs(implicit) < 1e-12) {
    throw SingularStep(
        "implicit product-integration weight is singular at node 1");
  }

  std::vector<double> w(n + 1, 0.0);
  std::vector<double> fw_nodes(n + 1, 0.0);
  for (int i = 1; i <= n; ++i)
    fw_nodes[i] = fw.is_zero() ? 0.0 : fw.eval(grid.node(i));
  for (int i = 1; i <= n; ++i) {
    double hist = 0.0;
    for (int l = 0; l + 1 < i; ++l) {
      const int d = i - l;
      hist += w[l] * mom.wl[d] + w[l + 1] * mom.wr[d];
    }
    hist += w[i - 1] * mom.wl[1];
    w[i] = (fw_nodes[i] - hist) / implicit;
  }

  SampledFunction out;
  out.grid = grid;
  out.values.assign(n + 1, 0.0);
  const double lead = F.leading_exponent();
  if (lead < 1.0 - Gps::kExponentTol) {
    out.t0_singular = true;
    out.singular_exponent = lead;
    out.values[0] = 0.0;
  } else {
    out.values[0] = v.is_zero() ? 0.0 : v.h1_coeff().real();
  }
  for (int i = 1; i <= n; ++i) {
    out.values[i] = (v.is_zero() ? 0.0 : v.eval(grid.node(i))) + w[i];
  }
  return out;
}

}  // namespace gfc

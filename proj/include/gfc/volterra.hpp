#ifndef GFC_VOLTERRA_HPP
#define GFC_VOLTERRA_HPP

#include <vector>

#include "gfc/gps.hpp"
#include "gfc/solver.hpp"

namespace gfc {

struct UniformGrid {
  double t_end = 1.0;
  int n_steps = 1024;

  UniformGrid() = default;
  UniformGrid(double t_end_, int n_steps_);

  double h() const { return t_end / n_steps; }
  double node(int i) const { return t_end * i / n_steps; }
};

// Node values at t_i = i h, i = 0..n_steps.  When the represented function
// behaves like t^(mu-1) with mu < 1 near 0, the t = 0 node is flagged
// singular (its stored value is a placeholder) and carries the exponent so
// quadrature can integrate the first panel against the right basis.
struct SampledFunction {
  UniformGrid grid;
  std::vector<double> values;
  bool t0_singular = false;
  double singular_exponent = 1.0;
};

SampledFunction sample(const Gps& f, const UniformGrid& grid);

// Product-integration approximation of (kernel * g)(t_i): g is interpolated
// linearly on each panel and the weakly singular kernel moments
// int t^(mu-1) {1, t} dt are integrated exactly.  A singular-flagged first
// panel uses the t^(mu0-1) basis instead of the linear one.
SampledFunction conv_quadrature(const Gps& kernel, const SampledFunction& g);

// Second-kind Volterra form of an initial-value problem:
//   y(t) + (K * y)(t) = F(t),
// obtained by applying the m-fold integral to the equation and eliminating
// the derivative terms through the projector sums.
struct VolterraReduction {
  Gps kernel;  // K
  Gps rhs;     // F
};

VolterraReduction reduce_to_volterra(const IVProblem& problem);

// Time-stepping solve of the reduced equation by implicit product
// integration.  The exactly known low-exponent part of the solution is
// subtracted before stepping so that the grid unknown is smooth; this keeps
// second-order accuracy without graded meshes even when y ~ t^(alpha-1).
SampledFunction solve_volterra_ivp(const IVProblem& problem,
                                   const UniformGrid& grid);

}  // namespace gfc

#endif  // GFC_VOLTERRA_HPP

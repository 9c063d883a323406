#ifndef GFC_OPERATORS_HPP
#define GFC_OPERATORS_HPP

#include <vector>

#include "gfc/gps.hpp"
#include "gfc/kernel_catalog.hpp"

namespace gfc {

// Kernel triple plus the truncation budget shared by the operator chain.
struct OperatorContext {
  KernelTriple triple;
  double truncation_cap = std::numeric_limits<double>::infinity();
};

// General fractional integral: f -> kappa * f.
Gps gfi_apply(const OperatorContext& ctx, const Gps& f);

// n-fold integral: f -> kappa^<n> * f; n = 0 is the identity.
Gps gfi_nfold(const OperatorContext& ctx, const Gps& f, int n);

// Termwise d/dt.  h_mu -> h_{mu-1} needs mu > 1; exact constants (mu = 1)
// vanish.  Terms with mu < 1 and Dirac parts throw NotDifferentiable.
Gps gps_differentiate(const Gps& f);

// First-level general fractional derivative: I_{k1} . d/dt . I_{k2}.
// k1 = identity gives the Riemann-Liouville-type derivative d/dt (k2 * f);
// k2 = identity gives the regularized (Caputo-type) form k1 * f'.
Gps gfd_first_level(const OperatorContext& ctx, const Gps& f);

// n-fold sequential derivative; n = 0 is the identity.
Gps gfd_nfold(const OperatorContext& ctx, const Gps& f, int n);

struct ProjectorResult {
  double value = 0.0;  // (I_{k2} f)(0)
  Gps function;        // value * (kappa * k1)
};

// Initial-value projector P f = f - I_kappa D f = (I_{k2} f)(0) (kappa*k1).
// For series inputs the limit at 0+ is the h_1 coefficient of k2 * f; a
// leading exponent below 1 throws DivergentAtZero.
ProjectorResult projector_first_level(const OperatorContext& ctx,
                                      const Gps& f);

struct ProjectorNResult {
  std::vector<double> values;  // (I_{k2} D^<j> f)(0), j = 0..n-1
  Gps function;                // sum_j values[j] * (kappa^<j+1> * k1)
};

ProjectorNResult projector_nfold(const OperatorContext& ctx, const Gps& f,
                                 int n);

}  // namespace gfc

#endif  // GFC_OPERATORS_HPP

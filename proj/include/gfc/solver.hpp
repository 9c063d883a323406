#ifndef GFC_SOLVER_HPP
#define GFC_SOLVER_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gfc/conv_series.hpp"
#include "gfc/gps.hpp"
#include "gfc/kernel_catalog.hpp"
#include "gfc/polynomial.hpp"

namespace gfc {

// Initial-value problem
//   sum_{n=0..m} b_n (D^<n> y)(t) = f(t),
//   (I_{k2} D^<n> y)(0) = c_n,  n = 0..m-1,
// for the n-fold sequential first-level derivative of a kernel triple.
struct IVProblem {
  KernelTriple triple;
  std::vector<double> b;  // b_0..b_m with b_m != 0
  std::vector<double> c;  // c_0..c_{m-1}
  Gps forcing;

  int order() const { return static_cast<int>(b.size()) - 1; }
  void validate() const;
};

// Closed-form solution y = f * G + k1 * U.  The assembled series keeps its
// truncation metadata; eval() refuses points where the last retained
// exponent band contributes more than horizon_threshold of the series mass.
struct SolutionExpression {
  Gps G;
  Gps U;
  Gps forcing;
  Gps k1;
  Gps series;  // f * G + k1 * U
  double horizon_threshold = 1e-6;
  std::optional<PartialFractionDecomposition> g_decomposition;
  std::optional<PartialFractionDecomposition> u_decomposition;
  std::vector<std::string> notes;

  double eval(double t) const;
};

// Operator polynomials of the problem: P_m(S) = sum b_n S^n and
// Q_{m-1}(S) = sum_{n=1..m} b_n sum_{j=0..n-1} c_j S^{n-j-1}.
std::pair<Polynomial, Polynomial> build_rational(const IVProblem& problem);

// D y = f with (I_{k2} y)(0) = y0:  y = kappa * f + y0 (kappa * k1).
SolutionExpression solve_basic(const KernelTriple& triple, double y0,
                               const Gps& f);

// D y - lambda y = f:  y = l_{kappa,lambda} * f + y0 (l_{kappa,lambda} * k1).
SolutionExpression solve_relaxation(const KernelTriple& triple, double lambda,
                                    double y0, const Gps& f,
                                    int order = kDefaultSeriesOrder);

// Realization of a partial fraction decomposition of a proper rational
// function of S_kappa as a conventional series:
//   sum_{i,j} a_ij l^<j>_{kappa,lambda_i}.
// Conjugate pole pairs must recombine to a real series (ComplexResidue
// otherwise).
Gps materialize(const PartialFractionDecomposition& pfd, const Gps& kappa,
                int order = kDefaultSeriesOrder);

// General multi-term solve via P_m / Q_{m-1} and partial fractions.
SolutionExpression solve_multiterm(const IVProblem& problem,
                                   int order = kDefaultSeriesOrder);

}  // namespace gfc

#endif  // GFC_SOLVER_HPP

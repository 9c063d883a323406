#ifndef GFC_KERNEL_CATALOG_HPP
#define GFC_KERNEL_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "gfc/gps.hpp"

namespace gfc {

// A Sonin kernel of the series form
//   kappa(t) = t^(alpha-1) * sum_n a_n (lambda t^beta)^n,
// 0 < alpha < 1, beta > 0, a_0 != 0.  The associated kernel has the same
// shape with exponent -alpha and coefficients b_n determined by a
// triangular linear system.
struct SeriesKernelSpec {
  double alpha = 0.5;
  double beta = 1.0;
  double lambda = 0.0;
  std::vector<double> a_coeffs;

  void validate() const;  // throws InvalidParameter / DegenerateLeadingCoefficient
};

// A validated pair (kappa, k) with kappa * k = 1.
struct SoninPair {
  Gps kappa;
  Gps k;
  std::string family_tag;
  // Present when the pair came from (or can be written in) the series
  // form; needed to derive split triples.
  std::optional<SeriesKernelSpec> spec;
};

// A validated triple (kappa, k1, k2) with kappa * k1 * k2 = 1.  Triples
// with k1 = identity encode Riemann-Liouville-type derivatives, k2 =
// identity the regularized (Caputo-type) ones.
struct KernelTriple {
  Gps kappa;
  Gps k1;
  Gps k2;
  std::string family_tag;
};

struct ResidualReport {
  double constant_error = 0.0;  // |coefficient of h_1  -  1|
  double max_other = 0.0;       // largest retained off-identity coefficient
  double max() const { return std::max(constant_error, max_other); }
};

// Tolerance used when validating catalog pairs and triples.
inline constexpr double kResidualTol = 1e-10;
inline constexpr int kDefaultKernelTerms = 32;

// Solves the triangular system
//   Gamma(alpha)Gamma(1-alpha) a_0 b_0 = 1,
//   sum_{n=0..N} Gamma(beta n + alpha) Gamma(beta (N-n) + 1 - alpha)
//                a_n b_{N-n} = 0,   N = 1, 2, ...
// by forward substitution and returns the associated kernel
//   k(t) = t^(-alpha) sum_n b_n (lambda t^beta)^n
// as a series with exponents 1 - alpha + beta n.
Gps solve_associated_kernel(const SeriesKernelSpec& spec, int n_terms);

// Raw b_n coefficients of the same solve (for coefficient-level checks).
std::vector<double> associated_kernel_coefficients(const SeriesKernelSpec& spec,
                                                   int n_terms);

// Catalog pairs.  Each constructor validates the Sonin residual at the
// requested truncation order and throws TripleResidualTooLarge on failure.
SoninPair make_power_law_pair(double alpha);
SoninPair make_bessel_pair(double alpha, int n_terms = kDefaultKernelTerms);
SoninPair make_prabhakar_pair(double alpha, double beta, double gamma,
                              double lambda, int n_terms = kDefaultKernelTerms);
// kappa from the spec coefficients, k from the triangular solve.
SoninPair make_pair_from_spec(const SeriesKernelSpec& spec,
                              int n_terms = kDefaultKernelTerms);

// Catalog triples.
KernelTriple make_hilfer_triple(double alpha, double gamma);
KernelTriple make_rl_triple(const SoninPair& pair);
KernelTriple make_caputo_triple(const SoninPair& pair);
// Splits a series-form pair into (kappa, h_gamma, k2) where k2 is the
// Sonin associate of kappa * h_gamma; requires 0 < gamma < 1 - alpha.
KernelTriple make_split_triple(const SoninPair& pair, double gamma,
                               int n_terms = kDefaultKernelTerms);

// Residuals of the defining convolution identities, measured over the
// exponents retained after truncation.
ResidualReport sonin_residual(const Gps& kappa, const Gps& k);
ResidualReport triple_residual(const KernelTriple& triple);

}  // namespace gfc

#endif  // GFC_KERNEL_CATALOG_HPP

#ifndef GFC_SPECIAL_FUNCTIONS_HPP
#define GFC_SPECIAL_FUNCTIONS_HPP

#include <complex>

namespace gfc {

// Parameter pack for the Mittag-Leffler family as exposed by the CLI and
// JSON interfaces.  gamma = 1 selects the two-parameter function.
struct MLParams {
  double alpha = 1.0;
  double beta = 1.0;
  double gamma = 1.0;
};

// Two-parameter Mittag-Leffler function
//   E_{alpha,beta}(z) = sum_{n>=0} z^n / Gamma(alpha n + beta),  alpha > 0.
//
// Plain Taylor summation: terms are accumulated until 16 consecutive terms
// fall below 1e-15 (absolute and relative), with a hard cap of 10000 terms.
// Arguments too large for plain summation throw NonConvergence; there is no
// contour-integration fallback.
std::complex<double> mittag_leffler(double alpha, double beta,
                                    std::complex<double> z);
double mittag_leffler(double alpha, double beta, double z);

// Three-parameter (Prabhakar) function
//   E^gamma_{a,b}(z) = sum_{n>=0} (gamma)_n z^n / (n! Gamma(a n + b)),
// with a > 0 and the Pochhammer symbol (gamma)_n.  The first index
// multiplies n, matching the two-parameter convention: E^1_{a,b} = E_{a,b}.
// For gamma a negative integer the series terminates and is summed exactly.
std::complex<double> prabhakar(double a, double b, double gamma,
                               std::complex<double> z);
double prabhakar(double a, double b, double gamma, double z);

// E^m_{alpha, alpha m}(z) for integer m >= 1, the kernel of the m-fold
// convolution power of the resolvent series for power-law kernels.
double ml_power_type(int m, double alpha, double z);

}  // namespace gfc

#endif  // GFC_SPECIAL_FUNCTIONS_HPP

#ifndef GFC_GAMMA_HPP
#define GFC_GAMMA_HPP

namespace gfc {

// Gamma function on the real line, Lanczos approximation (g = 6.0246...,
// 13-term rational form) with the reflection formula for x < 0.5.
// Relative error is a few ulps for arguments of moderate size; overflows
// to +/-inf beyond x ~ 171.6.  Poles at 0, -1, -2, ... return +/-inf.
double gamma(double x);

// log|Gamma(x)|; finite wherever Gamma does not have a pole.
double log_gamma(double x);

// 1/Gamma(x).  Entire: returns 0 at the poles of Gamma and underflows
// gracefully to 0 for large x instead of producing inf/inf artifacts.
double rgamma(double x);

// Euler beta B(a, b) = Gamma(a)Gamma(b)/Gamma(a+b) for a, b > 0.
double beta(double a, double b);

}  // namespace gfc

#endif  // GFC_GAMMA_HPP

#ifndef GFC_GPS_HPP
#define GFC_GPS_HPP

#include <complex>
#include <limits>
#include <vector>

namespace gfc {

using Complex = std::complex<double>;

// One term c * h_mu(t) with h_mu(t) = t^(mu-1)/Gamma(mu), mu > 0.
struct GpsTerm {
  double exponent = 0.0;
  Complex coeff;
};

// A generalized power series: a finite linear combination of normalized
// power functions h_mu plus an optional multiple of the convolution
// identity (the Dirac part):
//
//   f = delta * I + sum_j coeff_j * h_{mu_j},   mu_j strictly increasing.
//
// Exponents within kExponentTol of each other are merged on construction.
// Laplace convolution acts termwise via h_a * h_b = h_{a+b}, so the type
// is closed under the ring operations.  Terms whose exponent exceeds the
// truncation cap are dropped and the drop is recorded in truncated().
//
// Values are immutable after construction; all operations return new
// series, so instances can be shared freely across threads.
class GeneralizedPowerSeries {
 public:
  static constexpr double kExponentTol = 1e-12;

  GeneralizedPowerSeries() = default;

  // Normalizing constructor: sorts, merges near-equal exponents, drops
  // exact-zero coefficients and terms beyond the cap.
  GeneralizedPowerSeries(std::vector<GpsTerm> terms, Complex delta,
                         double cap = std::numeric_limits<double>::infinity(),
                         bool truncated = false);

  static GeneralizedPowerSeries zero() { return {}; }
  static GeneralizedPowerSeries identity(Complex c = 1.0);
  static GeneralizedPowerSeries h(double mu, Complex coeff = 1.0);

  const std::vector<GpsTerm>& terms() const { return terms_; }
  Complex delta() const { return delta_; }
  double truncation_cap() const { return cap_; }
  bool truncated() const { return truncated_; }

  bool is_zero() const { return terms_.empty() && delta_ == Complex(0.0); }
  bool has_delta() const { return delta_ != Complex(0.0); }

  // Smallest term exponent; +inf when there are no terms.
  double leading_exponent() const;

  // Coefficient at the given exponent (0 if no term matches within tol).
  Complex coeff_at(double exponent) const;

  // The value at t -> 0+ of a delta-free series whose leading exponent is
  // >= 1: the coefficient of h_1.  Callers must check the leading exponent.
  Complex h1_coeff() const { return coeff_at(1.0); }

  double max_abs_coeff() const;

  // Pointwise evaluation at t > 0.  Terms are accumulated in order of
  // descending magnitude.  Throws EvalOfDistribution when delta != 0 and
  // InvalidParameter when t <= 0.
  Complex eval_complex(double t) const;

  // Real evaluation; throws ComplexResidue if the imaginary part of the
  // result exceeds 1e-9 relative to its magnitude.
  double eval(double t) const;

  // Copy with terms above `cap` dropped (flagging the drop).
  GeneralizedPowerSeries truncated_to(double cap) const;

  // Copy with imaginary parts zeroed.  Throws ComplexResidue if any
  // imaginary part exceeds tol * max(1, max coefficient magnitude).
  GeneralizedPowerSeries realified(double tol = 1e-9) const;

  GeneralizedPowerSeries scaled(Complex factor) const;

 private:
  std::vector<GpsTerm> terms_;
  Complex delta_{0.0};
  double cap_ = std::numeric_limits<double>::infinity();
  bool truncated_ = false;
};

using Gps = GeneralizedPowerSeries;

// Ring addition; the result cap is the min of the operand caps.
Gps add(const Gps& a, const Gps& b);
Gps sub(const Gps& a, const Gps& b);

// Laplace convolution (the ring product).  The result cap is
// min(a.cap, b.cap, cap) and terms beyond it are dropped.
Gps conv(const Gps& a, const Gps& b,
         double cap = std::numeric_limits<double>::infinity());

// n-fold convolution power; n = 0 is the identity series.
Gps conv_power(const Gps& a, int n,
               double cap = std::numeric_limits<double>::infinity());

inline Gps operator+(const Gps& a, const Gps& b) { return add(a, b); }
inline Gps operator-(const Gps& a, const Gps& b) { return sub(a, b); }
inline Gps operator*(Complex s, const Gps& a) { return a.scaled(s); }
inline Gps operator*(double s, const Gps& a) { return a.scaled(s); }

// Largest coefficient difference over the union of exponents <= cap.
double max_coeff_difference(
    const Gps& a, const Gps& b,
    double cap = std::numeric_limits<double>::infinity());

}  // namespace gfc

#endif  // GFC_GPS_HPP

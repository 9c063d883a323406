#include "gfc/special_functions.hpp"

#include <cmath>
#include <cstdio>

#include "gfc/errors.hpp"
#include "gfc/gamma.hpp"

namespace gfc {

namespace {

constexpr double kTolAbs = 1e-15;
constexpr double kTolRel = 1e-15;
constexpr int kQuietTerms = 16;
constexpr int kTermCap = 10000;

void check_argument_guard(double a, std::complex<double> z) {
  // Plain summation loses all digits long before the series diverges; the
  // guard bounds follow the desk-scale ranges this library is meant for.
  const double limit = (a >= 0.25) ? 50.0 : 10.0;
  if (std::abs(z) > limit) {
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "|z| = %.3g exceeds the plain-summation guard %.3g",
                  std::abs(z), limit);
    throw NonConvergence(buf);
  }
}

}  // namespace

std::complex<double> mittag_leffler(double alpha, double beta,
                                    std::complex<double> z) {
  if (!(alpha > 0.0)) throw InvalidParameter("mittag_leffler requires alpha > 0");
  check_argument_guard(alpha, z);
  std::complex<double> sum = 0.0;
  std::complex<double> zn = 1.0;
  double prev_mag = 0.0;
  int quiet = 0;
  for (int n = 0; n < kTermCap; ++n) {
    std::complex<double> term = zn * rgamma(alpha * n + beta);
    sum += term;
    double mag = std::abs(term);
    if (mag < kTolAbs && mag < kTolRel * std::max(1.0, std::abs(sum))) {
      if (++quiet >= kQuietTerms) return sum;
    } else {
      quiet = 0;
    }
    prev_mag = mag;
    zn *= z;
    if (!std::isfinite(std::abs(sum))) break;
  }
  char buf[128];
  std::snprintf(buf, sizeof buf,
                "Mittag-Leffler series did not settle within %d terms "
                "(last |term| = %.3g)",
                kTermCap, prev_mag);
  throw NonConvergence(buf);
}

double mittag_leffler(double alpha, double beta, double z) {
  return mittag_leffler(alpha, beta, std::complex<double>(z)).real();
}

std::complex<double> prabhakar(double a, double b, double gamma,
                               std::complex<double> z) {
  if (!(a > 0.0)) throw InvalidParameter("prabhakar requires first index > 0");
  check_argument_guard(a, z);
  std::complex<double> sum = 0.0;
  std::complex<double> zn = 1.0;
  // (gamma)_n / n!, updated by the Pochhammer recurrence
  // (gamma)_{n+1} = (gamma)_n (gamma + n).
  double poch_over_fact = 1.0;
  double prev_mag = 0.0;
  int quiet = 0;
  for (int n = 0; n < kTermCap; ++n) {
    std::complex<double> term = poch_over_fact * zn * rgamma(a * n + b);
    sum += term;
    double mag = std::abs(term);
    if (mag < kTolAbs && mag < kTolRel * std::max(1.0, std::abs(sum))) {
      if (++quiet >= kQuietTerms) return sum;
    } else {
      quiet = 0;
    }
    prev_mag = mag;
    poch_over_fact *= (gamma + n) / (n + 1.0);
    if (poch_over_fact == 0.0) return sum;  // negative-integer gamma terminates
    zn *= z;
    if (!std::isfinite(std::abs(sum))) break;
  }
  char buf[128];
  std::snprintf(buf, sizeof buf,
                "Prabhakar series did not settle within %d terms "
                "(last |term| = %.3g)",
                kTermCap, prev_mag);
  throw NonConvergence(buf);
}

double prabhakar(double a, double b, double gamma, double z) {
  return prabhakar(a, b, gamma, std::complex<double>(z)).real();
}

double ml_power_type(int m, double alpha, double z) {
  if (m < 1) throw InvalidParameter("ml_power_type requires m >= 1");
  return prabhakar(alpha, alpha * m, static_cast<double>(m), z);
}

}  // namespace gfc

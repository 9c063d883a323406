#include "gfc/conv_series.hpp"

#include <algorithm>

#include "gfc/errors.hpp"

namespace gfc {

ResolventSeries resolvent(const Gps& kappa, Complex lambda, int order) {
  if (kappa.has_delta())
    throw InvalidParameter("resolvent kernel must be delta-free");
  if (order < 1) throw InvalidParameter("resolvent order must be >= 1");
  if (kappa.is_zero()) {
    throw InvalidParameter("resolvent kernel must be nonzero");
  }
  const double cap =
      std::min(kappa.truncation_cap(),
               kappa.leading_exponent() * static_cast<double>(order + 1));

  ResolventSeries r;
  r.kernel = kappa;
  r.lambda = lambda;
  r.order = order;

  Gps power = kappa.truncated_to(cap);
  Gps sum = power;
  Complex lam_pow = 1.0;
  for (int n = 2; n <= order; ++n) {
    power = conv(power, kappa, cap);
    if (power.is_zero()) break;  // everything beyond the cap already
    lam_pow *= lambda;
    sum = add(sum, power.scaled(lam_pow));
  }
  // The n > order tail is always missing.
  r.series = Gps(std::vector<GpsTerm>(sum.terms()), sum.delta(), cap, true);
  return r;
}

Gps resolvent_power(const ResolventSeries& r, int m) {
  if (m < 1) throw InvalidParameter("resolvent power requires m >= 1");
  return conv_power(r.series, m);
}

Gps capital_L(const SoninPair& pair, Complex lambda, int order) {
  ResolventSeries r = resolvent(pair.kappa, lambda, order);
  return conv(r.series, pair.k);
}

}  // namespace gfc

#ifndef GFC_CONV_SERIES_HPP
#define GFC_CONV_SERIES_HPP

#include "gfc/gps.hpp"
#include "gfc/kernel_catalog.hpp"

namespace gfc {

inline constexpr int kDefaultSeriesOrder = 64;

// Materialized resolvent series
//   l_{kappa,lambda} = sum_{n=1..order} lambda^(n-1) kappa^<n>,
// the function realizing (S_kappa - lambda)^{-1}.  Retained exponents are
// capped at min(kappa's cap, leading(kappa) * (order + 1)), so every kept
// coefficient is complete; the dropped tail is recorded in the series'
// truncated() flag.
struct ResolventSeries {
  Gps kernel;
  Complex lambda = 0.0;
  int order = kDefaultSeriesOrder;
  Gps series;
};

ResolventSeries resolvent(const Gps& kappa, Complex lambda,
                          int order = kDefaultSeriesOrder);

// m-fold convolution power of the materialized resolvent, realizing
// ((S_kappa - lambda)^{-1})^m.
Gps resolvent_power(const ResolventSeries& r, int m);

// L_{kappa,lambda} = l_{kappa,lambda} * k for a Sonin pair (kappa, k);
// its constant term equals 1.
Gps capital_L(const SoninPair& pair, Complex lambda,
              int order = kDefaultSeriesOrder);

}  // namespace gfc

#endif  // GFC_CONV_SERIES_HPP

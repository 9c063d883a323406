#include "gfc/operators.hpp"

#include <cmath>
#include <cstdio>

#include "gfc/errors.hpp"

namespace gfc {

namespace {

// (I_{k2} f)(0) for a series argument: the h_1 coefficient of k2 * f.
// Exponents above 1 vanish at 0, an exponent below 1 diverges.
double limit_at_zero(const Gps& g) {
  double lead = g.leading_exponent();
  if (lead < 1.0 - Gps::kExponentTol) {
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "function diverges at t = 0 (leading exponent %.17g < 1)",
                  lead);
    throw DivergentAtZero(buf);
  }
  Complex c = g.h1_coeff();
  if (std::fabs(c.imag()) > 1e-9 * std::max(1.0, std::abs(c)))
    throw ComplexResidue("projector value has a non-negligible imaginary part");
  return c.real();
}

}  // namespace

Gps gfi_apply(const OperatorContext& ctx, const Gps& f) {
  if (f.has_delta())
    throw InvalidParameter("general fractional integral requires a delta-free input");
  return conv(ctx.triple.kappa, f, ctx.truncation_cap);
}

Gps gfi_nfold(const OperatorContext& ctx, const Gps& f, int n) {
  if (n < 0) throw InvalidParameter("n-fold integral requires n >= 0");
  if (n == 0) return f;
  if (f.has_delta())
    throw InvalidParameter("general fractional integral requires a delta-free input");
  return conv(conv_power(ctx.triple.kappa, n, ctx.truncation_cap), f,
              ctx.truncation_cap);
}

Gps gps_differentiate(const Gps& f) {
  if (f.has_delta())
    throw NotDifferentiable("cannot differentiate a series with a Dirac part");
  std::vector<GpsTerm> out;
  out.reserve(f.terms().size());
  for (const GpsTerm& t : f.terms()) {
    if (std::fabs(t.exponent - 1.0) <= Gps::kExponentTol) continue;  // constant
    if (t.exponent < 1.0) {
      char buf[128];
      std::snprintf(buf, sizeof buf,
                    "term with exponent %.17g < 1 has no derivative in the "
                    "admissible space",
                    t.exponent);
      throw NotDifferentiable(buf);
    }
    out.push_back({t.exponent - 1.0, t.coeff});
  }
  return Gps(std::move(out), 0.0, f.truncation_cap() - 1.0, f.truncated());
}

Gps gfd_first_level(const OperatorContext& ctx, const Gps& f) {
  Gps inner = conv(ctx.triple.k2, f, ctx.truncation_cap);
  Gps derived = gps_differentiate(inner);
  return conv(ctx.triple.k1, derived, ctx.truncation_cap);
}

Gps gfd_nfold(const OperatorContext& ctx, const Gps& f, int n) {
  if (n < 0) throw InvalidParameter("n-fold derivative requires n >= 0");
  Gps acc = f;
  for (int i = 0; i < n; ++i) acc = gfd_first_level(ctx, acc);
  return acc;
}

ProjectorResult projector_first_level(const OperatorContext& ctx,
                                      const Gps& f) {
  ProjectorResult res;
  res.value = limit_at_zero(conv(ctx.triple.k2, f, ctx.truncation_cap));
  res.function =
      conv(ctx.triple.kappa, ctx.triple.k1, ctx.truncation_cap).scaled(res.value);
  return res;
}

ProjectorNResult projector_nfold(const OperatorContext& ctx, const Gps& f,
                                 int n) {
  if (n < 1) throw InvalidParameter("n-fold projector requires n >= 1");
  ProjectorNResult res;
  res.values.reserve(n);
  res.function = Gps::zero();
  Gps stage = f;
  Gps kappa_power = ctx.triple.kappa;
  for (int j = 0; j < n; ++j) {
    if (j > 0) {
      stage = gfd_first_level(ctx, stage);
      kappa_power = conv(kappa_power, ctx.triple.kappa, ctx.truncation_cap);
    }
    double value = limit_at_zero(conv(ctx.triple.k2, stage, ctx.truncation_cap));
    res.values.push_back(value);
    res.function = add(res.function,
                       conv(kappa_power, ctx.triple.k1, ctx.truncation_cap)
                           .scaled(value));
  }
  return res;
}

}  // namespace gfc

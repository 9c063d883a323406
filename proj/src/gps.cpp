#include "gfc/gps.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "gfc/errors.hpp"
#include "gfc/gamma.hpp"

namespace gfc {

namespace {

bool finite(Complex c) {
  return std::isfinite(c.real()) && std::isfinite(c.imag());
}

}  // namespace

GeneralizedPowerSeries::GeneralizedPowerSeries(std::vector<GpsTerm> terms,
                                               Complex delta, double cap,
                                               bool truncated)
    : delta_(delta), cap_(cap), truncated_(truncated) {
  if (!finite(delta)) throw InvalidParameter("delta coefficient must be finite");
  std::sort(terms.begin(), terms.end(),
            [](const GpsTerm& a, const GpsTerm& b) {
              return a.exponent < b.exponent;
            });
  terms_.reserve(terms.size());
  for (const GpsTerm& t : terms) {
    if (!(t.exponent > 0.0)) {
      char buf[128];
      std::snprintf(buf, sizeof buf,
                    "term exponent must be > 0, got %.17g", t.exponent);
      throw InvalidParameter(buf);
    }
    if (!finite(t.coeff)) throw InvalidParameter("term coefficient must be finite");
    if (t.exponent > cap_ + kExponentTol) {
      truncated_ = true;
      continue;
    }
    if (!terms_.empty() &&
        t.exponent - terms_.back().exponent <= kExponentTol) {
      terms_.back().coeff += t.coeff;
    } else {
      terms_.push_back(t);
    }
  }
  // Canonical form: exact-zero coefficients are dropped.
  terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                              [](const GpsTerm& t) {
                                return t.coeff == Complex(0.0);
                              }),
               terms_.end());
}

GeneralizedPowerSeries GeneralizedPowerSeries::identity(Complex c) {
  GeneralizedPowerSeries s;
  s.delta_ = c;
  return s;
}

GeneralizedPowerSeries GeneralizedPowerSeries::h(double mu, Complex coeff) {
  return GeneralizedPowerSeries({{mu, coeff}}, 0.0);
}

double GeneralizedPowerSeries::leading_exponent() const {
  if (terms_.empty()) return std::numeric_limits<double>::infinity();
  return terms_.front().exponent;
}

Complex GeneralizedPowerSeries::coeff_at(double exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(),
                             exponent - kExponentTol,
                             [](const GpsTerm& t, double x) {
                               return t.exponent < x;
                             });
  if (it != terms_.end() && std::fabs(it->exponent - exponent) <= kExponentTol)
    return it->coeff;
  return 0.0;
}

double GeneralizedPowerSeries::max_abs_coeff() const {
  double m = std::abs(delta_);
  for (const GpsTerm& t : terms_) m = std::max(m, std::abs(t.coeff));
  return m;
}

Complex GeneralizedPowerSeries::eval_complex(double t) const {
  if (has_delta())
    throw EvalOfDistribution(
        "cannot evaluate a series with a nonzero Dirac part pointwise");
  if (!(t > 0.0)) throw InvalidParameter("evaluation point t must be > 0");
  std::vector<Complex> vals;
  vals.reserve(terms_.size());
  for (const GpsTerm& term : terms_) {
    // h_mu(t) = t^(mu-1)/Gamma(mu); rgamma keeps huge exponents harmless.
    vals.push_back(term.coeff * std::pow(t, term.exponent - 1.0) *
                   rgamma(term.exponent));
  }
  std::sort(vals.begin(), vals.end(), [](Complex a, Complex b) {
    return std::abs(a) > std::abs(b);
  });
  Complex sum = 0.0;
  for (Complex v : vals) sum += v;
  return sum;
}

double GeneralizedPowerSeries::eval(double t) const {
  Complex v = eval_complex(t);
  double scale = std::max(1.0, std::abs(v));
  if (std::fabs(v.imag()) > 1e-9 * scale) {
    throw ComplexResidue("series evaluation has a non-negligible imaginary part");
  }
  return v.real();
}

GeneralizedPowerSeries GeneralizedPowerSeries::truncated_to(double cap) const {
  GeneralizedPowerSeries out = *this;
  out.cap_ = std::min(cap_, cap);
  auto it = std::partition_point(out.terms_.begin(), out.terms_.end(),
                                 [&](const GpsTerm& t) {
                                   return t.exponent <= out.cap_ + kExponentTol;
                                 });
  if (it != out.terms_.end()) {
    out.terms_.erase(it, out.terms_.end());
    out.truncated_ = true;
  }
  return out;
}

GeneralizedPowerSeries GeneralizedPowerSeries::realified(double tol) const {
  double scale = std::max(1.0, max_abs_coeff());
  GeneralizedPowerSeries out = *this;
  if (std::fabs(delta_.imag()) > tol * scale)
    throw ComplexResidue("Dirac coefficient has a non-negligible imaginary part");
  out.delta_ = Complex(delta_.real(), 0.0);
  for (GpsTerm& t : out.terms_) {
    if (std::fabs(t.coeff.imag()) > tol * scale) {
      char buf[160];
      std::snprintf(buf, sizeof buf,
                    "imaginary residue %.3e at exponent %.17g exceeds %.1e",
                    t.coeff.imag(), t.exponent, tol * scale);
      throw ComplexResidue(buf);
    }
    t.coeff = Complex(t.coeff.real(), 0.0);
  }
  out.terms_.erase(std::remove_if(out.terms_.begin(), out.terms_.end(),
                                  [](const GpsTerm& t) {
                                    return t.coeff == Complex(0.0);
                                  }),
                   out.terms_.end());
  return out;
}

GeneralizedPowerSeries GeneralizedPowerSeries::scaled(Complex factor) const {
  std::vector<GpsTerm> t = terms_;
  for (GpsTerm& term : t) term.coeff *= factor;
  return GeneralizedPowerSeries(std::move(t), delta_ * factor, cap_,
                                truncated_);
}

Gps add(const Gps& a, const Gps& b) {
  std::vector<GpsTerm> t;
  t.reserve(a.terms().size() + b.terms().size());
  t.insert(t.end(), a.terms().begin(), a.terms().end());
  t.insert(t.end(), b.terms().begin(), b.terms().end());
  double cap = std::min(a.truncation_cap(), b.truncation_cap());
  return Gps(std::move(t), a.delta() + b.delta(), cap,
             a.truncated() || b.truncated());
}

Gps sub(const Gps& a, const Gps& b) { return add(a, b.scaled(-1.0)); }

Gps conv(const Gps& a, const Gps& b, double cap) {
  double eff_cap = std::min({a.truncation_cap(), b.truncation_cap(), cap});
  std::vector<GpsTerm> t;
  t.reserve(a.terms().size() * b.terms().size() + a.terms().size() +
            b.terms().size());
  bool dropped = false;
  // h_mu * h_nu = h_{mu+nu}; the Dirac parts act as convolution identity.
  for (const GpsTerm& ta : a.terms()) {
    if (b.has_delta()) t.push_back({ta.exponent, ta.coeff * b.delta()});
    for (const GpsTerm& tb : b.terms()) {
      double e = ta.exponent + tb.exponent;
      if (e > eff_cap + Gps::kExponentTol) {
        dropped = true;
        continue;
      }
      t.push_back({e, ta.coeff * tb.coeff});
    }
  }
  if (a.has_delta()) {
    for (const GpsTerm& tb : b.terms()) {
      t.push_back({tb.exponent, a.delta() * tb.coeff});
    }
  }
  return Gps(std::move(t), a.delta() * b.delta(), eff_cap,
             a.truncated() || b.truncated() || dropped);
}

Gps conv_power(const Gps& a, int n, double cap) {
  if (n < 0) throw InvalidParameter("convolution power requires n >= 0");
  if (n == 0) return Gps::identity(1.0);
  Gps acc = a.truncated_to(cap);
  for (int i = 1; i < n; ++i) acc = conv(acc, a, cap);
  return acc;
}

double max_coeff_difference(const Gps& a, const Gps& b, double cap) {
  Gps d = sub(a, b);
  double m = std::abs(d.delta());
  for (const GpsTerm& t : d.terms()) {
    if (t.exponent > cap + Gps::kExponentTol) break;
    m = std::max(m, std::abs(t.coeff));
  }
  return m;
}

}  // namespace gfc

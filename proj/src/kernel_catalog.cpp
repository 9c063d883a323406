#include "gfc/kernel_catalog.hpp"

#include <cmath>
#include <cstdio>

#include "gfc/errors.hpp"
#include "gfc/gamma.hpp"

namespace gfc {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw InvalidParameter(what);
}

// Largest gamma argument the direct evaluation can take without overflow.
constexpr double kGammaArgLimit = 170.0;

void check_orders(const SeriesKernelSpec& spec, int n_terms) {
  require(n_terms >= 1, "n_terms must be >= 1");
  if (spec.beta * n_terms + 1.0 > kGammaArgLimit) {
    throw InvalidParameter(
        "requested term count overflows direct gamma evaluation");
  }
}

// kappa as a series: coefficient of h_{beta n + alpha} is
// a_n lambda^n Gamma(beta n + alpha).
Gps spec_to_gps(const SeriesKernelSpec& spec, int n_terms) {
  std::vector<GpsTerm> terms;
  double lam_pow = 1.0;
  int count = std::min<int>(n_terms, static_cast<int>(spec.a_coeffs.size()));
  for (int n = 0; n < count; ++n) {
    double e = spec.beta * n + spec.alpha;
    terms.push_back({e, spec.a_coeffs[n] * lam_pow * gamma(e)});
    lam_pow *= spec.lambda;
  }
  // A polynomial kappa_1 (or lambda = 0) makes the series exact; otherwise
  // the cap marks the point up to which coefficients are complete.
  bool exact = spec.lambda == 0.0 ||
               static_cast<int>(spec.a_coeffs.size()) <= n_terms;
  double cap = exact ? std::numeric_limits<double>::infinity()
                     : spec.alpha + (n_terms - 0.5) * spec.beta;
  return Gps(std::move(terms), 0.0, cap, !exact);
}

void validate_pair(SoninPair& pair) {
  ResidualReport r = sonin_residual(pair.kappa, pair.k);
  if (r.max() > kResidualTol) {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "Sonin residual %.3e of %s exceeds %.1e",
                  r.max(), pair.family_tag.c_str(), kResidualTol);
    throw TripleResidualTooLarge(buf);
  }
}

void validate_triple(KernelTriple& triple) {
  ResidualReport r = triple_residual(triple);
  if (r.max() > kResidualTol) {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "triple residual %.3e of %s exceeds %.1e",
                  r.max(), triple.family_tag.c_str(), kResidualTol);
    throw TripleResidualTooLarge(buf);
  }
}

}  // namespace

void SeriesKernelSpec::validate() const {
  require(alpha > 0.0 && alpha < 1.0, "series kernel requires 0 < alpha < 1");
  require(beta > 0.0, "series kernel requires beta > 0");
  require(!a_coeffs.empty(), "series kernel requires at least one coefficient");
  if (a_coeffs[0] == 0.0) {
    throw DegenerateLeadingCoefficient(
        "leading series coefficient a_0 must be nonzero");
  }
  for (double a : a_coeffs) {
    require(std::isfinite(a), "series coefficients must be finite");
  }
}

std::vector<double> associated_kernel_coefficients(const SeriesKernelSpec& spec,
                                                   int n_terms) {
  spec.validate();
  check_orders(spec, n_terms);
  const double alpha = spec.alpha;
  const double beta = spec.beta;
  auto a = [&](int n) -> double {
    return n < static_cast<int>(spec.a_coeffs.size()) ? spec.a_coeffs[n] : 0.0;
  };
  std::vector<double> b(n_terms, 0.0);
  b[0] = 1.0 / (gamma(alpha) * gamma(1.0 - alpha) * a(0));
  for (int N = 1; N < n_terms; ++N) {
    double acc = 0.0;
    for (int n = 1; n <= N; ++n) {
      acc += gamma(beta * n + alpha) * gamma(beta * (N - n) + 1.0 - alpha) *
             a(n) * b[N - n];
    }
    b[N] = -acc / (gamma(alpha) * gamma(beta * N + 1.0 - alpha) * a(0));
  }
  return b;
}

Gps solve_associated_kernel(const SeriesKernelSpec& spec, int n_terms) {
  std::vector<double> b = associated_kernel_coefficients(spec, n_terms);
  std::vector<GpsTerm> terms;
  double lam_pow = 1.0;
  for (int n = 0; n < n_terms; ++n) {
    double e = spec.beta * n + 1.0 - spec.alpha;
    terms.push_back({e, b[n] * lam_pow * gamma(e)});
    lam_pow *= spec.lambda;
  }
  bool exact = spec.lambda == 0.0;
  double cap = exact ? std::numeric_limits<double>::infinity()
                     : 1.0 - spec.alpha + (n_terms - 0.5) * spec.beta;
  return Gps(std::move(terms), 0.0, cap, !exact);
}

SoninPair make_power_law_pair(double alpha) {
  require(alpha > 0.0 && alpha < 1.0, "power-law pair requires 0 < alpha < 1");
  SoninPair pair;
  pair.kappa = Gps::h(alpha);
  pair.k = Gps::h(1.0 - alpha);
  char tag[64];
  std::snprintf(tag, sizeof tag, "power_law(alpha=%g)", alpha);
  pair.family_tag = tag;
  pair.spec = SeriesKernelSpec{alpha, 1.0, 0.0, {rgamma(alpha)}};
  validate_pair(pair);
  return pair;
}

SoninPair make_bessel_pair(double alpha, int n_terms) {
  require(alpha > 0.0 && alpha < 1.0, "Bessel pair requires 0 < alpha < 1");
  // kappa(t) = sqrt(t)^(alpha-1) J_{alpha-1}(2 sqrt(t)) and
  // k(t) = sqrt(t)^(-alpha) I_{-alpha}(2 sqrt(t)); the ascending series of
  // the Bessel functions collapse to plain h-series:
  //   kappa = sum_m (-1)^m/m! h_{alpha+m},   k = sum_m 1/m! h_{1-alpha+m}.
  SeriesKernelSpec spec;
  spec.alpha = alpha;
  spec.beta = 1.0;
  spec.lambda = 1.0;
  spec.a_coeffs.resize(n_terms);
  double sign = 1.0;
  double fact = 1.0;
  std::vector<GpsTerm> kt, bt;
  for (int m = 0; m < n_terms; ++m) {
    spec.a_coeffs[m] = sign / fact * rgamma(m + alpha);
    kt.push_back({alpha + m, sign / fact});
    bt.push_back({1.0 - alpha + m, 1.0 / fact});
    sign = -sign;
    fact *= (m + 1.0);
  }
  double cap_k = alpha + (n_terms - 0.5);
  double cap_b = 1.0 - alpha + (n_terms - 0.5);
  SoninPair pair;
  pair.kappa = Gps(std::move(kt), 0.0, cap_k, true);
  pair.k = Gps(std::move(bt), 0.0, cap_b, true);
  char tag[64];
  std::snprintf(tag, sizeof tag, "bessel(alpha=%g)", alpha);
  pair.family_tag = tag;
  pair.spec = spec;
  validate_pair(pair);
  return pair;
}

SoninPair make_prabhakar_pair(double alpha, double beta, double gamma_,
                              double lambda, int n_terms) {
  require(alpha > 0.0 && alpha < 1.0,
          "Prabhakar pair requires 0 < alpha < 1");
  require(beta > 0.0, "Prabhakar pair requires beta > 0");
  // kappa(t) = t^(alpha-1) E^{gamma}_{beta,alpha}(-lambda t^beta),
  // k(t)     = t^(-alpha)  E^{-gamma}_{beta,1-alpha}(-lambda t^beta).
  // As h-series the coefficients reduce to Pochhammer ratios:
  //   coeff of h_{alpha+beta n} in kappa: (-lambda)^n (gamma)_n / n!
  //   coeff of h_{1-alpha+beta n} in k:   (-lambda)^n (-gamma)_n / n!
  SeriesKernelSpec spec;
  spec.alpha = alpha;
  spec.beta = beta;
  spec.lambda = lambda;
  spec.a_coeffs.resize(n_terms);
  std::vector<GpsTerm> kt, bt;
  double poch_p = 1.0, poch_m = 1.0;  // (gamma)_n/n!, (-gamma)_n/n!
  double mlam_pow = 1.0;              // (-lambda)^n
  double sign = 1.0;                  // (-1)^n
  for (int n = 0; n < n_terms; ++n) {
    spec.a_coeffs[n] = sign * poch_p * rgamma(beta * n + alpha);
    kt.push_back({alpha + beta * n, mlam_pow * poch_p});
    bt.push_back({1.0 - alpha + beta * n, mlam_pow * poch_m});
    poch_p *= (gamma_ + n) / (n + 1.0);
    poch_m *= (-gamma_ + n) / (n + 1.0);
    mlam_pow *= -lambda;
    sign = -sign;
  }
  bool exact = lambda == 0.0;
  double inf = std::numeric_limits<double>::infinity();
  SoninPair pair;
  pair.kappa = Gps(std::move(kt), 0.0,
                   exact ? inf : alpha + (n_terms - 0.5) * beta, !exact);
  pair.k = Gps(std::move(bt), 0.0,
               exact ? inf : 1.0 - alpha + (n_terms - 0.5) * beta, !exact);
  char tag[96];
  std::snprintf(tag, sizeof tag,
                "prabhakar(alpha=%g, beta=%g, gamma=%g, lambda=%g)", alpha,
                beta, gamma_, lambda);
  pair.family_tag = tag;
  pair.spec = spec;
  validate_pair(pair);
  return pair;
}

SoninPair make_pair_from_spec(const SeriesKernelSpec& spec, int n_terms) {
  spec.validate();
  check_orders(spec, n_terms);
  SoninPair pair;
  pair.kappa = spec_to_gps(spec, n_terms);
  pair.k = solve_associated_kernel(spec, n_terms);
  char tag[64];
  std::snprintf(tag, sizeof tag, "custom(alpha=%g, beta=%g)", spec.alpha,
                spec.beta);
  pair.family_tag = tag;
  pair.spec = spec;
  validate_pair(pair);
  return pair;
}

KernelTriple make_hilfer_triple(double alpha, double gamma_) {
  require(alpha > 0.0 && alpha < 1.0, "Hilfer triple requires 0 < alpha < 1");
  require(gamma_ > 0.0 && gamma_ < 1.0 - alpha,
          "Hilfer triple requires 0 < gamma < 1 - alpha");
  KernelTriple triple;
  triple.kappa = Gps::h(alpha);
  triple.k1 = Gps::h(gamma_);
  triple.k2 = Gps::h(1.0 - alpha - gamma_);
  char tag[64];
  std::snprintf(tag, sizeof tag, "hilfer(alpha=%g, gamma=%g)", alpha, gamma_);
  triple.family_tag = tag;
  validate_triple(triple);
  return triple;
}

KernelTriple make_rl_triple(const SoninPair& pair) {
  KernelTriple triple;
  triple.kappa = pair.kappa;
  triple.k1 = Gps::identity();
  triple.k2 = pair.k;
  triple.family_tag = "rl_type[" + pair.family_tag + "]";
  validate_triple(triple);
  return triple;
}

KernelTriple make_caputo_triple(const SoninPair& pair) {
  KernelTriple triple;
  triple.kappa = pair.kappa;
  triple.k1 = pair.k;
  triple.k2 = Gps::identity();
  triple.family_tag = "caputo_type[" + pair.family_tag + "]";
  validate_triple(triple);
  return triple;
}

KernelTriple make_split_triple(const SoninPair& pair, double gamma_,
                               int n_terms) {
  if (!pair.spec) {
    throw InvalidParameter(
        "split triple requires a pair in series-kernel form");
  }
  const SeriesKernelSpec& spec = *pair.spec;
  require(gamma_ > 0.0 && gamma_ < 1.0 - spec.alpha,
          "split triple requires 0 < gamma < 1 - alpha");
  // k2 is the Sonin associate of kappa * h_gamma, which is again of the
  // series form with leading exponent alpha + gamma:
  //   a'_n = a_n Gamma(beta n + alpha) / Gamma(beta n + alpha + gamma).
  SeriesKernelSpec shifted;
  shifted.alpha = spec.alpha + gamma_;
  shifted.beta = spec.beta;
  shifted.lambda = spec.lambda;
  shifted.a_coeffs.resize(spec.a_coeffs.size());
  for (size_t n = 0; n < spec.a_coeffs.size(); ++n) {
    double e = spec.beta * static_cast<double>(n) + spec.alpha;
    shifted.a_coeffs[n] = spec.a_coeffs[n] * gamma(e) * rgamma(e + gamma_);
  }
  KernelTriple triple;
  triple.kappa = pair.kappa;
  triple.k1 = Gps::h(gamma_);
  triple.k2 = solve_associated_kernel(shifted, n_terms);
  char tag[96];
  std::snprintf(tag, sizeof tag, "split[%s, gamma=%g]",
                pair.family_tag.c_str(), gamma_);
  triple.family_tag = tag;
  validate_triple(triple);
  return triple;
}

namespace {

ResidualReport residual_of(const Gps& product) {
  ResidualReport r;
  r.constant_error = std::abs(product.coeff_at(1.0) - Complex(1.0));
  r.max_other = std::abs(product.delta());
  for (const GpsTerm& t : product.terms()) {
    if (std::fabs(t.exponent - 1.0) <= Gps::kExponentTol) continue;
    r.max_other = std::max(r.max_other, std::abs(t.coeff));
  }
  return r;
}

}  // namespace

ResidualReport sonin_residual(const Gps& kappa, const Gps& k) {
  return residual_of(conv(kappa, k));
}

ResidualReport triple_residual(const KernelTriple& triple) {
  return residual_of(conv(conv(triple.kappa, triple.k1), triple.k2));
}

}  // namespace gfc

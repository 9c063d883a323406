#include <cmath>
#include <random>

#include <doctest.h>

#include "gfc/errors.hpp"
#include "gfc/gamma.hpp"
#include "gfc/gps.hpp"
#include "gfc/volterra.hpp"

using gfc::Gps;
using gfc::GpsTerm;

namespace {

Gps random_series(std::mt19937& rng, int max_terms, double min_exp,
                  double max_exp) {
  std::uniform_int_distribution<int> n_terms(1, max_terms);
  std::uniform_real_distribution<double> exp_dist(min_exp, max_exp);
  std::uniform_real_distribution<double> coeff_dist(-2.0, 2.0);
  std::vector<GpsTerm> terms;
  int n = n_terms(rng);
  for (int i = 0; i < n; ++i)
    terms.push_back({exp_dist(rng), coeff_dist(rng)});
  return Gps(std::move(terms), 0.0);
}

}  // namespace

TEST_CASE("construction normalizes and validates") {
  Gps s({{0.5, 1.0}, {0.5, 1.0}}, 0.0);
  REQUIRE(s.terms().size() == 1);
  CHECK(s.terms()[0].coeff.real() == doctest::Approx(2.0));

  CHECK_THROWS_AS(Gps({{0.0, 1.0}}, 0.0), gfc::InvalidParameter);
  CHECK_THROWS_AS(Gps({{-0.5, 1.0}}, 0.0), gfc::InvalidParameter);
  CHECK_THROWS_AS(Gps({{0.5, std::nan("")}}, 0.0), gfc::InvalidParameter);

  // Exact cancellation leaves the canonical zero series.
  Gps z = gfc::add(Gps::identity(1.0), Gps::identity(-1.0));
  CHECK(z.is_zero());
}

TEST_CASE("addition merges like terms") {
  Gps two_h = gfc::add(Gps::h(0.5), Gps::h(0.5));
  REQUIRE(two_h.terms().size() == 1);
  CHECK(two_h.terms()[0].coeff.real() == doctest::Approx(2.0));

  Gps mixed = gfc::add(Gps::h(0.5), Gps::h(1.0));
  CHECK(mixed.terms().size() == 2);
}

TEST_CASE("convolution acts termwise on exponents") {
  // h_{1/2} * h_{1/2} = h_1, the classical Abel pair.
  Gps one = gfc::conv(Gps::h(0.5), Gps::h(0.5));
  REQUIRE(one.terms().size() == 1);
  CHECK(one.terms()[0].exponent == doctest::Approx(1.0));
  CHECK(one.terms()[0].coeff.real() == doctest::Approx(1.0));
  CHECK(one.eval(0.73) == doctest::Approx(1.0));

  Gps f = gfc::add(Gps::h(0.6, 1.25), Gps::h(2.0, -0.5));
  Gps same = gfc::conv(Gps::identity(), f);
  CHECK(gfc::max_coeff_difference(f, same) == 0.0);

  Gps g = gfc::conv(Gps::h(0.5), Gps::h(0.25));
  REQUIRE(g.terms().size() == 1);
  CHECK(g.terms()[0].exponent == doctest::Approx(0.75));
}

TEST_CASE("convolution powers") {
  Gps p0 = gfc::conv_power(Gps::h(0.5), 0);
  CHECK(p0.has_delta());
  CHECK(p0.delta().real() == doctest::Approx(1.0));
  CHECK(p0.terms().empty());

  Gps p4 = gfc::conv_power(Gps::h(0.5), 4);
  REQUIRE(p4.terms().size() == 1);
  CHECK(p4.terms()[0].exponent == doctest::Approx(2.0));

  for (int n : {1, 3, 7}) {
    Gps pn = gfc::conv_power(Gps::h(1.0), n);
    REQUIRE(pn.terms().size() == 1);
    CHECK(pn.terms()[0].exponent == doctest::Approx(static_cast<double>(n)));
  }
}

TEST_CASE("evaluation") {
  CHECK(Gps::h(1.0).eval(0.37) == doctest::Approx(1.0));
  CHECK(Gps::h(2.0).eval(3.0) == doctest::Approx(3.0));
  // h_{1/2}(1) = 1/Gamma(1/2) = 1/sqrt(pi)
  CHECK(Gps::h(0.5).eval(1.0) ==
        doctest::Approx(0.56418958354775628695).epsilon(1e-14));

  CHECK_THROWS_AS(Gps::identity().eval(1.0), gfc::EvalOfDistribution);
  CHECK_THROWS_AS(Gps::h(1.0).eval(0.0), gfc::InvalidParameter);
}

TEST_CASE("scaling") {
  Gps f = gfc::add(Gps::h(0.5, 2.0), Gps::h(1.5, -1.0));
  CHECK(f.scaled(0.0).is_zero());
  CHECK(gfc::max_coeff_difference(f.scaled(1.0), f) == 0.0);
  Gps g = Gps::h(0.5).scaled(-2.0);
  REQUIRE(g.terms().size() == 1);
  CHECK(g.terms()[0].coeff.real() == doctest::Approx(-2.0));
}

TEST_CASE("ring laws on random series") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 40; ++trial) {
    Gps a = random_series(rng, 4, 0.2, 3.0);
    Gps b = random_series(rng, 4, 0.2, 3.0);
    Gps c = random_series(rng, 4, 0.2, 3.0);

    CHECK(gfc::max_coeff_difference(gfc::conv(a, b), gfc::conv(b, a)) <=
          1e-12);
    CHECK(gfc::max_coeff_difference(gfc::conv(gfc::conv(a, b), c),
                                    gfc::conv(a, gfc::conv(b, c))) <= 1e-12);
    CHECK(gfc::max_coeff_difference(
              gfc::conv(a, gfc::add(b, c)),
              gfc::add(gfc::conv(a, b), gfc::conv(a, c))) <= 1e-12);
  }
}

TEST_CASE("power additivity within truncation") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    Gps a = random_series(rng, 3, 0.3, 1.5);
    for (auto [m, n] : {std::pair{1, 1}, {1, 2}, {2, 3}}) {
      Gps lhs = gfc::conv_power(a, m + n);
      Gps rhs = gfc::conv(gfc::conv_power(a, m), gfc::conv_power(a, n));
      CHECK(gfc::max_coeff_difference(lhs, rhs) <= 1e-10);
    }
  }
}

TEST_CASE("leading-term asymptotics at t -> 0+") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> lead_dist(0.2, 1.0);
  std::uniform_real_distribution<double> gap_dist(0.6, 1.2);
  std::uniform_real_distribution<double> coeff_dist(0.5, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    // Exponent gaps >= 0.6 make the remainder O(t^0.6) of the lead term.
    std::vector<GpsTerm> terms;
    double e = lead_dist(rng);
    for (int i = 0; i < 4; ++i) {
      terms.push_back({e, coeff_dist(rng)});
      e += gap_dist(rng);
    }
    Gps a(std::move(terms), 0.0);
    const auto& lead = a.terms().front();
    double t = 1e-8;
    double expected = lead.coeff.real() * std::pow(t, lead.exponent - 1.0) *
                      gfc::rgamma(lead.exponent);
    CHECK(a.eval(t) == doctest::Approx(expected).epsilon(1e-4));
  }
}

TEST_CASE("convolution matches product-integration quadrature") {
  // Independent numeric route: sample b, convolve with kernel a on a fine
  // grid, compare at interior points.  Exponents >= 1.25 keep the
  // quadrature itself at full second order.
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 5; ++trial) {
    Gps a = random_series(rng, 3, 1.25, 3.0);
    Gps b = random_series(rng, 3, 1.25, 3.0);
    Gps exact = gfc::conv(a, b);

    gfc::UniformGrid grid(1.0, 4096);
    gfc::SampledFunction bs = gfc::sample(b, grid);
    gfc::SampledFunction approx = gfc::conv_quadrature(a, bs);
    for (double t : {0.25, 0.5, 1.0}) {
      int i = static_cast<int>(std::lround(t * grid.n_steps));
      double want = exact.eval(t);
      CAPTURE(trial);
      CAPTURE(t);
      CHECK(std::fabs(approx.values[i] - want) <=
            1e-6 * std::max(1.0, std::fabs(want)));
    }
  }
}

TEST_CASE("truncation caps propagate and flag drops") {
  Gps a = Gps::h(0.5);
  Gps capped = gfc::conv(a, Gps::h(0.7), 1.0);
  CHECK(capped.terms().empty());
  CHECK(capped.truncated());

  Gps kept = gfc::conv(a, Gps::h(0.4), 1.0);
  CHECK(kept.terms().size() == 1);
  CHECK_FALSE(kept.truncated());

  // add() keeps the tighter cap of its inputs.
  Gps sum = gfc::add(capped, Gps::h(0.3));
  CHECK(sum.truncation_cap() == doctest::Approx(1.0));
  CHECK(sum.truncated());
}

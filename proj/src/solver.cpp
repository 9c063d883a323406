#include "gfc/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "gfc/errors.hpp"
#include "gfc/gamma.hpp"

namespace gfc {

void IVProblem::validate() const {
  if (b.size() < 2)
    throw InvalidParameter("problem requires degree m >= 1 (b_0..b_m)");
  if (b.back() == 0.0)
    throw InvalidParameter("leading coefficient b_m must be nonzero");
  for (double x : b)
    if (!std::isfinite(x)) throw InvalidParameter("b coefficients must be finite");
  for (double x : c)
    if (!std::isfinite(x)) throw InvalidParameter("initial values must be finite");
  if (static_cast<int>(c.size()) != order())
    throw InvalidParameter("initial value count must equal the degree m");
  if (forcing.has_delta())
    throw InvalidParameter("forcing term must be delta-free");
}

double SolutionExpression::eval(double t) const {
  if (series.has_delta())
    throw EvalOfDistribution("solution series has a Dirac part");
  if (!(t > 0.0)) throw InvalidParameter("evaluation point t must be > 0");
  double mass = 0.0;
  double last_mag = 0.0;
  std::vector<double> vals;
  vals.reserve(series.terms().size());
  for (const GpsTerm& term : series.terms()) {
    double v = term.coeff.real() * std::pow(t, term.exponent - 1.0) *
               rgamma(term.exponent);
    vals.push_back(v);
    mass += std::fabs(v);
    last_mag = std::fabs(v);  // terms are sorted: this is the last band
  }
  if (series.truncated() && mass > 0.0 && last_mag / mass > horizon_threshold) {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "truncation horizon exceeded at t = %.6g: last exponent "
                  "band contributes %.3e of the series mass (threshold %.1e)",
                  t, last_mag / mass, horizon_threshold);
    throw NonConvergence(buf);
  }
  std::sort(vals.begin(), vals.end(),
            [](double a, double b) { return std::fabs(a) > std::fabs(b); });
  double sum = 0.0;
  for (double v : vals) sum += v;
  return sum;
}

std::pair<Polynomial, Polynomial> build_rational(const IVProblem& problem) {
  problem.validate();
  const int m = problem.order();
  Polynomial p(problem.b);
  std::vector<double> q(std::max(m, 1), 0.0);
  for (int n = 1; n <= m; ++n)
    for (int j = 0; j < n; ++j)
      q[n - j - 1] += problem.b[n] * problem.c[j];
  return {p, Polynomial(std::move(q))};
}

namespace {

SolutionExpression assemble(Gps G, Gps U, const Gps& f, const Gps& k1) {
  SolutionExpression sol;
  sol.G = std::move(G);
  sol.U = std::move(U);
  sol.forcing = f;
  sol.k1 = k1;
  sol.series = add(conv(sol.forcing, sol.G), conv(sol.k1, sol.U)).realified();
  return sol;
}

}  // namespace

SolutionExpression solve_basic(const KernelTriple& triple, double y0,
                               const Gps& f) {
  if (f.has_delta()) throw InvalidParameter("forcing term must be delta-free");
  return assemble(triple.kappa, triple.kappa.scaled(y0), f, triple.k1);
}

SolutionExpression solve_relaxation(const KernelTriple& triple, double lambda,
                                    double y0, const Gps& f, int order) {
  if (f.has_delta()) throw InvalidParameter("forcing term must be delta-free");
  ResolventSeries r = resolvent(triple.kappa, lambda, order);
  return assemble(r.series, r.series.scaled(y0), f, triple.k1);
}

Gps materialize(const PartialFractionDecomposition& pfd, const Gps& kappa,
                int order) {
  Gps acc = Gps::zero();
  for (const PoleGroup& g : pfd.poles) {
    ResolventSeries r = resolvent(kappa, g.location, order);
    Gps power = r.series;
    for (int j = 0; j < g.multiplicity; ++j) {
      if (j > 0) power = conv(power, r.series);
      acc = add(acc, power.scaled(g.residues[j]));
    }
  }
  return acc.realified();
}

namespace {

// Removes roots shared (within kRootClusterTol) between numerator and
// denominator of Q/P before decomposing.  Returns a note when it fires.
RationalOperator cancel_common_roots(const Polynomial& q, const Polynomial& p,
                                     std::vector<std::string>* notes) {
  RationalOperator out{q, p};
  if (q.degree() < 1) return out;
  std::vector<Complex> pr = polynomial_roots(p);
  std::vector<Complex> qr = polynomial_roots(q);
  std::vector<bool> q_used(qr.size(), false);
  std::vector<bool> p_drop(pr.size(), false);
  int cancelled = 0;
  for (size_t i = 0; i < pr.size(); ++i) {
    for (size_t j = 0; j < qr.size(); ++j) {
      if (!q_used[j] && std::abs(pr[i] - qr[j]) <= kRootClusterTol) {
        q_used[j] = true;
        p_drop[i] = true;
        ++cancelled;
        break;
      }
    }
  }
  if (cancelled == 0) return out;

  auto rebuild = [](const std::vector<Complex>& roots,
                    const std::vector<bool>& drop, double leading) {
    std::vector<Complex> acc = {leading};  // ascending coefficients
    for (size_t i = 0; i < roots.size(); ++i) {
      if (drop[i]) continue;
      std::vector<Complex> next(acc.size() + 1, 0.0);
      for (size_t k = 0; k < acc.size(); ++k) {
        next[k + 1] += acc[k];
        next[k] -= roots[i] * acc[k];
      }
      acc = std::move(next);
    }
    // Conjugate pairs make the product real up to rounding.
    std::vector<double> real_coeffs(acc.size());
    for (size_t i = 0; i < acc.size(); ++i) real_coeffs[i] = acc[i].real();
    return Polynomial(std::move(real_coeffs));
  };
  std::vector<bool> q_drop = q_used;
  out.numerator = rebuild(qr, q_drop, q.leading());
  out.denominator = rebuild(pr, p_drop, p.leading());
  char buf[128];
  std::snprintf(buf, sizeof buf,
                "cancelled %d common root(s) of Q and P within %.1e",
                cancelled, kRootClusterTol);
  notes->push_back(buf);
  return out;
}

}  // namespace

SolutionExpression solve_multiterm(const IVProblem& problem, int order) {
  problem.validate();
  auto [p, q] = build_rational(problem);

  RationalOperator g_rat{Polynomial::constant(1.0), p};
  PartialFractionDecomposition g_pfd = partial_fractions(g_rat);
  Gps g_series = materialize(g_pfd, problem.triple.kappa, order);

  std::vector<std::string> notes;
  Gps u_series = Gps::zero();
  std::optional<PartialFractionDecomposition> u_pfd;
  if (!q.is_zero()) {
    RationalOperator u_rat = cancel_common_roots(q, p, &notes);
    u_rat.validate();
    u_pfd = partial_fractions(u_rat);
    u_series = materialize(*u_pfd, problem.triple.kappa, order);
  }

  SolutionExpression sol =
      assemble(std::move(g_series), std::move(u_series), problem.forcing,
               problem.triple.k1);
  sol.g_decomposition = std::move(g_pfd);
  sol.u_decomposition = std::move(u_pfd);
  sol.notes = std::move(notes);
  return sol;
}

}  // namespace gfc

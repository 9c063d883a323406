#include "gfc/polynomial.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdio>

#include "gfc/errors.hpp"

namespace gfc {

using Cplx = std::complex<double>;

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  for (double c : coeffs_) {
    if (!std::isfinite(c))
      throw InvalidParameter("polynomial coefficients must be finite");
  }
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double Polynomial::leading() const {
  if (coeffs_.empty()) throw InvalidParameter("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Cplx Polynomial::eval(Cplx z) const {
  Cplx acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * z + *it;
  return acc;
}

double Polynomial::eval(double z) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * z + *it;
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<double> c(std::max(a.coeffs().size(), b.coeffs().size()), 0.0);
  for (size_t i = 0; i < a.coeffs().size(); ++i) c[i] += a.coeffs()[i];
  for (size_t i = 0; i < b.coeffs().size(); ++i) c[i] += b.coeffs()[i];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial::zero();
  std::vector<double> c(a.coeffs().size() + b.coeffs().size() - 1, 0.0);
  for (size_t i = 0; i < a.coeffs().size(); ++i)
    for (size_t j = 0; j < b.coeffs().size(); ++j)
      c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return Polynomial(std::move(c));
}

Polynomial operator*(double s, const Polynomial& a) {
  std::vector<double> c = a.coeffs();
  for (double& x : c) x *= s;
  return Polynomial(std::move(c));
}

namespace {

// Parlett-Reinsch style balancing: scale row/column pairs by powers of two
// until their norms are comparable.  Keeps eigenvalues intact while taming
// wildly scaled companion matrices.
void balance_matrix(Eigen::MatrixXd& m) {
  const int n = static_cast<int>(m.rows());
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      double row = m.row(i).lpNorm<1>() - std::fabs(m(i, i));
      double col = m.col(i).lpNorm<1>() - std::fabs(m(i, i));
      if (row == 0.0 || col == 0.0) continue;
      double f = 1.0;
      while (col < row / 2.0) {
        col *= 2.0;
        row /= 2.0;
        f *= 2.0;
      }
      while (col > row * 2.0) {
        col /= 2.0;
        row *= 2.0;
        f /= 2.0;
      }
      if (f != 1.0) {
        m.row(i) /= f;
        m.col(i) *= f;
        changed = true;
      }
    }
  }
}

}  // namespace

std::vector<Cplx> polynomial_roots(const Polynomial& p) {
  const int d = p.degree();
  if (d < 1) throw InvalidParameter("root finding requires degree >= 1");
  const double lc = p.leading();
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    companion(i, d - 1) = -p.coeffs()[i] / lc;
    if (i + 1 < d) companion(i + 1, i) = 1.0;
  }
  balance_matrix(companion);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw IllConditioned("companion-matrix eigenvalue iteration failed");
  std::vector<Cplx> roots(d);
  for (int i = 0; i < d; ++i) roots[i] = solver.eigenvalues()[i];
  std::sort(roots.begin(), roots.end(), [](Cplx a, Cplx b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return roots;
}

void RationalOperator::validate() const {
  if (denominator.is_zero())
    throw InvalidParameter("rational operator requires a nonzero denominator");
  if (numerator.degree() >= denominator.degree())
    throw InvalidParameter(
        "rational operator must be proper: deg(numerator) < deg(denominator)");
}

Cplx RationalOperator::eval(Cplx z) const {
  return numerator.eval(z) / denominator.eval(z);
}

Cplx PartialFractionDecomposition::eval(Cplx z) const {
  Cplx acc = 0.0;
  for (const PoleGroup& g : poles) {
    Cplx base = 1.0 / (z - g.location);
    Cplx pw = 1.0;
    for (int j = 0; j < g.multiplicity; ++j) {
      pw *= base;
      acc += g.residues[j] * pw;
    }
  }
  return acc;
}

int PartialFractionDecomposition::total_multiplicity() const {
  int m = 0;
  for (const PoleGroup& g : poles) m += g.multiplicity;
  return m;
}

PartialFractionDecomposition partial_fractions(const RationalOperator& r) {
  r.validate();
  std::vector<Cplx> roots = polynomial_roots(r.denominator);

  // Cluster roots within kRootClusterTol into multiple poles.
  PartialFractionDecomposition pfd;
  for (Cplx root : roots) {
    bool merged = false;
    for (PoleGroup& g : pfd.poles) {
      if (std::abs(root - g.location) <= kRootClusterTol) {
        // Running centroid of the cluster.
        g.location = (g.location * static_cast<double>(g.multiplicity) + root) /
                     static_cast<double>(g.multiplicity + 1);
        ++g.multiplicity;
        merged = true;
        break;
      }
    }
    if (!merged) pfd.poles.push_back({root, 1, {}});
  }
  // An almost-real cluster of a real polynomial is a real pole.
  for (PoleGroup& g : pfd.poles) {
    if (std::fabs(g.location.imag()) <= kRootClusterTol)
      g.location = Cplx(g.location.real(), 0.0);
  }

  const int unknowns = static_cast<int>(roots.size());
  double max_pole = 0.0;
  for (const PoleGroup& g : pfd.poles)
    max_pole = std::max(max_pole, std::abs(g.location));

  // Fit the residues by sampling R on a circle enclosing all poles.
  const double radius = 1.0 + 2.0 * max_pole;
  Eigen::MatrixXcd m(unknowns, unknowns);
  Eigen::VectorXcd rhs(unknowns);
  for (int k = 0; k < unknowns; ++k) {
    const double angle = 2.0 * M_PI * (k + 0.25) / unknowns;
    const Cplx z = radius * Cplx(std::cos(angle), std::sin(angle));
    int col = 0;
    for (const PoleGroup& g : pfd.poles) {
      Cplx base = 1.0 / (z - g.location);
      Cplx pw = 1.0;
      for (int j = 0; j < g.multiplicity; ++j) {
        pw *= base;
        m(k, col++) = pw;
      }
    }
    rhs(k) = r.eval(z);
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(
      m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const double smin = svd.singularValues()(unknowns - 1);
  const double smax = svd.singularValues()(0);
  pfd.condition_estimate = (smin > 0.0) ? smax / smin
                                        : std::numeric_limits<double>::infinity();
  Eigen::VectorXcd sol = svd.solve(rhs);
  {
    int col = 0;
    for (PoleGroup& g : pfd.poles) {
      g.residues.resize(g.multiplicity);
      for (int j = 0; j < g.multiplicity; ++j) g.residues[j] = sol(col++);
    }
  }

  // Recombination check at 20 fresh points: the decomposition times the
  // denominator must reproduce the numerator.
  const double check_radius = radius * 1.37 + 0.11;
  double residual = 0.0;
  for (int k = 0; k < 20; ++k) {
    const double angle = 2.0 * M_PI * (k + 0.6180339887) / 20.0;
    const Cplx z = check_radius * Cplx(std::cos(angle), std::sin(angle));
    const Cplx lhs = pfd.eval(z) * r.denominator.eval(z);
    const Cplx err = lhs - r.numerator.eval(z);
    const double scale = std::max(1.0, std::abs(r.numerator.eval(z)));
    residual = std::max(residual, std::abs(err) / scale);
  }
  pfd.recombination_residual = residual;
  if (residual > 1e-6) {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "partial fraction recombination residual %.3e exceeds 1e-6 "
                  "(condition estimate %.3e)",
                  residual, pfd.condition_estimate);
    throw IllConditioned(buf);
  }
  return pfd;
}

}  // namespace gfc

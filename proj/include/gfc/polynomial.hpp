#ifndef GFC_POLYNOMIAL_HPP
#define GFC_POLYNOMIAL_HPP

#include <complex>
#include <vector>

namespace gfc {

// Real-coefficient polynomial in ascending order: c[0] + c[1] z + ...
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coeffs);

  static Polynomial zero() { return Polynomial(); }
  static Polynomial constant(double c) { return Polynomial({c}); }

  const std::vector<double>& coeffs() const { return coeffs_; }
  // Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  double leading() const;

  std::complex<double> eval(std::complex<double> z) const;
  double eval(double z) const;

 private:
  std::vector<double> coeffs_;  // trailing zeros trimmed
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(double s, const Polynomial& a);

// Roots via the balanced companion matrix (Eigen eigenvalue solver).
// Requires degree >= 1.
std::vector<std::complex<double>> polynomial_roots(const Polynomial& p);

// A proper rational function numerator/denominator in the symbol S_kappa.
struct RationalOperator {
  Polynomial numerator;
  Polynomial denominator;

  // Throws InvalidParameter unless deg(num) < deg(den) and den != 0.
  void validate() const;
  std::complex<double> eval(std::complex<double> z) const;
};

struct PoleGroup {
  std::complex<double> location;
  int multiplicity = 1;
  // residues[j-1] is the coefficient of 1/(z - location)^j.
  std::vector<std::complex<double>> residues;
};

struct PartialFractionDecomposition {
  std::vector<PoleGroup> poles;
  double recombination_residual = 0.0;
  double condition_estimate = 1.0;

  std::complex<double> eval(std::complex<double> z) const;
  int total_multiplicity() const;
};

// Radius for clustering near-equal roots into one multiple pole.
inline constexpr double kRootClusterTol = 1e-7;

// Partial fraction decomposition of a proper rational function.  Poles
// come from the companion matrix, clustered by kRootClusterTol; residues
// solve the linear system obtained by sampling R away from the poles.
// Throws IllConditioned when the recombination residual exceeds 1e-6.
PartialFractionDecomposition partial_fractions(const RationalOperator& r);

}  // namespace gfc

#endif  // GFC_POLYNOMIAL_HPP

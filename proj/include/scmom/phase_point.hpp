#ifndef SCMOM_PHASE_POINT_HPP
#define SCMOM_PHASE_POINT_HPP

#include "scmom/expression.hpp"
#include "scmom/moment_index.hpp"

#include <map>
#include <random>
#include <vector>

namespace scmom {

/// A point of the order-s truncated phase space: basic expectation values
/// plus real values for every moment with 2 <= order <= s.
struct PhasePoint {
  int N = 1;
  int s = 2;
  double hbar = 1.0;
  std::vector<double> q, pi;            // size N
  std::map<MomentIndex, double> moments;

  /// Value of a moment; throws MissingMomentError when absent.
  double moment(const MomentIndex& idx) const;
  bool has(const MomentIndex& idx) const { return moments.count(idx) != 0; }
  void set(const MomentIndex& idx, double value) { moments[idx] = value; }
};

/// Second-order admissibility report. The uncertainty bound is a validation,
/// not a constructor invariant: flows may visit marginal points.
struct UncertaintyReport {
  std::vector<double> product;  // d(q_j^2) d(pi_j^2) - d(q_j pi_j)^2 per pair
  std::vector<double> margin;   // product - hbar^2/4
  bool positive_variances = true;
  bool satisfied(double tol = 0.0) const;
};

UncertaintyReport check_uncertainty(const PhasePoint& p);

/// Numeric substitution of a point into an expression; linear in coefficients.
double evaluate(const MomentExpression& e, const PhasePoint& p);

/// Moments of an uncorrelated Gaussian state with position widths sigma_j:
/// d(q_j^2) = sigma_j^2, d(pi_j^2) = hbar^2/(4 sigma_j^2), vanishing odd
/// moments, higher even moments by Wick pairing.
PhasePoint gaussian_point(int n, int s, const std::vector<double>& sigma, double hbar);

/// Generic admissible random point: second-order block drawn from a random
/// symplectic squeeze of a diagonal state with symplectic eigenvalues above
/// hbar/2, odd orders O(hbar^{order/2}) random.
PhasePoint random_phase_point(int n, int s, double hbar, std::mt19937_64& rng);

}  // namespace scmom

#endif

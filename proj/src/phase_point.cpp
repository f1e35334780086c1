#include "scmom/phase_point.hpp"

#include "scmom/errors.hpp"

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>

namespace scmom {

double PhasePoint::moment(const MomentIndex& idx) const {
  auto it = moments.find(idx);
  if (it == moments.end()) throw MissingMomentError("moment of order " + std::to_string(idx.order()) + " absent from phase point");
  return it->second;
}

bool UncertaintyReport::satisfied(double tol) const {
  if (!positive_variances) return false;
  for (double m : margin)
    if (m < -tol) return false;
  return true;
}

UncertaintyReport check_uncertainty(const PhasePoint& p) {
  UncertaintyReport r;
  for (int j = 0; j < p.N; ++j) {
    const double qq = p.moment(MomentIndex::pair(2, 0, j));
    const double pp = p.moment(MomentIndex::pair(0, 2, j));
    const double qp = p.moment(MomentIndex::pair(1, 1, j));
    const double prod = qq * pp - qp * qp;
    r.product.push_back(prod);
    r.margin.push_back(prod - p.hbar * p.hbar / 4.0);
    if (qq <= 0 || pp <= 0) r.positive_variances = false;
  }
  return r;
}

double evaluate(const MomentExpression& e, const PhasePoint& p) {
  double sum = 0;
  for (const auto& [t, c] : e.terms()) {
    double v = to_double(c);
    for (int j = 0; j < t.basic.width(); ++j) {
      for (int a = 0; a < t.basic.q(j); ++a) v *= p.q.at(j);
      for (int a = 0; a < t.basic.pi(j); ++a) v *= p.pi.at(j);
    }
    for (const auto& m : t.moments) v *= p.moment(m);
    for (int a = 0; a < t.hbar; ++a) v *= p.hbar;
    sum += v;
  }
  return sum;
}

namespace {

// Isserlis pairing over a flat list of variable ids, with covariance lookup.
double isserlis(std::vector<int>& vars, const Eigen::MatrixXd& cov) {
  if (vars.empty()) return 1.0;
  if (vars.size() % 2 != 0) return 0.0;
  const int first = vars[0];
  double sum = 0;
  for (std::size_t i = 1; i < vars.size(); ++i) {
    const int partner = vars[i];
    std::vector<int> rest;
    rest.reserve(vars.size() - 2);
    for (std::size_t j = 1; j < vars.size(); ++j)
      if (j != i) rest.push_back(vars[j]);
    sum += cov(first, partner) * isserlis(rest, cov);
  }
  return sum;
}

// Flat variable ids in block ordering x = (q_1..q_N, pi_1..pi_N).
std::vector<int> flatten(const MomentIndex& idx, int n) {
  std::vector<int> vars;
  for (int j = 0; j < n; ++j) {
    for (int a = 0; a < idx.q(j); ++a) vars.push_back(j);
    for (int a = 0; a < idx.pi(j); ++a) vars.push_back(n + j);
  }
  return vars;
}

void fill_gaussian_moments(PhasePoint& p, const Eigen::MatrixXd& cov) {
  for (const auto& idx : enumerate_moments(p.N, p.s)) {
    std::vector<int> vars = flatten(idx, p.N);
    p.set(idx, isserlis(vars, cov));
  }
}

}  // namespace

PhasePoint gaussian_point(int n, int s, const std::vector<double>& sigma, double hbar) {
  if (static_cast<int>(sigma.size()) != n) throw Error("gaussian_point: need one width per degree of freedom");
  PhasePoint p;
  p.N = n;
  p.s = s;
  p.hbar = hbar;
  p.q.assign(n, 0.0);
  p.pi.assign(n, 0.0);
  Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (int j = 0; j < n; ++j) {
    if (sigma[j] <= 0) throw Error("gaussian_point: widths must be positive");
    cov(j, j) = sigma[j] * sigma[j];
    cov(n + j, n + j) = hbar * hbar / (4 * sigma[j] * sigma[j]);
  }
  fill_gaussian_moments(p, cov);
  return p;
}

PhasePoint random_phase_point(int n, int s, double hbar, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const int d = 2 * n;

  Eigen::MatrixXd tau = Eigen::MatrixXd::Zero(d, d);
  for (int j = 0; j < n; ++j) {
    tau(j, n + j) = 1;
    tau(n + j, j) = -1;
  }

  // Random symplectic squeeze S = exp(tau * A), A symmetric and modest.
  Eigen::MatrixXd a(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) a(i, j) = a(j, i) = 0.35 * unit(rng);
  const Eigen::MatrixXd smat = (tau * a).exp();

  // Williamson form with symplectic eigenvalues strictly above hbar/2.
  Eigen::MatrixXd diag = Eigen::MatrixXd::Zero(d, d);
  for (int j = 0; j < n; ++j) {
    const double nu = 0.5 * hbar * (1.1 + 0.9 * std::abs(unit(rng)));
    diag(j, j) = nu;
    diag(n + j, n + j) = nu;
  }
  const Eigen::MatrixXd cov = smat * diag * smat.transpose();

  PhasePoint p;
  p.N = n;
  p.s = s;
  p.hbar = hbar;
  p.q.resize(n);
  p.pi.resize(n);
  for (int j = 0; j < n; ++j) {
    p.q[j] = unit(rng);
    p.pi[j] = unit(rng);
  }
  fill_gaussian_moments(p, cov);

  // Perturb odd orders away from the Gaussian locus (they vanish there).
  for (const auto& idx : enumerate_moments(n, s)) {
    if (idx.order() % 2 == 1) p.set(idx, 0.3 * unit(rng) * std::pow(hbar, idx.order() / 2.0));
  }
  return p;
}

}  // namespace scmom

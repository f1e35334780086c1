#ifndef SCMOM_MOMENT_INDEX_HPP
#define SCMOM_MOMENT_INDEX_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace scmom {

/// Multi-index (k_1..k_N, l_1..l_N) labeling a central moment d(q^k pi^l).
///
/// Stored in trimmed form: trailing canonical pairs with k_j = l_j = 0 are
/// removed, so the same index represents a moment and all of its embeddings
/// into systems with more degrees of freedom. The same type doubles as a
/// plain monomial exponent vector over (q_j, pi_j).
class MomentIndex {
 public:
  MomentIndex() = default;  // order-0 index (the constant)
  MomentIndex(std::vector<int> k, std::vector<int> l);

  /// Single-pair index d(q^a pi^b) for degree-of-freedom j (0-based).
  static MomentIndex pair(int a, int b, int j = 0);

  int q(int j) const { return j < width() ? k_[j] : 0; }
  int pi(int j) const { return j < width() ? l_[j] : 0; }

  /// Number of stored canonical pairs (minimal N this index fits into).
  int width() const { return static_cast<int>(k_.size()); }

  /// Total order sum(k_i + l_i).
  int order() const;

  std::vector<int> kvec(int n) const;
  std::vector<int> lvec(int n) const;

  /// Index with exponent of q_j (or pi_j) changed by delta (>= 0 required).
  MomentIndex with_q(int j, int delta) const;
  MomentIndex with_pi(int j, int delta) const;

  bool operator==(const MomentIndex& o) const { return k_ == o.k_ && l_ == o.l_; }

  /// Canonical precedence: graded by order, then lexicographic with larger
  /// position powers first ((k,l) compared as concatenated vectors, descending).
  bool operator<(const MomentIndex& o) const;

 private:
  void trim();
  std::vector<int> k_, l_;  // equal lengths after trim
};

int moment_order(const MomentIndex& idx);

/// All indices with 2 <= order <= s, canonical precedence order.
/// For N = 1 the count is (s^2 + 3s - 4)/2.
std::vector<MomentIndex> enumerate_moments(int n, int s);

}  // namespace scmom

#endif

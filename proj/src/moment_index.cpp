#include "scmom/moment_index.hpp"

#include <algorithm>
#include <stdexcept>

namespace scmom {

MomentIndex::MomentIndex(std::vector<int> k, std::vector<int> l) : k_(std::move(k)), l_(std::move(l)) {
  if (k_.size() != l_.size()) {
    const std::size_t n = std::max(k_.size(), l_.size());
    k_.resize(n, 0);
    l_.resize(n, 0);
  }
  for (std::size_t i = 0; i < k_.size(); ++i)
    if (k_[i] < 0 || l_[i] < 0) throw std::invalid_argument("negative moment exponent");
  trim();
}

MomentIndex MomentIndex::pair(int a, int b, int j) {
  std::vector<int> k(j + 1, 0), l(j + 1, 0);
  k[j] = a;
  l[j] = b;
  return MomentIndex(std::move(k), std::move(l));
}

void MomentIndex::trim() {
  std::size_t n = k_.size();
  while (n > 0 && k_[n - 1] == 0 && l_[n - 1] == 0) --n;
  k_.resize(n);
  l_.resize(n);
}

int MomentIndex::order() const {
  int s = 0;
  for (std::size_t i = 0; i < k_.size(); ++i) s += k_[i] + l_[i];
  return s;
}

std::vector<int> MomentIndex::kvec(int n) const {
  std::vector<int> v(n, 0);
  for (int j = 0; j < std::min<int>(n, width()); ++j) v[j] = k_[j];
  return v;
}

std::vector<int> MomentIndex::lvec(int n) const {
  std::vector<int> v(n, 0);
  for (int j = 0; j < std::min<int>(n, width()); ++j) v[j] = l_[j];
  return v;
}

MomentIndex MomentIndex::with_q(int j, int delta) const {
  const int n = std::max(width(), j + 1);
  std::vector<int> k = kvec(n), l = lvec(n);
  k[j] += delta;
  return MomentIndex(std::move(k), std::move(l));
}

MomentIndex MomentIndex::with_pi(int j, int delta) const {
  const int n = std::max(width(), j + 1);
  std::vector<int> k = kvec(n), l = lvec(n);
  l[j] += delta;
  return MomentIndex(std::move(k), std::move(l));
}

bool MomentIndex::operator<(const MomentIndex& o) const {
  const int sa = order(), sb = o.order();
  if (sa != sb) return sa < sb;
  const int w = std::max(width(), o.width());
  for (int j = 0; j < w; ++j)
    if (q(j) != o.q(j)) return q(j) > o.q(j);
  for (int j = 0; j < w; ++j)
    if (pi(j) != o.pi(j)) return pi(j) > o.pi(j);
  return false;
}

int moment_order(const MomentIndex& idx) { return idx.order(); }

namespace {

void enumerate_order(int n, int s, std::vector<int>& exps, std::size_t pos, std::vector<MomentIndex>& out) {
  if (pos == exps.size()) {
    if (s == 0) {
      std::vector<int> k(n), l(n);
      for (int j = 0; j < n; ++j) {
        k[j] = exps[j];
        l[j] = exps[n + j];
      }
      out.emplace_back(std::move(k), std::move(l));
    }
    return;
  }
  for (int e = s; e >= 0; --e) {
    exps[pos] = e;
    enumerate_order(n, s - e, exps, pos + 1, out);
  }
  exps[pos] = 0;
}

}  // namespace

std::vector<MomentIndex> enumerate_moments(int n, int s) {
  if (n < 1) throw std::invalid_argument("enumerate_moments: N >= 1 required");
  if (s < 2) throw std::invalid_argument("enumerate_moments: order >= 2 required");
  std::vector<MomentIndex> out;
  std::vector<int> exps(2 * n, 0);
  for (int order = 2; order <= s; ++order) {
    std::vector<MomentIndex> level;
    enumerate_order(n, order, exps, 0, level);
    std::sort(level.begin(), level.end());
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace scmom

#include "scmom/expression.hpp"

#include <algorithm>

namespace scmom {

int Term::semiclassical_order() const {
  int s = 2 * hbar;
  for (const auto& m : moments) s += m.order();
  return s;
}

bool Term::operator<(const Term& o) const {
  if (!(basic == o.basic)) return basic < o.basic;
  if (moments != o.moments)
    return std::lexicographical_compare(moments.begin(), moments.end(), o.moments.begin(), o.moments.end());
  return hbar < o.hbar;
}

MomentExpression MomentExpression::constant(const Rational& c) {
  MomentExpression e;
  e.add_term(Term{}, c);
  return e;
}

MomentExpression MomentExpression::hbar(int power) {
  MomentExpression e;
  Term t;
  t.hbar = power;
  e.add_term(t, 1);
  return e;
}

MomentExpression MomentExpression::moment(const MomentIndex& idx) {
  MomentExpression e;
  Term t;
  t.moments.push_back(idx);
  e.add_term(t, 1);
  return e;
}

MomentExpression MomentExpression::basic_q(int j) {
  MomentExpression e;
  Term t;
  t.basic = MomentIndex::pair(1, 0, j);
  e.add_term(t, 1);
  return e;
}

MomentExpression MomentExpression::basic_pi(int j) {
  MomentExpression e;
  Term t;
  t.basic = MomentIndex::pair(0, 1, j);
  e.add_term(t, 1);
  return e;
}

void MomentExpression::add_term(const Term& t, const Rational& c) {
  if (c == 0) return;
  Term norm;
  norm.basic = t.basic;
  norm.hbar = t.hbar;
  norm.moments.reserve(t.moments.size());
  for (const auto& m : t.moments) {
    const int ord = m.order();
    if (ord == 0) continue;       // constant factor
    if (ord == 1) return;         // vanishing moment: whole term is zero
    norm.moments.push_back(m);
  }
  std::sort(norm.moments.begin(), norm.moments.end());
  auto it = terms_.find(norm);
  if (it == terms_.end()) {
    terms_.emplace(std::move(norm), c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational MomentExpression::coefficient(const Term& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? Rational(0) : it->second;
}

int MomentExpression::max_semiclassical_order() const {
  int s = -1;
  for (const auto& [t, c] : terms_) s = std::max(s, t.semiclassical_order());
  return s;
}

int MomentExpression::width() const {
  int w = 0;
  for (const auto& [t, c] : terms_) {
    w = std::max(w, t.basic.width());
    for (const auto& m : t.moments) w = std::max(w, m.width());
  }
  return w;
}

MomentExpression& MomentExpression::operator+=(const MomentExpression& o) {
  for (const auto& [t, c] : o.terms_) add_term(t, c);
  return *this;
}

MomentExpression& MomentExpression::operator-=(const MomentExpression& o) {
  for (const auto& [t, c] : o.terms_) add_term(t, -c);
  return *this;
}

MomentExpression& MomentExpression::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, coeff] : terms_) coeff *= c;
  return *this;
}

MomentExpression MomentExpression::operator-() const {
  MomentExpression e = *this;
  for (auto& [t, c] : e.terms_) c = -c;
  return e;
}

namespace {

MomentIndex merge_basic(const MomentIndex& a, const MomentIndex& b) {
  const int n = std::max(a.width(), b.width());
  std::vector<int> k(n), l(n);
  for (int j = 0; j < n; ++j) {
    k[j] = a.q(j) + b.q(j);
    l[j] = a.pi(j) + b.pi(j);
  }
  return MomentIndex(std::move(k), std::move(l));
}

}  // namespace

MomentExpression MomentExpression::operator*(const MomentExpression& o) const {
  MomentExpression out;
  for (const auto& [ta, ca] : terms_) {
    for (const auto& [tb, cb] : o.terms_) {
      Term t;
      t.basic = merge_basic(ta.basic, tb.basic);
      t.moments = ta.moments;
      t.moments.insert(t.moments.end(), tb.moments.begin(), tb.moments.end());
      t.hbar = ta.hbar + tb.hbar;
      out.add_term(t, ca * cb);
    }
  }
  return out;
}

MomentExpression truncate(const MomentExpression& e, int s) {
  MomentExpression out;
  for (const auto& [t, c] : e.terms()) {
    if (t.semiclassical_order() <= s) out.add_term(t, c);
  }
  return out;
}

}  // namespace scmom

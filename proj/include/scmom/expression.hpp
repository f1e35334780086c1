#ifndef SCMOM_EXPRESSION_HPP
#define SCMOM_EXPRESSION_HPP

#include "scmom/moment_index.hpp"
#include "scmom/rational.hpp"

#include <map>
#include <vector>

namespace scmom {

/// One product term: a monomial in basic expectation values (q_j, pi_j),
/// a multiset of moment factors (each of order >= 2), and a power of hbar.
struct Term {
  MomentIndex basic;                 // exponents of basic expectation values
  std::vector<MomentIndex> moments;  // sorted, canonical precedence
  int hbar = 0;

  /// Semiclassical order: moment orders plus twice the hbar power
  /// (basic expectation values carry order zero).
  int semiclassical_order() const;

  bool operator==(const Term& o) const = default;
  bool operator<(const Term& o) const;
};

/// Finite linear combination of Terms with exact rational coefficients.
class MomentExpression {
 public:
  MomentExpression() = default;

  static MomentExpression constant(const Rational& c);
  static MomentExpression hbar(int power = 1);
  /// Single moment factor. Order-0 indices give the constant 1 and order-1
  /// indices give 0 (central moments of order one vanish identically).
  static MomentExpression moment(const MomentIndex& idx);
  static MomentExpression basic_q(int j);   // 0-based degree of freedom
  static MomentExpression basic_pi(int j);

  const std::map<Term, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Adds c * t, normalizing moment factors (drops order-0 factors, zeroes
  /// the whole term on any order-1 factor) and erasing cancellations.
  void add_term(const Term& t, const Rational& c);

  /// Coefficient of an exact term key (0 if absent).
  Rational coefficient(const Term& t) const;

  /// Largest semiclassical order over terms (-1 for the zero expression).
  int max_semiclassical_order() const;

  /// Smallest N the expression fits into.
  int width() const;

  MomentExpression& operator+=(const MomentExpression& o);
  MomentExpression& operator-=(const MomentExpression& o);
  MomentExpression& operator*=(const Rational& c);
  MomentExpression operator-() const;

  friend MomentExpression operator+(MomentExpression a, const MomentExpression& b) { return a += b; }
  friend MomentExpression operator-(MomentExpression a, const MomentExpression& b) { return a -= b; }
  friend MomentExpression operator*(MomentExpression a, const Rational& c) { return a *= c; }
  friend MomentExpression operator*(const Rational& c, MomentExpression a) { return a *= c; }
  MomentExpression operator*(const MomentExpression& o) const;

  bool operator==(const MomentExpression& o) const { return terms_ == o.terms_; }

 private:
  std::map<Term, Rational> terms_;
};

/// Removes every term of semiclassical order > s. Idempotent.
MomentExpression truncate(const MomentExpression& e, int s);

}  // namespace scmom

#endif

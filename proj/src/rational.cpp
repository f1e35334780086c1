#include "scmom/rational.hpp"

namespace scmom {

Int factorial(int n) {
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (int i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

Rational rational_pow(const Rational& base, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

std::string rational_to_string(const Rational& r) {
  const Int num = boost::multiprecision::numerator(r);
  const Int den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace scmom

#ifndef SCMOM_RATIONAL_HPP
#define SCMOM_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace scmom {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

Int factorial(int n);
Int binomial(int n, int k);

/// Exact integer power of a rational (e >= 0).
Rational rational_pow(const Rational& base, int e);

/// "3", "-1/2", ... (no denominator printed when it is 1).
std::string rational_to_string(const Rational& r);

}  // namespace scmom

#endif

#ifndef PMH_NUMERIC_HPP
#define PMH_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace pmh {

// All arithmetic in the library is exact: arbitrary-precision integers for
// counting and series coefficients, rationals for basis-change coefficients.
// No floating point anywhere.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& x) { return x.str(); }

// Lowest terms, '-' sign in front, denominator omitted when 1 (cpp_rational
// is always normalized, so str() already has this shape).
inline std::string to_string(const Rational& x) { return x.str(); }

BigInt binomial(long n, long k);
BigInt factorial(long n);
BigInt int_pow(const BigInt& base, long exp);

}  // namespace pmh

#endif

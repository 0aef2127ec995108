#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "phasemass/errors.hpp"

namespace phasemass {

// Arbitrary-precision integers and rationals.  Counting results and mass
// ratios are exact by contract; doubles only enter when a caller asks for a
// floating approximation.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

// Exact binomial coefficient.  Multiplicative form; every division is exact.
inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) throw DomainError("binomial: k exceeds n");
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline long long to_int64_checked(const BigInt& v) {
  static const BigInt kMax = std::numeric_limits<long long>::max();
  static const BigInt kMin = std::numeric_limits<long long>::min();
  if (v > kMax || v < kMin) throw TooLarge("integer does not fit in 64 bits");
  return v.convert_to<long long>();
}

}  // namespace phasemass

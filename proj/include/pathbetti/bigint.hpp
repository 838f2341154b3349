#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace pathbetti {

using BigInt = boost::multiprecision::cpp_int;

// binom(a, b) under the truncating convention: the value is 0 whenever
// a < 0, b < 0 or a < b.  This is NOT the polynomial extension of the
// binomial coefficient; every formula in this library relies on the
// truncating reading.
inline BigInt binom(long long a, long long b) {
  if (a < 0 || b < 0 || a < b) return 0;
  if (b > a - b) b = a - b;
  BigInt r = 1;
  for (long long k = 1; k <= b; ++k) {
    r *= a - b + k;
    r /= k; // exact: r is binom(a-b+k, k) after each step
  }
  return r;
}

// Floor / ceiling division for possibly negative numerators, positive divisor.
inline long long floor_div(long long a, long long b) {
  long long q = a / b, r = a % b;
  return (r != 0 && (r < 0) != (b < 0)) ? q - 1 : q;
}

inline long long ceil_div(long long a, long long b) {
  return -floor_div(-a, b);
}

} // namespace pathbetti

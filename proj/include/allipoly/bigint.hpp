#pragma once

#include <algorithm>

#include <boost/multiprecision/cpp_int.hpp>

namespace allipoly {

// All polynomial coefficients are exact, unbounded integers; evaluation is
// exact rational arithmetic. No floating point anywhere in the library.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt big_pow2(int e) { return BigInt(1) << e; }

inline BigInt binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r is a running binomial
  }
  return r;
}

}  // namespace allipoly

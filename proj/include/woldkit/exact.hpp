#pragma once

#include <gmpxx.h>

namespace woldkit {

// Exact arithmetic carriers for all combinatorial quantities. Rational values
// are kept canonical (gcd(num, den) = 1, den > 0) by the backing library.
using Integer = mpz_class;
using Rational = mpq_class;

inline Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

/// Binomial coefficient C(n, k); zero for k > n, exact otherwise.
inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline double to_double(const Integer& v) { return v.get_d(); }
inline double to_double(const Rational& v) { return v.get_d(); }

} // namespace woldkit

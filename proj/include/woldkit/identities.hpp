#pragma once

#include <vector>

#include "woldkit/exact.hpp"
#include "woldkit/multiindex.hpp"

namespace woldkit {

// Exact verification of the scalar identities the operator-level machinery
// rests on. Everything here is big-rational arithmetic; no floating point.

/// Coefficients of sum_{k<=K} C(m+k-1,k) t^k, the weight-generating series.
std::vector<Rational> kernel_expansion_coeffs(int m, int K);

/// Coefficients of sum_{j<=m} (-1)^j C(m,j) t^j, the kernel reciprocal.
std::vector<Rational> kernel_reciprocal_coeffs(int m);

/// Cauchy product of two coefficient sequences.
std::vector<Rational> convolve(const std::vector<Rational>& a, const std::vector<Rational>& b);

/// True iff the truncated product of the two series above is 1 + O(t^{K+1}):
/// coefficient 0 equals one and coefficients 1..K vanish, all exactly.
bool verify_kernel_reciprocal(int m, int K);

/// Left side of the inductive-step constant identity:
///   sum_{j=0}^{m-1} (-1)^j C(m,j+1) sum_{|beta|=j, beta<=alpha}
///     (gamma_beta gamma_{alpha-beta} / gamma_alpha) C(m+|alpha-beta|-1, |alpha-beta|).
Rational intertwining_step_lhs(int m, const MultiIndex& alpha);

/// Right side: C(m+|alpha|, |alpha|+1).
Integer intertwining_step_rhs(int m, const MultiIndex& alpha);

bool verify_intertwining_step(int m, const MultiIndex& alpha);

/// sum_{j=0}^{m-1} (-1)^j C(m, j+1); collapses to 1 for every m >= 1.
Integer alternating_binomial_sum(int m);

bool verify_telescope(int m);

/// rho_m(alpha) = C(m+|alpha|-1, |alpha|) * gamma_alpha, exactly.
bool verify_weight_factorization(int m, const MultiIndex& alpha);

} // namespace woldkit

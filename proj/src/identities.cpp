#include "woldkit/identities.hpp"

#include "woldkit/errors.hpp"

namespace woldkit {

std::vector<Rational> kernel_expansion_coeffs(int m, int K) {
  if (m < 1 || K < 0) throw Error("kernel_expansion_coeffs: need m >= 1, K >= 0");
  std::vector<Rational> c;
  c.reserve(static_cast<size_t>(K) + 1);
  for (int k = 0; k <= K; ++k)
    c.emplace_back(binomial(static_cast<unsigned long>(m + k - 1), static_cast<unsigned long>(k)));
  return c;
}

std::vector<Rational> kernel_reciprocal_coeffs(int m) {
  if (m < 1) throw Error("kernel_reciprocal_coeffs: need m >= 1");
  std::vector<Rational> c;
  c.reserve(static_cast<size_t>(m) + 1);
  for (int j = 0; j <= m; ++j) {
    Integer b = binomial(static_cast<unsigned long>(m), static_cast<unsigned long>(j));
    c.emplace_back(j % 2 == 0 ? b : -b);
  }
  return c;
}

std::vector<Rational> convolve(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Rational> c(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] += a[i] * b[j];
  return c;
}

bool verify_kernel_reciprocal(int m, int K) {
  if (K < 1) throw Error("verify_kernel_reciprocal: need K >= 1");
  auto prod = convolve(kernel_expansion_coeffs(m, K), kernel_reciprocal_coeffs(m));
  if (prod.size() < static_cast<size_t>(K) + 1) return false;
  if (prod[0] != 1) return false;
  for (int k = 1; k <= K; ++k)
    if (prod[static_cast<size_t>(k)] != 0) return false;
  return true;
}

Rational intertwining_step_lhs(int m, const MultiIndex& alpha) {
  if (m < 1) throw Error("intertwining_step_lhs: need m >= 1");
  const Integer gamma_alpha = gamma(alpha);
  Rational sum(0);
  for (int j = 0; j <= m - 1; ++j) {
    Integer weight = binomial(static_cast<unsigned long>(m), static_cast<unsigned long>(j + 1));
    if (j % 2 != 0) weight = -weight;
    for (const MultiIndex& beta : enumerate_degree(alpha.dim(), j)) {
      auto rest = alpha.minus(beta);
      if (!rest) continue; // terms with alpha not dominating beta read as zero
      Rational term(gamma(beta) * gamma(*rest), gamma_alpha);
      term.canonicalize();
      int r = rest->degree();
      term *= Rational(binomial(static_cast<unsigned long>(m + r - 1), static_cast<unsigned long>(r)));
      sum += Rational(weight) * term;
    }
  }
  return sum;
}

Integer intertwining_step_rhs(int m, const MultiIndex& alpha) {
  const int d = alpha.degree();
  return binomial(static_cast<unsigned long>(m + d), static_cast<unsigned long>(d + 1));
}

bool verify_intertwining_step(int m, const MultiIndex& alpha) {
  return intertwining_step_lhs(m, alpha) == Rational(intertwining_step_rhs(m, alpha));
}

Integer alternating_binomial_sum(int m) {
  if (m < 1) throw Error("alternating_binomial_sum: need m >= 1");
  Integer sum(0);
  for (int j = 0; j <= m - 1; ++j) {
    Integer b = binomial(static_cast<unsigned long>(m), static_cast<unsigned long>(j + 1));
    sum += (j % 2 == 0) ? b : -b;
  }
  return sum;
}

bool verify_telescope(int m) { return alternating_binomial_sum(m) == 1; }

bool verify_weight_factorization(int m, const MultiIndex& alpha) {
  const int d = alpha.degree();
  Integer expected =
      binomial(static_cast<unsigned long>(m + d - 1), static_cast<unsigned long>(d)) * gamma(alpha);
  return rho(m, alpha) == expected;
}

} // namespace woldkit

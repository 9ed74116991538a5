#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "woldkit/errors.hpp"
#include "woldkit/exact.hpp"

namespace woldkit {

/// Exponent tuple alpha in N^n. Immutable once constructed.
class MultiIndex {
public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> entries);

  static MultiIndex zero(int n);
  static MultiIndex unit(int n, int i);

  int dim() const { return static_cast<int>(entries_.size()); }
  int degree() const;
  int operator[](int i) const { return entries_[static_cast<size_t>(i)]; }
  const std::vector<int>& entries() const { return entries_; }

  bool operator==(const MultiIndex&) const = default;

  /// alpha >= beta componentwise.
  bool dominates(const MultiIndex& beta) const;

  /// alpha - beta, or nullopt when some component would go negative.
  std::optional<MultiIndex> minus(const MultiIndex& beta) const;

  /// alpha + e_i.
  MultiIndex plus_unit(int i) const;

  std::string str() const;

private:
  std::vector<int> entries_;
};

/// Canonical basis order used by every module: ascending total degree, and
/// within a degree the index whose first differing exponent is larger comes
/// first, e.g. for n = 2, d = 2: (2,0), (1,1), (0,2).
bool graded_lex_less(const MultiIndex& a, const MultiIndex& b);

struct GradedLexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    return graded_lex_less(a, b);
  }
};

/// All multi-indices of total degree d in n variables, canonical order.
std::vector<MultiIndex> enumerate_degree(int n, int d);

/// All multi-indices with total degree <= max_degree, canonical order.
std::vector<MultiIndex> enumerate_up_to(int n, int max_degree);

/// gamma_alpha = |alpha|! / alpha!, the number of index words of type alpha.
Integer gamma(const MultiIndex& alpha);

/// rho_m(alpha) = (m + |alpha| - 1)! / (alpha! (m-1)!). Requires m >= 1.
Integer rho(int m, const MultiIndex& alpha);

struct WordBudget {
  int max_degree = 10;
  unsigned long max_words = 2000000;
};

/// Calls f once per index word i in {0..n-1}^{|alpha|} containing each letter
/// j exactly alpha_j times. Exactly gamma(alpha) words are produced, in
/// lexicographic word order. Throws BudgetExceeded before producing anything
/// when |alpha| or gamma(alpha) exceeds the budget.
template <typename F>
void for_each_word(const MultiIndex& alpha, F&& f, const WordBudget& budget = {}) {
  if (alpha.degree() > budget.max_degree)
    throw BudgetExceeded("word enumeration: degree cap exceeded for alpha = " + alpha.str());
  if (gamma(alpha) > Integer(budget.max_words))
    throw BudgetExceeded("word enumeration: word budget exceeded for alpha = " + alpha.str());
  std::vector<int> word;
  word.reserve(static_cast<size_t>(alpha.degree()));
  for (int j = 0; j < alpha.dim(); ++j)
    word.insert(word.end(), static_cast<size_t>(alpha[j]), j);
  do {
    f(static_cast<const std::vector<int>&>(word));
  } while (std::next_permutation(word.begin(), word.end()));
}

std::vector<std::vector<int>> words(const MultiIndex& alpha, const WordBudget& budget = {});

} // namespace woldkit

#include "woldkit/multiindex.hpp"

#include <numeric>
#include <sstream>

namespace woldkit {

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_)
    if (e < 0) throw Error("multi-index entries must be nonnegative");
}

MultiIndex MultiIndex::zero(int n) { return MultiIndex(std::vector<int>(static_cast<size_t>(n), 0)); }

MultiIndex MultiIndex::unit(int n, int i) {
  std::vector<int> e(static_cast<size_t>(n), 0);
  e.at(static_cast<size_t>(i)) = 1;
  return MultiIndex(std::move(e));
}

int MultiIndex::degree() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

bool MultiIndex::dominates(const MultiIndex& beta) const {
  if (dim() != beta.dim()) return false;
  for (int i = 0; i < dim(); ++i)
    if ((*this)[i] < beta[i]) return false;
  return true;
}

std::optional<MultiIndex> MultiIndex::minus(const MultiIndex& beta) const {
  if (dim() != beta.dim()) throw Error("multi-index dimension mismatch");
  if (!dominates(beta)) return std::nullopt;
  std::vector<int> e(entries_);
  for (int i = 0; i < dim(); ++i) e[static_cast<size_t>(i)] -= beta[i];
  return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::plus_unit(int i) const {
  std::vector<int> e(entries_);
  e.at(static_cast<size_t>(i)) += 1;
  return MultiIndex(std::move(e));
}

std::string MultiIndex::str() const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < dim(); ++i) {
    if (i) os << ',';
    os << (*this)[i];
  }
  os << ')';
  return os.str();
}

bool graded_lex_less(const MultiIndex& a, const MultiIndex& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = 0; i < std::min(a.dim(), b.dim()); ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

namespace {

void fill_degree(int n, int d, std::vector<int>& partial, std::vector<MultiIndex>& out) {
  if (static_cast<int>(partial.size()) == n - 1) {
    partial.push_back(d);
    out.emplace_back(partial);
    partial.pop_back();
    return;
  }
  for (int k = d; k >= 0; --k) {
    partial.push_back(k);
    fill_degree(n, d - k, partial, out);
    partial.pop_back();
  }
}

} // namespace

std::vector<MultiIndex> enumerate_degree(int n, int d) {
  if (n < 1) throw Error("enumerate_degree: need n >= 1");
  if (d < 0) throw Error("enumerate_degree: need d >= 0");
  std::vector<MultiIndex> out;
  std::vector<int> partial;
  fill_degree(n, d, partial, out);
  return out;
}

std::vector<MultiIndex> enumerate_up_to(int n, int max_degree) {
  std::vector<MultiIndex> out;
  for (int d = 0; d <= max_degree; ++d) {
    auto level = enumerate_degree(n, d);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

Integer gamma(const MultiIndex& alpha) {
  Integer r = factorial(static_cast<unsigned long>(alpha.degree()));
  for (int i = 0; i < alpha.dim(); ++i)
    r /= factorial(static_cast<unsigned long>(alpha[i]));
  return r;
}

Integer rho(int m, const MultiIndex& alpha) {
  if (m < 1) throw Error("rho: need m >= 1");
  Integer r = factorial(static_cast<unsigned long>(m + alpha.degree() - 1));
  r /= factorial(static_cast<unsigned long>(m - 1));
  for (int i = 0; i < alpha.dim(); ++i)
    r /= factorial(static_cast<unsigned long>(alpha[i]));
  return r;
}

std::vector<std::vector<int>> words(const MultiIndex& alpha, const WordBudget& budget) {
  std::vector<std::vector<int>> out;
  for_each_word(alpha, [&](const std::vector<int>& w) { out.push_back(w); }, budget);
  return out;
}

} // namespace woldkit

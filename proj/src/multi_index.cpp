#include "hbasis/multi_index.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hbasis {

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  return result;
}

void check_same_length(const MultiIndex& a, const MultiIndex& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("multiindex length mismatch: " + std::to_string(a.size()) +
                                " vs " + std::to_string(b.size()));
  }
}

}  // namespace

MultiIndex::MultiIndex(std::initializer_list<int> exps) : MultiIndex(std::vector<int>(exps)) {}

MultiIndex::MultiIndex(std::vector<int> exps) : exps_(std::move(exps)) {
  for (int e : exps_) {
    if (e < 0) throw std::invalid_argument("negative exponent in multiindex");
  }
}

void MultiIndex::set(std::size_t i, int value) {
  if (value < 0) throw std::invalid_argument("negative exponent in multiindex");
  exps_.at(i) = value;
}

int MultiIndex::total_degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

std::strong_ordering graded_lex_compare(const MultiIndex& a, const MultiIndex& b) {
  check_same_length(a, b);
  if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
  check_same_length(a, b);
  std::vector<int> e(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) e[i] = a[i] + b[i];
  return MultiIndex(std::move(e));
}

MultiIndex unit_index(std::size_t num_vars, std::size_t j) {
  MultiIndex e(num_vars);
  e.set(j, 1);
  return e;
}

MultiIndex lcm(const MultiIndex& a, const MultiIndex& b) {
  check_same_length(a, b);
  std::vector<int> e(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) e[i] = std::max(a[i], b[i]);
  return MultiIndex(std::move(e));
}

bool divides(const MultiIndex& a, const MultiIndex& b) {
  check_same_length(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

std::size_t dim_homogeneous(int n, int k) {
  if (n < 1) throw std::invalid_argument("dim_homogeneous requires n >= 1");
  if (k < 0) return 0;
  return static_cast<std::size_t>(binomial(static_cast<std::uint64_t>(k + n - 1),
                                           static_cast<std::uint64_t>(n - 1)));
}

std::size_t monomial_rank(const MultiIndex& a) {
  const int n = static_cast<int>(a.size());
  int remaining = a.total_degree();
  std::size_t rank = 0;
  for (int i = 0; i + 1 < n; ++i) {
    const int m = n - i - 1;
    // Monomials agreeing on the first i exponents but with a larger i-th one:
    // sum_{v > a_i} C(remaining - v + m - 1, m - 1) = C(remaining - a_i - 1 + m, m).
    if (remaining > a[i]) {
      rank += static_cast<std::size_t>(binomial(static_cast<std::uint64_t>(remaining - a[i] - 1 + m),
                                                static_cast<std::uint64_t>(m)));
    }
    remaining -= a[i];
  }
  return rank;
}

MultiIndex monomial_unrank(int n, int k, std::size_t idx) {
  if (k < 0 || idx >= dim_homogeneous(n, k)) {
    throw std::out_of_range("monomial index " + std::to_string(idx) + " out of range for n=" +
                            std::to_string(n) + ", k=" + std::to_string(k));
  }
  MultiIndex a(static_cast<std::size_t>(n));
  int remaining = k;
  for (int i = 0; i + 1 < n; ++i) {
    const int m = n - i - 1;
    for (int v = remaining; v >= 0; --v) {
      const std::size_t count = dim_homogeneous(m, remaining - v);
      if (idx < count) {
        a.set(static_cast<std::size_t>(i), v);
        remaining -= v;
        break;
      }
      idx -= count;
    }
  }
  a.set(static_cast<std::size_t>(n - 1), remaining);
  return a;
}

std::vector<MultiIndex> monomials_of_degree(int n, int k) {
  const std::size_t count = dim_homogeneous(n, k);
  std::vector<MultiIndex> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(monomial_unrank(n, k, i));
  return out;
}

std::string to_string(const MultiIndex& a) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) os << ',';
    os << a[i];
  }
  os << ')';
  return os.str();
}

}  // namespace hbasis

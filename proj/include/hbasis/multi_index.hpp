#ifndef HBASIS_MULTI_INDEX_HPP
#define HBASIS_MULTI_INDEX_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hbasis {

// Exponent vector alpha in N_0^n. The variable count is fixed per computation.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t num_vars) : exps_(num_vars, 0) {}
  MultiIndex(std::initializer_list<int> exps);
  explicit MultiIndex(std::vector<int> exps);

  std::size_t size() const { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, int value);
  std::span<const int> exponents() const { return exps_; }

  int total_degree() const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<int> exps_;
};

inline int total_degree(const MultiIndex& a) { return a.total_degree(); }

// Graded lexicographic order with x_1 > x_2 > ... > x_n.
// Throws std::invalid_argument on length mismatch.
std::strong_ordering graded_lex_compare(const MultiIndex& a, const MultiIndex& b);

// Strict "a comes before b" when listing monomials from the greatest down.
struct GradedLexGreater {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    return graded_lex_compare(a, b) == std::strong_ordering::greater;
  }
};

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);
MultiIndex unit_index(std::size_t num_vars, std::size_t j);
MultiIndex lcm(const MultiIndex& a, const MultiIndex& b);
// True iff x^a divides x^b.
bool divides(const MultiIndex& a, const MultiIndex& b);

// Number of monomials of total degree k in n variables, C(k+n-1, n-1); zero
// for k < 0.
std::size_t dim_homogeneous(int n, int k);

// Position of a in T_k listed in graded-lex descending order; x_1^k has rank 0.
std::size_t monomial_rank(const MultiIndex& a);
// Throws std::out_of_range unless 0 <= idx < dim_homogeneous(n, k).
MultiIndex monomial_unrank(int n, int k, std::size_t idx);

// All monomials of degree k, rank order.
std::vector<MultiIndex> monomials_of_degree(int n, int k);

std::string to_string(const MultiIndex& a);

}  // namespace hbasis

#endif  // HBASIS_MULTI_INDEX_HPP

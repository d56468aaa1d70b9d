#ifndef HBASIS_POLYNOMIAL_HPP
#define HBASIS_POLYNOMIAL_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "hbasis/multi_index.hpp"

namespace hbasis {

// Homogeneous polynomial of fixed degree stored densely over T_k in rank order.
struct HomogeneousForm {
  int num_vars = 0;
  int degree = 0;
  std::vector<double> coeffs;

  HomogeneousForm() = default;
  HomogeneousForm(int n, int k);
  HomogeneousForm(int n, int k, std::vector<double> c);

  double norm2() const;
};

// Sparse polynomial over the reals. Terms are kept in graded-lex descending
// order, so the first stored term carries the leading monomial. Exact zeros
// are never stored.
class Polynomial {
 public:
  using TermMap = std::map<MultiIndex, double, GradedLexGreater>;

  Polynomial() = default;
  explicit Polynomial(std::size_t num_vars) : num_vars_(num_vars) {}
  Polynomial(std::size_t num_vars, TermMap terms);
  static Polynomial constant(std::size_t num_vars, double c);
  static Polynomial from_form(const HomogeneousForm& form);

  std::size_t num_vars() const { return num_vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  double coefficient(const MultiIndex& a) const;
  // Adds c to the coefficient of x^a, erasing the term if it cancels exactly.
  void add_term(const MultiIndex& a, double c);

  // Total degree; -1 for the zero polynomial.
  int degree() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(double s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, double s) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  // Euclidean norms of the coefficient vector.
  double norm1() const;
  double norm2() const;
  double norm_inf() const;

  // Degree-k homogeneous component as a dense coefficient vector.
  HomogeneousForm component(int k) const;
  // Polynomial with every term of total degree >= k removed.
  Polynomial truncated_below(int k) const;
  // Drops terms with |coefficient| <= threshold.
  Polynomial pruned(double threshold) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void check_vars(const MultiIndex& a) const;

  std::size_t num_vars_ = 0;
  TermMap terms_;
};

// Throws std::invalid_argument on the zero polynomial.
HomogeneousForm leading_form(const Polynomial& p);
// Nonzero homogeneous components in strictly decreasing degree.
std::vector<HomogeneousForm> homogeneous_components(const Polynomial& p);
Polynomial multiply_monomial(const Polynomial& p, const MultiIndex& a);

// Ordered list of nonzero generators in a common number of variables.
class PolynomialSystem {
 public:
  PolynomialSystem() = default;
  PolynomialSystem(std::size_t num_vars, std::vector<Polynomial> generators);

  std::size_t num_vars() const { return num_vars_; }
  std::size_t size() const { return generators_.size(); }
  bool empty() const { return generators_.empty(); }
  const std::vector<Polynomial>& generators() const { return generators_; }
  const Polynomial& operator[](std::size_t i) const { return generators_[i]; }
  std::vector<int> degrees() const;
  int min_degree() const;
  int max_degree() const;

  void append(Polynomial p);

 private:
  std::size_t num_vars_ = 0;
  std::vector<Polynomial> generators_;
};

}  // namespace hbasis

#endif  // HBASIS_POLYNOMIAL_HPP

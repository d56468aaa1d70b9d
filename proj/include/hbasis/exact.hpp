#ifndef HBASIS_EXACT_HPP
#define HBASIS_EXACT_HPP

#include <cstddef>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "hbasis/macaulay.hpp"
#include "hbasis/multi_index.hpp"
#include "hbasis/numla.hpp"
#include "hbasis/polynomial.hpp"

// Exact rational reference computations. Nothing here takes a tolerance.
namespace hbasis {

// mpq_class keeps the canonical form (positive denominator, reduced).
using Rational = mpq_class;

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> row_major);
  // Every finite double is a rational; the conversion is exact.
  static RationalMatrix from_dense(const Matrix& a);
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RationalMatrix transpose() const;
  std::vector<Rational> multiply(const std::vector<Rational>& v) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Row echelon data from fraction-free elimination: pivot columns ascending.
struct ExactEchelon {
  std::vector<std::size_t> pivot_columns;
  // Reduced row echelon rows (pivot entry 1), one per pivot.
  std::vector<std::vector<Rational>> rref_rows;
};

ExactEchelon exact_echelon(const RationalMatrix& m);
std::size_t exact_rank(const RationalMatrix& m);
std::vector<std::size_t> exact_pivot_columns(const RationalMatrix& m);
// cols - rank vectors, one per free column, each with a 1 at its free column.
std::vector<std::vector<Rational>> exact_nullspace(const RationalMatrix& m);

// C_k(F) with the numerical layout, coefficients converted exactly.
RationalMatrix exact_macaulay(const PolynomialSystem& system, int k);
// dim P_k - exact rank of C_k(F).
std::size_t exact_hilbert_function(const PolynomialSystem& system, int k);
// Pivot rows of the exact echelon form of C_k(F)^T.
std::vector<MultiIndex> exact_leading_monomials_at_degree(const PolynomialSystem& system, int k);

class RationalPolynomial {
 public:
  using TermMap = std::map<MultiIndex, Rational, GradedLexGreater>;

  RationalPolynomial() = default;
  explicit RationalPolynomial(std::size_t num_vars) : num_vars_(num_vars) {}
  static RationalPolynomial from_polynomial(const Polynomial& p);

  std::size_t num_vars() const { return num_vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  const MultiIndex& leading_monomial() const { return terms_.begin()->first; }
  const Rational& leading_coefficient() const { return terms_.begin()->second; }

  void add_term(const MultiIndex& a, const Rational& c);
  // this -= c * x^a * g
  void subtract_multiple(const Rational& c, const MultiIndex& a, const RationalPolynomial& g);
  void make_monic();

 private:
  std::size_t num_vars_ = 0;
  TermMap terms_;
};

// Reduced Groebner basis under graded lex (Buchberger with the product and
// chain criteria). Used only as a reference for small systems.
std::vector<RationalPolynomial> exact_groebner_basis(const PolynomialSystem& system);

// Minimal generators of the monomial ideal <lm(I)> = <lm(lf(I))> for I = <F>.
std::vector<MultiIndex> exact_leading_monomial_ideal(const PolynomialSystem& system);

// Monomials of degree k not divisible by any generator.
std::size_t monomial_ideal_hilbert_function(const std::vector<MultiIndex>& generators, int n,
                                            int k);

// Hilbert function of the leading-form ideal <lf(I)> of I = <F>; equal to that
// of I's graded-lex leading monomial ideal.
std::vector<std::size_t> exact_ideal_hilbert_function(const PolynomialSystem& system,
                                                      int max_degree);

}  // namespace hbasis

#endif  // HBASIS_EXACT_HPP

#include <doctest.h>

#include <random>

#include "hbasis/exact.hpp"
#include "hbasis/macaulay.hpp"
#include "test_util.hpp"

using namespace hbasis;

namespace {

const std::vector<std::string> xy{"x", "y"};

RationalMatrix random_integer_matrix(std::mt19937_64& rng, std::size_t m, std::size_t n,
                                     std::size_t rank) {
  std::uniform_int_distribution<int> e(-4, 4);
  RationalMatrix left(m, rank), right(rank, n), out(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < rank; ++j) left(i, j) = e(rng);
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < n; ++j) right(i, j) = e(rng);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < rank; ++l) out(i, j) += left(i, l) * right(l, j);
  return out;
}

}  // namespace

TEST_CASE("exact rank examples") {
  CHECK(exact_rank(RationalMatrix::identity(3)) == 3);
  CHECK(exact_rank(RationalMatrix(2, 3)) == 0);
  CHECK(exact_rank(RationalMatrix(2, 2, {1, 2, 2, 4})) == 1);
  const PolynomialSystem f(2, {test::poly("x", xy), test::poly("y", xy)});
  CHECK(exact_rank(exact_macaulay(f, 2)) == 3);
  // Entries like 1/3 + 2/3 stay exact.
  RationalMatrix m(2, 2, {Rational(1, 3), Rational(2, 3), Rational(1, 6), Rational(1, 3)});
  CHECK(exact_rank(m) == 1);
}

TEST_CASE("exact rank equals the rank of the transpose") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 50; ++t) {
    const std::size_t m = 2 + t % 6;
    const std::size_t n = 1 + (t * 5) % 7;
    const std::size_t r = 1 + t % std::min(m, n);
    const RationalMatrix a = random_integer_matrix(rng, m, n, r);
    CHECK(exact_rank(a) == exact_rank(a.transpose()));
    CHECK(exact_rank(a) <= r);
  }
}

TEST_CASE("exact nullspace") {
  const auto n = exact_nullspace(RationalMatrix(1, 2, {1, 2}));
  REQUIRE(n.size() == 1);
  CHECK(n[0] == std::vector<Rational>{-2, 1});
  CHECK(exact_nullspace(RationalMatrix::identity(4)).empty());

  const PolynomialSystem f(2, {test::poly("x", xy), test::poly("y", xy)});
  const RationalMatrix c = exact_macaulay(f, 2);
  const auto basis = exact_nullspace(c);
  REQUIRE(basis.size() == 1);
  for (const auto& x : c.multiply(basis[0])) CHECK(x == 0);

  std::mt19937_64 rng(29);
  for (int t = 0; t < 20; ++t) {
    const RationalMatrix a = random_integer_matrix(rng, 4, 7, 1 + t % 4);
    const auto ns = exact_nullspace(a);
    CHECK(ns.size() + exact_rank(a) == 7);
    for (const auto& v : ns)
      for (const auto& x : a.multiply(v)) CHECK(x == 0);
  }
}

TEST_CASE("exact echelon form") {
  const RationalMatrix a(3, 3, {0, 1, 1, 0, 2, 3, 0, 0, 0});
  const ExactEchelon e = exact_echelon(a);
  CHECK(e.pivot_columns == std::vector<std::size_t>{1, 2});
  REQUIRE(e.rref_rows.size() == 2);
  CHECK(e.rref_rows[0] == std::vector<Rational>{0, 1, 0});
  CHECK(e.rref_rows[1] == std::vector<Rational>{0, 0, 1});
  CHECK(exact_pivot_columns(a) == e.pivot_columns);
}

TEST_CASE("doubles convert exactly") {
  Matrix d(1, 2);
  d << 0.1, -3.5;
  const RationalMatrix r = RationalMatrix::from_dense(d);
  CHECK(r(0, 0).get_d() == 0.1);
  CHECK(r(0, 0) != Rational(1, 10));
  CHECK(r(0, 1) == Rational(-7, 2));
}

TEST_CASE("exact Hilbert function of C_k") {
  const PolynomialSystem f(2, {test::poly("x", xy), test::poly("y", xy)});
  CHECK(exact_hilbert_function(f, 1) == 0);
  CHECK(exact_hilbert_function(f, 0) == 1);
  const PolynomialSystem g(2, {test::poly("x^2", xy)});
  CHECK(exact_hilbert_function(g, 3) == 2);
}

TEST_CASE("exact leading monomials") {
  const PolynomialSystem g(2, {test::poly("x^2 + y", xy)});
  CHECK(exact_leading_monomials_at_degree(g, 2) == std::vector<MultiIndex>{MultiIndex{2, 0}});
  CHECK(exact_leading_monomials_at_degree(g, 3) ==
        (std::vector<MultiIndex>{MultiIndex{3, 0}, MultiIndex{2, 1}}));
}

TEST_CASE("monomial ideal Hilbert function") {
  CHECK(monomial_ideal_hilbert_function({MultiIndex{2, 0}}, 2, 5) == 2);
  CHECK(monomial_ideal_hilbert_function({MultiIndex{1, 0}, MultiIndex{0, 1}}, 2, 3) == 0);
  CHECK(monomial_ideal_hilbert_function({}, 3, 2) == 6);
}

TEST_CASE("Groebner basis reference") {
  // <x^2 - y, x*y - 1>: contains y^2 - x, so the graded lex leading monomials
  // are x^2, x*y, y^2.
  const PolynomialSystem f(2, {test::poly("x^2 - y", xy), test::poly("x*y - 1", xy)});
  const auto gb = exact_groebner_basis(f);
  CHECK(gb.size() == 3);
  const auto lm = exact_leading_monomial_ideal(f);
  CHECK(lm.size() == 3);
  const auto hf = exact_ideal_hilbert_function(f, 5);
  CHECK(hf == std::vector<std::size_t>{1, 2, 0, 0, 0, 0});
}

TEST_CASE("ideal Hilbert function of Liu") {
  const auto liu = test::corpus("liu");
  const auto hf = exact_ideal_hilbert_function(liu.system, 8);
  REQUIRE(hf.size() == 9);
  CHECK(hf[0] == 1);
  CHECK(hf[1] == 5);
  // Four input quadrics plus one quadric from a leading form cancellation:
  // 15 - 5.
  CHECK(hf[2] == 10);
}

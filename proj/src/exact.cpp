#include "hbasis/exact.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <utility>

namespace hbasis {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> row_major)
    : rows_(rows), cols_(cols), data_(std::move(row_major)) {
  if (data_.size() != rows * cols) {
    throw std::invalid_argument("RationalMatrix: entry count does not match dimensions");
  }
}

namespace {

Rational exact_rational(double x) {
  if (!std::isfinite(x)) throw std::domain_error("non-finite value has no rational form");
  return Rational(x);
}

using IntRow = std::vector<mpz_class>;

std::size_t nonzeros(const IntRow& r) {
  return static_cast<std::size_t>(
      std::count_if(r.begin(), r.end(), [](const mpz_class& v) { return sgn(v) != 0; }));
}

void remove_content(IntRow& r) {
  mpz_class g = 0;
  for (const auto& v : r) {
    if (sgn(v) == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  if (g == 0 || g == 1) return;
  for (auto& v : r) {
    if (sgn(v) != 0) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
}

// r <- p[col] * r - r[col] * p, then strip the content.
void eliminate(IntRow& r, const IntRow& p, std::size_t col) {
  const mpz_class a = p[col];
  const mpz_class b = r[col];
  for (std::size_t j = 0; j < r.size(); ++j) {
    if (sgn(p[j]) == 0) {
      if (sgn(r[j]) != 0) r[j] *= a;
      continue;
    }
    r[j] = a * r[j] - b * p[j];
  }
  remove_content(r);
}

std::vector<IntRow> integer_rows(const RationalMatrix& m) {
  std::vector<IntRow> rows(m.rows(), IntRow(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class den = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const mpz_class& d = m(i, j).get_den();
      if (d != 1) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& v = m(i, j);
      if (sgn(v) == 0) continue;
      rows[i][j] = v.get_num() * (den / v.get_den());
    }
    remove_content(rows[i]);
  }
  return rows;
}

}  // namespace

RationalMatrix RationalMatrix::from_dense(const Matrix& a) {
  RationalMatrix out(static_cast<std::size_t>(a.rows()), static_cast<std::size_t>(a.cols()));
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = exact_rational(a(i, j));
    }
  }
  return out;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

std::vector<Rational> RationalMatrix::multiply(const std::vector<Rational>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("RationalMatrix::multiply: size mismatch");
  std::vector<Rational> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (sgn(v[j]) != 0) out[i] += (*this)(i, j) * v[j];
    }
  }
  return out;
}

ExactEchelon exact_echelon(const RationalMatrix& m) {
  std::vector<IntRow> rest = integer_rows(m);
  std::vector<IntRow> pivots;
  ExactEchelon out;
  for (std::size_t col = 0; col < m.cols() && !rest.empty(); ++col) {
    // Sparsest candidate limits fill-in; the pivot columns do not depend on it.
    std::size_t best = rest.size();
    std::size_t best_nnz = 0;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (sgn(rest[i][col]) == 0) continue;
      const std::size_t nnz = nonzeros(rest[i]);
      if (best == rest.size() || nnz < best_nnz) {
        best = i;
        best_nnz = nnz;
      }
    }
    if (best == rest.size()) continue;
    IntRow p = std::move(rest[best]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
    for (auto& r : rest) {
      if (sgn(r[col]) != 0) eliminate(r, p, col);
    }
    std::erase_if(rest, [](const IntRow& r) { return nonzeros(r) == 0; });
    out.pivot_columns.push_back(col);
    pivots.push_back(std::move(p));
  }

  for (std::size_t t = pivots.size(); t-- > 0;) {
    for (std::size_t s = 0; s < t; ++s) {
      if (sgn(pivots[s][out.pivot_columns[t]]) != 0) eliminate(pivots[s], pivots[t], out.pivot_columns[t]);
    }
  }
  for (std::size_t t = 0; t < pivots.size(); ++t) {
    const mpz_class lead = pivots[t][out.pivot_columns[t]];
    std::vector<Rational> row(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (sgn(pivots[t][j]) == 0) continue;
      row[j] = Rational(pivots[t][j], lead);
      row[j].canonicalize();
    }
    out.rref_rows.push_back(std::move(row));
  }
  return out;
}

std::size_t exact_rank(const RationalMatrix& m) {
  // The transposed problem is cheaper when there are fewer columns than rows.
  if (m.cols() < m.rows()) return exact_echelon(m.transpose()).pivot_columns.size();
  return exact_echelon(m).pivot_columns.size();
}

std::vector<std::size_t> exact_pivot_columns(const RationalMatrix& m) {
  return exact_echelon(m).pivot_columns;
}

std::vector<std::vector<Rational>> exact_nullspace(const RationalMatrix& m) {
  const ExactEchelon e = exact_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivot_columns) is_pivot[c] = true;
  std::vector<std::vector<Rational>> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(m.cols());
    v[f] = 1;
    for (std::size_t t = 0; t < e.pivot_columns.size(); ++t) v[e.pivot_columns[t]] = -e.rref_rows[t][f];
    out.push_back(std::move(v));
  }
  return out;
}

RationalMatrix exact_macaulay(const PolynomialSystem& system, int k) {
  const MacaulayMatrix c = build_macaulay(system, k);
  return RationalMatrix::from_dense(c.matrix);
}

std::size_t exact_hilbert_function(const PolynomialSystem& system, int k) {
  const int n = static_cast<int>(system.num_vars());
  const RationalMatrix c = exact_macaulay(system, k);
  if (c.cols() == 0) return dim_homogeneous(n, k);
  return dim_homogeneous(n, k) - exact_rank(c);
}

std::vector<MultiIndex> exact_leading_monomials_at_degree(const PolynomialSystem& system, int k) {
  const int n = static_cast<int>(system.num_vars());
  const RationalMatrix c = exact_macaulay(system, k);
  std::vector<MultiIndex> out;
  if (c.cols() == 0) return out;
  for (std::size_t row : exact_pivot_columns(c.transpose())) out.push_back(monomial_unrank(n, k, row));
  return out;
}

RationalPolynomial RationalPolynomial::from_polynomial(const Polynomial& p) {
  RationalPolynomial out(p.num_vars());
  for (const auto& [a, c] : p.terms()) out.add_term(a, exact_rational(c));
  return out;
}

int RationalPolynomial::degree() const {
  return terms_.empty() ? -1 : terms_.begin()->first.total_degree();
}

void RationalPolynomial::add_term(const MultiIndex& a, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(a, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

void RationalPolynomial::subtract_multiple(const Rational& c, const MultiIndex& a,
                                           const RationalPolynomial& g) {
  for (const auto& [b, d] : g.terms_) add_term(a + b, -c * d);
}

void RationalPolynomial::make_monic() {
  if (terms_.empty()) return;
  const Rational lc = terms_.begin()->second;
  for (auto& [a, c] : terms_) c /= lc;
}

namespace {

MultiIndex quotient(const MultiIndex& big, const MultiIndex& small) {
  std::vector<int> e(big.size());
  for (std::size_t i = 0; i < big.size(); ++i) e[i] = big[i] - small[i];
  return MultiIndex(std::move(e));
}

// Full reduction of h modulo basis (every term, not only the leading one).
RationalPolynomial normal_form(RationalPolynomial h, const std::vector<RationalPolynomial>& basis,
                               std::size_t skip = static_cast<std::size_t>(-1)) {
  RationalPolynomial r(h.num_vars());
  while (!h.is_zero()) {
    const MultiIndex lm = h.leading_monomial();
    const Rational lc = h.leading_coefficient();
    bool reduced = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (i == skip || basis[i].is_zero()) continue;
      if (!divides(basis[i].leading_monomial(), lm)) continue;
      h.subtract_multiple(lc / basis[i].leading_coefficient(),
                          quotient(lm, basis[i].leading_monomial()), basis[i]);
      reduced = true;
      break;
    }
    if (!reduced) {
      r.add_term(lm, lc);
      h.add_term(lm, -lc);
    }
  }
  return r;
}

}  // namespace

std::vector<RationalPolynomial> exact_groebner_basis(const PolynomialSystem& system) {
  std::vector<RationalPolynomial> g;
  for (const auto& f : system.generators()) {
    RationalPolynomial p = normal_form(RationalPolynomial::from_polynomial(f), g);
    if (p.is_zero()) continue;
    p.make_monic();
    g.push_back(std::move(p));
  }

  std::set<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t j = 0; j < g.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pending.emplace(i, j);
  }

  auto lcm_of = [&](std::size_t i, std::size_t j) {
    return lcm(g[i].leading_monomial(), g[j].leading_monomial());
  };

  while (!pending.empty()) {
    // Normal selection strategy: smallest lcm under graded lex.
    auto pick = pending.begin();
    MultiIndex best = lcm_of(pick->first, pick->second);
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      MultiIndex l = lcm_of(it->first, it->second);
      if (GradedLexGreater{}(best, l)) {
        best = std::move(l);
        pick = it;
      }
    }
    const auto [i, j] = *pick;
    pending.erase(pick);

    const MultiIndex& li = g[i].leading_monomial();
    const MultiIndex& lj = g[j].leading_monomial();
    if ((li + lj) == best) continue;  // coprime leading monomials

    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == i || k == j || !divides(g[k].leading_monomial(), best)) continue;
      const auto key = [](std::size_t a, std::size_t b) {
        return std::pair{std::min(a, b), std::max(a, b)};
      };
      chain = !pending.contains(key(i, k)) && !pending.contains(key(j, k));
    }
    if (chain) continue;

    RationalPolynomial s(g[i].num_vars());
    s.subtract_multiple(-1, quotient(best, li), g[i]);
    s.subtract_multiple(1, quotient(best, lj), g[j]);
    RationalPolynomial h = normal_form(std::move(s), g);
    if (h.is_zero()) continue;
    h.make_monic();
    g.push_back(std::move(h));
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pending.emplace(k, g.size() - 1);
  }

  // Minimize, then interreduce.
  std::vector<RationalPolynomial> minimal;
  for (std::size_t a = 0; a < g.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < g.size() && !redundant; ++b) {
      if (a == b || !divides(g[b].leading_monomial(), g[a].leading_monomial())) continue;
      redundant = g[b].leading_monomial() != g[a].leading_monomial() || b < a;
    }
    if (!redundant) minimal.push_back(g[a]);
  }
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    RationalPolynomial tail(minimal[a].num_vars());
    const MultiIndex lm = minimal[a].leading_monomial();
    RationalPolynomial rest = minimal[a];
    rest.add_term(lm, -rest.leading_coefficient());
    RationalPolynomial red = normal_form(std::move(rest), minimal, a);
    red.add_term(lm, 1);
    minimal[a] = std::move(red);
  }
  std::sort(minimal.begin(), minimal.end(), [](const auto& x, const auto& y) {
    return GradedLexGreater{}(y.leading_monomial(), x.leading_monomial());
  });
  return minimal;
}

std::vector<MultiIndex> exact_leading_monomial_ideal(const PolynomialSystem& system) {
  std::vector<MultiIndex> out;
  for (const auto& g : exact_groebner_basis(system)) out.push_back(g.leading_monomial());
  return out;
}

std::size_t monomial_ideal_hilbert_function(const std::vector<MultiIndex>& generators, int n,
                                            int k) {
  std::size_t count = 0;
  for (const auto& m : monomials_of_degree(n, k)) {
    const bool in_ideal = std::any_of(generators.begin(), generators.end(),
                                      [&](const MultiIndex& g) { return divides(g, m); });
    if (!in_ideal) ++count;
  }
  return count;
}

std::vector<std::size_t> exact_ideal_hilbert_function(const PolynomialSystem& system,
                                                      int max_degree) {
  const auto lms = exact_leading_monomial_ideal(system);
  const int n = static_cast<int>(system.num_vars());
  std::vector<std::size_t> out;
  for (int k = 0; k <= max_degree; ++k) out.push_back(monomial_ideal_hilbert_function(lms, n, k));
  return out;
}

}  // namespace hbasis

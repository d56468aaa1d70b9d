#include "hbasis/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hbasis {

HomogeneousForm::HomogeneousForm(int n, int k)
    : num_vars(n), degree(k), coeffs(dim_homogeneous(n, k), 0.0) {}

HomogeneousForm::HomogeneousForm(int n, int k, std::vector<double> c)
    : num_vars(n), degree(k), coeffs(std::move(c)) {
  if (coeffs.size() != dim_homogeneous(n, k)) {
    throw std::invalid_argument("homogeneous form length does not match dim_homogeneous(n, k)");
  }
}

double HomogeneousForm::norm2() const {
  double s = 0.0;
  for (double c : coeffs) s += c * c;
  return std::sqrt(s);
}

Polynomial::Polynomial(std::size_t num_vars, TermMap terms) : num_vars_(num_vars) {
  for (auto& [a, c] : terms) {
    check_vars(a);
    if (c != 0.0) terms_.emplace(a, c);
  }
}

Polynomial Polynomial::constant(std::size_t num_vars, double c) {
  Polynomial p(num_vars);
  p.add_term(MultiIndex(num_vars), c);
  return p;
}

Polynomial Polynomial::from_form(const HomogeneousForm& form) {
  Polynomial p(static_cast<std::size_t>(form.num_vars));
  for (std::size_t i = 0; i < form.coeffs.size(); ++i) {
    if (form.coeffs[i] != 0.0) {
      p.terms_.emplace_hint(p.terms_.end(), monomial_unrank(form.num_vars, form.degree, i),
                            form.coeffs[i]);
    }
  }
  return p;
}

void Polynomial::check_vars(const MultiIndex& a) const {
  if (a.size() != num_vars_) {
    throw std::invalid_argument("term has " + std::to_string(a.size()) +
                                " exponents, polynomial has " + std::to_string(num_vars_) +
                                " variables");
  }
}

double Polynomial::coefficient(const MultiIndex& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? 0.0 : it->second;
}

void Polynomial::add_term(const MultiIndex& a, double c) {
  if (c == 0.0) return;
  check_vars(a);
  auto [it, inserted] = terms_.try_emplace(a, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0.0) terms_.erase(it);
  }
}

int Polynomial::degree() const {
  return terms_.empty() ? -1 : terms_.begin()->first.total_degree();
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (num_vars_ != other.num_vars_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [a, c] : other.terms_) add_term(a, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (num_vars_ != other.num_vars_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [a, c] : other.terms_) add_term(a, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(double s) {
  if (s == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= s;
    if (it->second == 0.0) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.num_vars_ != b.num_vars_) throw std::invalid_argument("variable count mismatch");
  Polynomial out(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

double Polynomial::norm1() const {
  double s = 0.0;
  for (const auto& [a, c] : terms_) s += std::abs(c);
  return s;
}

double Polynomial::norm2() const {
  double s = 0.0;
  for (const auto& [a, c] : terms_) s += c * c;
  return std::sqrt(s);
}

double Polynomial::norm_inf() const {
  double s = 0.0;
  for (const auto& [a, c] : terms_) s = std::max(s, std::abs(c));
  return s;
}

HomogeneousForm Polynomial::component(int k) const {
  HomogeneousForm form(static_cast<int>(num_vars_), k);
  for (const auto& [a, c] : terms_) {
    if (a.total_degree() == k) form.coeffs[monomial_rank(a)] = c;
  }
  return form;
}

Polynomial Polynomial::truncated_below(int k) const {
  Polynomial out(num_vars_);
  for (const auto& [a, c] : terms_) {
    if (a.total_degree() < k) out.terms_.emplace_hint(out.terms_.end(), a, c);
  }
  return out;
}

Polynomial Polynomial::pruned(double threshold) const {
  Polynomial out(num_vars_);
  for (const auto& [a, c] : terms_) {
    if (std::abs(c) > threshold) out.terms_.emplace_hint(out.terms_.end(), a, c);
  }
  return out;
}

HomogeneousForm leading_form(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("leading form of the zero polynomial");
  return p.component(p.degree());
}

std::vector<HomogeneousForm> homogeneous_components(const Polynomial& p) {
  std::vector<HomogeneousForm> out;
  const int n = static_cast<int>(p.num_vars());
  for (const auto& [a, c] : p.terms()) {
    const int k = a.total_degree();
    if (out.empty() || out.back().degree != k) out.emplace_back(n, k);
    out.back().coeffs[monomial_rank(a)] = c;
  }
  return out;
}

Polynomial multiply_monomial(const Polynomial& p, const MultiIndex& a) {
  Polynomial::TermMap terms;
  for (const auto& [e, c] : p.terms()) terms.emplace_hint(terms.end(), e + a, c);
  return Polynomial(p.num_vars(), std::move(terms));
}

PolynomialSystem::PolynomialSystem(std::size_t num_vars, std::vector<Polynomial> generators)
    : num_vars_(num_vars) {
  for (auto& g : generators) append(std::move(g));
}

void PolynomialSystem::append(Polynomial p) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial in generator list");
  if (p.num_vars() != num_vars_) {
    throw std::invalid_argument("generator variable count does not match system");
  }
  generators_.push_back(std::move(p));
}

std::vector<int> PolynomialSystem::degrees() const {
  std::vector<int> d;
  d.reserve(generators_.size());
  for (const auto& g : generators_) d.push_back(g.degree());
  return d;
}

int PolynomialSystem::min_degree() const {
  if (generators_.empty()) throw std::logic_error("empty polynomial system");
  auto d = degrees();
  return *std::min_element(d.begin(), d.end());
}

int PolynomialSystem::max_degree() const {
  if (generators_.empty()) throw std::logic_error("empty polynomial system");
  auto d = degrees();
  return *std::max_element(d.begin(), d.end());
}

}  // namespace hbasis

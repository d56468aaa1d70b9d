#ifndef HBASIS_TEST_UTIL_HPP
#define HBASIS_TEST_UTIL_HPP

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "hbasis/parse.hpp"
#include "hbasis/polynomial.hpp"
#include "hbasis/system_file.hpp"

namespace hbasis::test {

inline std::filesystem::path corpus_dir() { return HBASIS_CORPUS_DIR; }

inline SystemFile corpus(const std::string& name) {
  return parse_system_file(corpus_dir() / (name + ".sys"));
}

inline Polynomial poly(const std::string& text, const std::vector<std::string>& vars) {
  return parse_polynomial(text, vars);
}

// Dense random polynomial with integer coefficients in [-5, 5], all degrees
// up to deg, guaranteed to have degree exactly deg.
inline Polynomial random_polynomial(std::mt19937_64& rng, int n, int deg, double density = 0.6) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::bernoulli_distribution keep(density);
  Polynomial p(static_cast<std::size_t>(n));
  for (int k = 0; k <= deg; ++k) {
    for (const auto& a : monomials_of_degree(n, k)) {
      if (!keep(rng)) continue;
      const int c = coef(rng);
      if (c != 0) p.add_term(a, c);
    }
  }
  if (p.degree() < deg) p.add_term(monomials_of_degree(n, deg).front(), 1.0);
  return p;
}

inline PolynomialSystem random_system(std::mt19937_64& rng, int n, int s, int max_deg) {
  std::uniform_int_distribution<int> d(1, max_deg);
  std::vector<Polynomial> gens;
  for (int i = 0; i < s; ++i) gens.push_back(random_polynomial(rng, n, d(rng)));
  return PolynomialSystem(static_cast<std::size_t>(n), std::move(gens));
}

}  // namespace hbasis::test

#endif  // HBASIS_TEST_UTIL_HPP

#ifndef HBASIS_REDUCTION_HPP
#define HBASIS_REDUCTION_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "hbasis/macaulay.hpp"
#include "hbasis/numla.hpp"
#include "hbasis/polynomial.hpp"

namespace hbasis {

// C_k(F) together with its SVD and numerical rank.
struct DecomposedMacaulay {
  MacaulayMatrix macaulay;
  SvdResult svd;  // full U and V
  std::size_t rank = 0;
  double tau = 0.0;
};

// Per-degree cache of decomposed Macaulay matrices for one frozen system.
// Lookups may come from several threads; population is serialized.
class MacaulayCache {
 public:
  MacaulayCache(PolynomialSystem system, RankPolicy policy);

  const PolynomialSystem& system() const { return system_; }
  const RankPolicy& policy() const { return policy_; }
  const DecomposedMacaulay& at(int k) const;

 private:
  PolynomialSystem system_;
  RankPolicy policy_;
  mutable std::shared_mutex mutex_;
  mutable std::map<int, std::unique_ptr<DecomposedMacaulay>> entries_;
};

DecomposedMacaulay decompose_macaulay(MacaulayMatrix c, const RankPolicy& policy);

// g = C_k(F) c_tilde + r^k with r^k orthogonal to the range of C_k(F).
struct HomogeneousDecomposition {
  std::vector<HomogeneousForm> generator_parts;  // g_{f,k}, one per generator (degree k - d_f)
  HomogeneousForm remainder;  // r^k
  Vector coefficients;  // c_j = <u_j, g>, j < rank
  Vector scaled;  // c_tilde = sum_j (c_j / sigma_j) v_j
};

// Throws std::invalid_argument on a degree mismatch.
HomogeneousDecomposition decompose_homogeneous(const HomogeneousForm& g,
                                               const DecomposedMacaulay& c);
HomogeneousDecomposition decompose_homogeneous(const HomogeneousForm& g, const MacaulayMatrix& c,
                                               const RankPolicy& policy);

struct ReductionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
  double reconstruction_residual = 0.0;
  std::vector<std::pair<int, double>> remainder_norms_per_degree;
};

// p = sum_f q_f f + r with deg(q_f f) <= deg(p) and every homogeneous piece of
// r orthogonal to M_k(F). Throws std::domain_error on non-finite values.
ReductionResult reduce(const Polynomial& p, MacaulayCache& cache);
ReductionResult reduce(const Polynomial& p, const PolynomialSystem& system,
                       const RankPolicy& policy);

enum class ZeroTest { Absolute, Relative };

// Absolute: ||r||_2 <= epsilon. Relative: ||r||_2 <= epsilon * max(1, scale).
bool is_numerically_zero(const Polynomial& r, double epsilon, ZeroTest mode = ZeroTest::Absolute,
                         double scale = 1.0);

}  // namespace hbasis

#endif  // HBASIS_REDUCTION_HPP

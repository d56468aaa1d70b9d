#ifndef HBASIS_TEST_SYZYGY_CHAIN_HPP
#define HBASIS_TEST_SYZYGY_CHAIN_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "hbasis/macaulay.hpp"
#include "hbasis/numla.hpp"
#include "hbasis/syzygy.hpp"

namespace hbasis::test {

// One degree step of the syzygy chain with the quantities the update must
// satisfy, next to an independent direct SVD of the same C_k.
struct ChainStep {
  int degree = 0;
  bool from_update = false;
  std::size_t columns = 0;
  std::size_t direct_nullity = 0;
  double orthonormality = 0.0;  // max |N^T N - I|
  double residual = 0.0;  // max |C_k N|
  double tau_prime = 0.0;  // tolerance used for the pure part (tau' of B, or tau of C_k)
  double tau_direct = 0.0;
};

inline std::vector<ChainStep> run_syzygy_chain(const PolynomialSystem& f, int last,
                                               const RankPolicy& policy = {}) {
  std::vector<ChainStep> out;
  std::optional<SyzygyBasis> prev;
  for (int k = f.min_degree(); k <= last; ++k) {
    const MacaulayMatrix c = build_macaulay(f, k);
    ChainStep step;
    step.degree = k;
    const SvdResult direct = svd(c.matrix, SvdMode::Thin);
    const auto m = static_cast<std::size_t>(c.matrix.rows());
    const std::size_t n = c.layout.total_cols;
    const std::span<const double> sv(direct.singular_values.data(),
                                     static_cast<std::size_t>(direct.singular_values.size()));
    step.direct_nullity = n - numerical_rank(sv, policy, m, n);
    step.tau_direct = rank_tolerance(sv, policy, m, n);
    SyzygyBasis next;
    if (prev) {
      UpdateDiagnostics diag;
      next = update_syzygies(*prev, c, build_shift_family(prev->layout, c.layout), policy, &diag);
      step.from_update = true;
      step.tau_prime = diag.tau_b;
    } else {
      next = initial_syzygies(c, policy);
      step.tau_prime = step.tau_direct;
    }
    step.columns = next.size();
    if (next.size() > 0) {
      step.orthonormality = orthonormality_residual(next.basis);
      step.residual = max_abs(c.matrix * next.basis);
    }
    out.push_back(step);
    prev = std::move(next);
  }
  return out;
}

}  // namespace hbasis::test

#endif  // HBASIS_TEST_SYZYGY_CHAIN_HPP

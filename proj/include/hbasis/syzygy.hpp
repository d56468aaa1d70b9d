#ifndef HBASIS_SYZYGY_HPP
#define HBASIS_SYZYGY_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "hbasis/macaulay.hpp"
#include "hbasis/numla.hpp"
#include "hbasis/polynomial.hpp"

namespace hbasis {

// Orthonormal basis N_k of the nullspace of C_k(F). Columns listed in
// pure_columns first appear at this degree; the others are extensions of
// degree k-1 syzygies.
struct SyzygyBasis {
  int degree = 0;
  BlockLayout layout;
  Matrix basis;
  std::vector<std::size_t> pure_columns;

  std::size_t size() const { return static_cast<std::size_t>(basis.cols()); }
  Matrix pure() const;
};

struct UpdateDiagnostics {
  std::size_t rank_a = 0;  // r
  std::size_t rank_b = 0;  // r'
  Vector spectrum_a;
  Vector spectrum_b;
  double tau_a = 0.0;
  double tau_b = 0.0;
  // sigma_r / sigma_{r+1} at the chosen cut; infinity when nothing follows.
  double gap_a = 0.0;
  double gap_b = 0.0;
};

// Direct SVD nullspace of C_k; every column is flagged pure.
SyzygyBasis initial_syzygies(const MacaulayMatrix& c, const RankPolicy& policy);

// One step of the syzygy update: extends N_k through the shift matrices and
// completes it with the new (pure) syzygies of C_{k+1}.
//   A = [L_1 ... L_n] N_k = Q S W^T,   Q = [Q_1 | Q_2],  r = rank A
//   B = C_{k+1} Q_2 = U Sigma V^T,     V = [V_1 | V_2],  r' = rank B
//   N_{k+1} = [Q_1 | Q_2 V_2]
// tau' for B is the policy applied to B's own dimensions and spectrum.
SyzygyBasis update_syzygies(const SyzygyBasis& current, const MacaulayMatrix& next,
                            std::span<const ShiftMatrix> shifts, const RankPolicy& policy,
                            UpdateDiagnostics* diagnostics = nullptr);

// p = sum_i sum_alpha v_{i,alpha} x^alpha f_i with the full generators.
Polynomial syzygy_to_polynomial(std::span<const double> v, const PolynomialSystem& system,
                                const BlockLayout& layout);
Polynomial syzygy_to_polynomial(const Vector& v, const PolynomialSystem& system,
                                const BlockLayout& layout);

}  // namespace hbasis

#endif  // HBASIS_SYZYGY_HPP

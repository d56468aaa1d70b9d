#ifndef HBASIS_NUMLA_HPP
#define HBASIS_NUMLA_HPP

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace hbasis {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

struct SvdResult {
  Matrix U;  // m x m (full) or m x min(m,n) (thin); m x 0 for RightFull
  Vector singular_values;  // non-increasing, length min(m,n)
  Matrix V;  // n x n (full) or n x min(m,n) (thin); n x 0 for LeftFull
};

// LeftFull / RightFull compute only the full U or only the full V.
enum class SvdMode { Full, Thin, LeftFull, RightFull };

// Throws std::domain_error on non-finite entries. Empty matrices are allowed
// and yield identity factors of the appropriate size.
SvdResult svd(const Matrix& a, SvdMode mode = SvdMode::Full);

enum class RankStrategy { Tolerance, GapMax };

struct RankPolicy {
  RankStrategy strategy = RankStrategy::Tolerance;
  std::optional<double> tau_override;
  double epsilon_machine = std::numeric_limits<double>::epsilon();
  // Smallest gap ratio sigma_r / sigma_{r+1} accepted as a rank cut by GapMax.
  double gap_floor = 1e3;
};

// max(m, n) * sigma_max * eps
double default_tolerance(std::size_t m, std::size_t n, double sigma_max, double eps);

// Threshold tau the policy applies to a spectrum of an m x n matrix.
double rank_tolerance(std::span<const double> sv, const RankPolicy& policy, std::size_t m,
                      std::size_t n);

std::size_t numerical_rank(std::span<const double> sv, const RankPolicy& policy, std::size_t m,
                           std::size_t n);
std::size_t numerical_rank(const Vector& sv, const RankPolicy& policy, std::size_t m,
                           std::size_t n);

// Orthonormal basis of the numerical nullspace: trailing columns of V.
Matrix nullspace_basis(const Matrix& a, const RankPolicy& policy);

// Gaussian elimination with partial (row) pivoting. Columns are never
// permuted; a column becomes a pivot column when its largest remaining entry
// exceeds tol in absolute value.
std::vector<std::size_t> echelon_pivot_columns(const Matrix& a, double tol);

double max_abs(const Matrix& a);
// max |A^T A - I|
double orthonormality_residual(const Matrix& a);

}  // namespace hbasis

#endif  // HBASIS_NUMLA_HPP

#include "hbasis/numla.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include <lapacke.h>

namespace hbasis {

SvdResult svd(const Matrix& a, SvdMode mode) {
  if (!a.allFinite()) throw std::domain_error("svd: matrix has non-finite entries");
  const Eigen::Index m = a.rows();
  const Eigen::Index n = a.cols();
  const Eigen::Index p = std::min(m, n);
  const bool want_u = mode != SvdMode::RightFull;
  const bool want_v = mode != SvdMode::LeftFull;
  const bool thin = mode == SvdMode::Thin;
  SvdResult out;
  if (p == 0) {
    out.singular_values = Vector(0);
    out.U = (want_u && !thin) ? Matrix::Identity(m, m) : Matrix(m, 0);
    out.V = (want_v && !thin) ? Matrix::Identity(n, n) : Matrix(n, 0);
    return out;
  }

  // Divide and conquer. With jobz 'O' the factor that is not wanted is
  // written over the input, which keeps wide A / tall B cheap.
  char jobz = thin ? 'S' : 'A';
  if (mode == SvdMode::LeftFull && m < n) jobz = 'O';
  if (mode == SvdMode::RightFull && m >= n) jobz = 'O';
  const bool u_stored = jobz != 'O' || m < n;
  const bool vt_stored = jobz != 'O' || m >= n;
  const Eigen::Index ucols = thin ? p : m;
  const Eigen::Index vrows = thin ? p : n;

  Matrix work = a;
  Matrix u(u_stored ? m : 1, u_stored ? ucols : 1);
  Matrix vt(vt_stored ? vrows : 1, vt_stored ? n : 1);
  out.singular_values.resize(p);
  lapack_int info = LAPACKE_dgesdd(
      LAPACK_COL_MAJOR, jobz, static_cast<lapack_int>(m), static_cast<lapack_int>(n), work.data(),
      static_cast<lapack_int>(m), out.singular_values.data(), u.data(),
      static_cast<lapack_int>(u.rows()), vt.data(), static_cast<lapack_int>(vt.rows()));
  if (info > 0) {
    // QR iteration driver as a fallback when divide and conquer fails.
    const char jobu = want_u ? (thin ? 'S' : 'A') : 'N';
    const char jobvt = want_v ? (thin ? 'S' : 'A') : 'N';
    work = a;
    u.resize(want_u ? m : 1, want_u ? ucols : 1);
    vt.resize(want_v ? vrows : 1, want_v ? n : 1);
    std::vector<double> superb(static_cast<std::size_t>(p));
    info = LAPACKE_dgesvd(LAPACK_COL_MAJOR, jobu, jobvt, static_cast<lapack_int>(m),
                          static_cast<lapack_int>(n), work.data(), static_cast<lapack_int>(m),
                          out.singular_values.data(), u.data(), static_cast<lapack_int>(u.rows()),
                          vt.data(), static_cast<lapack_int>(vt.rows()), superb.data());
  }
  if (info != 0) throw std::domain_error("svd: LAPACK returned " + std::to_string(info));
  out.U = want_u ? std::move(u) : Matrix(m, 0);
  out.V = want_v ? Matrix(vt.transpose()) : Matrix(n, 0);
  if (!out.U.allFinite() || !out.V.allFinite() || !out.singular_values.allFinite()) {
    throw std::domain_error("svd: decomposition produced non-finite values");
  }
  return out;
}

double default_tolerance(std::size_t m, std::size_t n, double sigma_max, double eps) {
  return static_cast<double>(std::max(m, n)) * sigma_max * eps;
}

double rank_tolerance(std::span<const double> sv, const RankPolicy& policy, std::size_t m,
                      std::size_t n) {
  if (policy.tau_override) return *policy.tau_override;
  const double sigma_max = sv.empty() ? 0.0 : sv.front();
  return default_tolerance(m, n, sigma_max, policy.epsilon_machine);
}

std::size_t numerical_rank(std::span<const double> sv, const RankPolicy& policy, std::size_t m,
                           std::size_t n) {
  const double tau = rank_tolerance(sv, policy, m, n);
  std::size_t above = 0;
  while (above < sv.size() && sv[above] > tau) ++above;
  if (policy.strategy == RankStrategy::Tolerance || above == 0) return above;

  // Gap strategy: argmax of sigma_r / sigma_{r+1} over r with sigma_r above the floor.
  std::size_t best = above;
  double best_ratio = 0.0;
  // A cut needs a successor value; the last position is never a gap.
  for (std::size_t r = 1; r <= above && r < sv.size(); ++r) {
    const double next = sv[r];
    const double ratio = (next > 0.0) ? sv[r - 1] / next : std::numeric_limits<double>::infinity();
    if (ratio > best_ratio) {
      best_ratio = ratio;
      best = r;
    }
  }
  return best_ratio > policy.gap_floor ? best : above;
}

std::size_t numerical_rank(const Vector& sv, const RankPolicy& policy, std::size_t m,
                           std::size_t n) {
  return numerical_rank(std::span<const double>(sv.data(), static_cast<std::size_t>(sv.size())),
                        policy, m, n);
}

Matrix nullspace_basis(const Matrix& a, const RankPolicy& policy) {
  const auto n = a.cols();
  if (a.rows() == 0) return Matrix::Identity(n, n);
  SvdResult dec = svd(a, SvdMode::RightFull);
  const auto r = static_cast<Eigen::Index>(
      numerical_rank(dec.singular_values, policy, static_cast<std::size_t>(a.rows()),
                     static_cast<std::size_t>(n)));
  return dec.V.rightCols(n - r);
}

std::vector<std::size_t> echelon_pivot_columns(const Matrix& a, double tol) {
  Matrix work = a;
  const Eigen::Index m = work.rows();
  std::vector<std::size_t> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < work.cols() && row < m; ++col) {
    Eigen::Index best = row;
    double best_abs = 0.0;
    for (Eigen::Index i = row; i < m; ++i) {
      const double v = std::abs(work(i, col));
      if (v > best_abs) {
        best_abs = v;
        best = i;
      }
    }
    if (best_abs <= tol) continue;
    work.row(row).swap(work.row(best));
    const double pivot = work(row, col);
    for (Eigen::Index i = row + 1; i < m; ++i) {
      const double factor = work(i, col) / pivot;
      if (factor == 0.0) continue;
      work.row(i).tail(work.cols() - col) -= factor * work.row(row).tail(work.cols() - col);
      work(i, col) = 0.0;
    }
    pivots.push_back(static_cast<std::size_t>(col));
    ++row;
  }
  return pivots;
}

double max_abs(const Matrix& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }

double orthonormality_residual(const Matrix& a) {
  if (a.cols() == 0) return 0.0;
  const Matrix gram = a.transpose() * a;
  return max_abs(gram - Matrix::Identity(a.cols(), a.cols()));
}

}  // namespace hbasis

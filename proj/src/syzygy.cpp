#include "hbasis/syzygy.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace hbasis {

namespace {

double gap_at(const Vector& sv, std::size_t r) {
  if (r == 0 || sv.size() == 0) return 0.0;
  const auto idx = static_cast<Eigen::Index>(r);
  if (idx >= sv.size() || sv(idx) == 0.0) return std::numeric_limits<double>::infinity();
  return sv(idx - 1) / sv(idx);
}

}  // namespace

Matrix SyzygyBasis::pure() const {
  Matrix out(basis.rows(), static_cast<Eigen::Index>(pure_columns.size()));
  for (std::size_t j = 0; j < pure_columns.size(); ++j) {
    out.col(static_cast<Eigen::Index>(j)) = basis.col(static_cast<Eigen::Index>(pure_columns[j]));
  }
  return out;
}

SyzygyBasis initial_syzygies(const MacaulayMatrix& c, const RankPolicy& policy) {
  SyzygyBasis out;
  out.degree = c.degree();
  out.layout = c.layout;
  out.basis = nullspace_basis(c.matrix, policy);
  out.pure_columns.resize(out.size());
  std::iota(out.pure_columns.begin(), out.pure_columns.end(), std::size_t{0});
  return out;
}

SyzygyBasis update_syzygies(const SyzygyBasis& current, const MacaulayMatrix& next,
                            std::span<const ShiftMatrix> shifts, const RankPolicy& policy,
                            UpdateDiagnostics* diagnostics) {
  if (next.degree() != current.degree + 1) {
    throw std::invalid_argument("update_syzygies: degree mismatch");
  }
  if (static_cast<std::size_t>(current.basis.rows()) != current.layout.total_cols ||
      next.layout.total_cols != static_cast<std::size_t>(next.matrix.cols())) {
    throw std::invalid_argument("update_syzygies: basis does not match its layout");
  }
  for (const auto& s : shifts) {
    if (s.source.total_cols != current.layout.total_cols ||
        s.target.total_cols != next.layout.total_cols) {
      throw std::invalid_argument("update_syzygies: shift matrices do not match layouts");
    }
  }
  if (!current.basis.allFinite()) throw std::domain_error("update_syzygies: non-finite basis");

  const auto d_next = static_cast<Eigen::Index>(next.layout.total_cols);
  const Matrix a = apply_extension(shifts, current.basis);
  const SvdResult qsw = svd(a, SvdMode::LeftFull);
  const std::size_t r = numerical_rank(qsw.singular_values, policy,
                                       static_cast<std::size_t>(a.rows()),
                                       static_cast<std::size_t>(a.cols()));
  const auto ri = static_cast<Eigen::Index>(r);
  const Matrix q2 = qsw.U.rightCols(d_next - ri);

  const Matrix b = next.matrix * q2;
  Matrix v2;
  std::size_t r_b = 0;
  SvdResult usv;
  if (b.cols() > 0) {
    usv = svd(b, SvdMode::RightFull);
    r_b = numerical_rank(usv.singular_values, policy, static_cast<std::size_t>(b.rows()),
                         static_cast<std::size_t>(b.cols()));
    v2 = usv.V.rightCols(b.cols() - static_cast<Eigen::Index>(r_b));
  } else {
    v2 = Matrix(0, 0);
  }

  SyzygyBasis out;
  out.degree = next.degree();
  out.layout = next.layout;
  out.basis.resize(d_next, ri + v2.cols());
  out.basis.leftCols(ri) = qsw.U.leftCols(ri);
  if (v2.cols() > 0) out.basis.rightCols(v2.cols()) = q2 * v2;
  for (Eigen::Index j = 0; j < v2.cols(); ++j) {
    out.pure_columns.push_back(static_cast<std::size_t>(ri + j));
  }

  if (diagnostics) {
    diagnostics->rank_a = r;
    diagnostics->rank_b = r_b;
    diagnostics->spectrum_a = qsw.singular_values;
    diagnostics->spectrum_b = usv.singular_values;
    const auto sv_span = [](const Vector& v) {
      return std::span<const double>(v.data(), static_cast<std::size_t>(v.size()));
    };
    diagnostics->tau_a = rank_tolerance(sv_span(qsw.singular_values), policy,
                                        static_cast<std::size_t>(a.rows()),
                                        static_cast<std::size_t>(a.cols()));
    diagnostics->tau_b = rank_tolerance(sv_span(usv.singular_values), policy,
                                        static_cast<std::size_t>(b.rows()),
                                        static_cast<std::size_t>(b.cols()));
    diagnostics->gap_a = gap_at(qsw.singular_values, r);
    diagnostics->gap_b = gap_at(usv.singular_values, r_b);
  }
  return out;
}

Polynomial syzygy_to_polynomial(std::span<const double> v, const PolynomialSystem& system,
                                const BlockLayout& layout) {
  if (v.size() != layout.total_cols) {
    throw std::invalid_argument("syzygy_to_polynomial: coordinate vector length mismatch");
  }
  Polynomial p(system.num_vars());
  for (const auto& b : layout.blocks) {
    for (std::size_t c = 0; c < b.width; ++c) {
      const double coeff = v[b.offset + c];
      if (coeff == 0.0) continue;
      const MultiIndex alpha = monomial_unrank(layout.num_vars, b.shift_degree, c);
      for (const auto& [beta, fc] : system[b.generator].terms()) {
        p.add_term(alpha + beta, coeff * fc);
      }
    }
  }
  return p;
}

Polynomial syzygy_to_polynomial(const Vector& v, const PolynomialSystem& system,
                                const BlockLayout& layout) {
  return syzygy_to_polynomial(std::span<const double>(v.data(), static_cast<std::size_t>(v.size())),
                              system, layout);
}

}  // namespace hbasis

#include "hbasis/macaulay.hpp"

#include <stdexcept>
#include <string>

namespace hbasis {

BlockLayout BlockLayout::make(std::span<const int> generator_degrees, int num_vars, int k) {
  BlockLayout layout;
  layout.degree = k;
  layout.num_vars = num_vars;
  std::size_t offset = 0;
  for (std::size_t i = 0; i < generator_degrees.size(); ++i) {
    Block b;
    b.generator = i;
    b.shift_degree = k - generator_degrees[i];
    b.width = dim_homogeneous(num_vars, b.shift_degree);
    b.offset = offset;
    offset += b.width;
    layout.blocks.push_back(b);
  }
  layout.total_cols = offset;
  return layout;
}

std::size_t BlockLayout::column(std::size_t generator, const MultiIndex& shift) const {
  const Block& b = blocks.at(generator);
  if (shift.total_degree() != b.shift_degree) {
    throw std::invalid_argument("shift monomial degree does not match block");
  }
  return b.offset + monomial_rank(shift);
}

MacaulayMatrix build_macaulay(const PolynomialSystem& system, int k) {
  if (k < 0) throw std::invalid_argument("build_macaulay: negative degree");
  const int n = static_cast<int>(system.num_vars());
  const auto degrees = system.degrees();
  MacaulayMatrix out{Matrix(), BlockLayout::make(degrees, n, k)};
  out.matrix = Matrix::Zero(static_cast<Eigen::Index>(dim_homogeneous(n, k)),
                            static_cast<Eigen::Index>(out.layout.total_cols));
  for (const auto& block : out.layout.blocks) {
    if (block.width == 0) continue;
    const Polynomial& f = system[block.generator];
    const int d = degrees[block.generator];
    const auto shifts = monomials_of_degree(n, block.shift_degree);
    for (const auto& [beta, c] : f.terms()) {
      if (beta.total_degree() != d) break;  // terms are graded-lex descending
      for (std::size_t j = 0; j < shifts.size(); ++j) {
        const auto row = static_cast<Eigen::Index>(monomial_rank(shifts[j] + beta));
        out.matrix(row, static_cast<Eigen::Index>(block.offset + j)) = c;
      }
    }
  }
  return out;
}

std::pair<std::size_t, MultiIndex> column_label(const BlockLayout& layout, std::size_t col) {
  if (col >= layout.total_cols) {
    throw std::out_of_range("column " + std::to_string(col) + " out of range");
  }
  for (const auto& b : layout.blocks) {
    if (col < b.offset + b.width) {
      return {b.generator, monomial_unrank(layout.num_vars, b.shift_degree, col - b.offset)};
    }
  }
  throw std::logic_error("column_label: inconsistent layout");
}

Matrix ShiftMatrix::dense() const {
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(target.total_cols),
                          static_cast<Eigen::Index>(source.total_cols));
  for (std::size_t c = 0; c < target_row.size(); ++c) {
    m(static_cast<Eigen::Index>(target_row[c]), static_cast<Eigen::Index>(c)) = 1.0;
  }
  return m;
}

Matrix ShiftMatrix::apply(const Matrix& coords) const {
  if (static_cast<std::size_t>(coords.rows()) != source.total_cols) {
    throw std::invalid_argument("shift matrix applied to coordinates of the wrong layout");
  }
  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(target.total_cols), coords.cols());
  for (std::size_t c = 0; c < target_row.size(); ++c) {
    out.row(static_cast<Eigen::Index>(target_row[c])) = coords.row(static_cast<Eigen::Index>(c));
  }
  return out;
}

std::vector<ShiftMatrix> build_shift_family(const BlockLayout& source, const BlockLayout& target) {
  if (source.blocks.size() != target.blocks.size() || target.degree != source.degree + 1 ||
      source.num_vars != target.num_vars) {
    throw std::invalid_argument("build_shift_family: incompatible layouts");
  }
  const int n = source.num_vars;
  std::vector<ShiftMatrix> family;
  for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
    ShiftMatrix s;
    s.variable = j;
    s.source = source;
    s.target = target;
    s.target_row.resize(source.total_cols);
    const MultiIndex ej = unit_index(static_cast<std::size_t>(n), j);
    for (const auto& b : source.blocks) {
      if (b.width == 0) continue;
      const auto& tb = target.blocks[b.generator];
      for (std::size_t c = 0; c < b.width; ++c) {
        const MultiIndex alpha = monomial_unrank(n, b.shift_degree, c);
        s.target_row[b.offset + c] = tb.offset + monomial_rank(alpha + ej);
      }
    }
    family.push_back(std::move(s));
  }
  return family;
}

std::vector<ShiftMatrix> build_shift_family(const PolynomialSystem& system, int k) {
  const auto degrees = system.degrees();
  const int n = static_cast<int>(system.num_vars());
  return build_shift_family(BlockLayout::make(degrees, n, k), BlockLayout::make(degrees, n, k + 1));
}

Matrix apply_extension(std::span<const ShiftMatrix> shifts, const Matrix& basis) {
  if (shifts.empty()) throw std::invalid_argument("apply_extension: empty shift family");
  const auto rows = static_cast<Eigen::Index>(shifts.front().target.total_cols);
  const Eigen::Index d = basis.cols();
  Matrix out(rows, d * static_cast<Eigen::Index>(shifts.size()));
  for (std::size_t j = 0; j < shifts.size(); ++j) {
    out.middleCols(static_cast<Eigen::Index>(j) * d, d) = shifts[j].apply(basis);
  }
  return out;
}

}  // namespace hbasis

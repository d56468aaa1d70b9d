#ifndef HBASIS_MACAULAY_HPP
#define HBASIS_MACAULAY_HPP

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "hbasis/multi_index.hpp"
#include "hbasis/numla.hpp"
#include "hbasis/polynomial.hpp"

namespace hbasis {

// Column layout of C_k(F): one block per generator, in generator order. A
// generator of degree above k keeps a zero-width block so block indices are
// the same at every degree.
struct BlockLayout {
  struct Block {
    std::size_t generator = 0;
    int shift_degree = 0;  // k - d_i, negative for empty blocks
    std::size_t width = 0;  // dim_homogeneous(n, k - d_i)
    std::size_t offset = 0;
  };

  int degree = 0;
  int num_vars = 0;
  std::vector<Block> blocks;
  std::size_t total_cols = 0;

  static BlockLayout make(std::span<const int> generator_degrees, int num_vars, int k);
  std::size_t column(std::size_t generator, const MultiIndex& shift) const;
};

struct MacaulayMatrix {
  Matrix matrix;  // dim_homogeneous(n, k) x layout.total_cols
  BlockLayout layout;
  int degree() const { return layout.degree; }
};

// Columns x^alpha * lf(f_i) for |alpha| = k - d_i, rows over T_k in rank order.
MacaulayMatrix build_macaulay(const PolynomialSystem& system, int k);

// Throws std::out_of_range for col >= total_cols.
std::pair<std::size_t, MultiIndex> column_label(const BlockLayout& layout, std::size_t col);

// Multiplication by x_j mapping layout(k) coordinates to layout(k+1)
// coordinates; a 0/1 matrix with exactly one nonzero per source column.
struct ShiftMatrix {
  std::size_t variable = 0;
  BlockLayout source;
  BlockLayout target;
  std::vector<std::size_t> target_row;  // indexed by source column

  Matrix dense() const;
  Matrix apply(const Matrix& coords) const;
};

std::vector<ShiftMatrix> build_shift_family(const BlockLayout& source, const BlockLayout& target);
std::vector<ShiftMatrix> build_shift_family(const PolynomialSystem& system, int k);

// [L_1 N | ... | L_n N]. Throws std::invalid_argument on a row mismatch.
Matrix apply_extension(std::span<const ShiftMatrix> shifts, const Matrix& basis);

}  // namespace hbasis

#endif  // HBASIS_MACAULAY_HPP

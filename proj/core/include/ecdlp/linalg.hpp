#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ecdlp/field.hpp"

namespace ecdlp {

/// Dense row-major matrix over a single prime field, stored as canonical residues.
class MatrixFq {
 public:
  MatrixFq(PrimeModulus q, std::size_t rows, std::size_t cols);

  static MatrixFq identity(PrimeModulus q, std::size_t n);
  // Entries are reduced modulo q.
  static MatrixFq from_rows(PrimeModulus q, const std::vector<std::vector<u64>>& rows);

  PrimeModulus modulus() const noexcept { return q_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  u64 operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  FieldElement at(std::size_t r, std::size_t c) const { return {q_, (*this)(r, c)}; }
  void set(std::size_t r, std::size_t c, u64 value) { data_[r * cols_ + c] = value % q_.value(); }
  void set(std::size_t r, std::size_t c, const FieldElement& value);

  std::span<const u64> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<u64> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  void set_row(std::size_t r, std::span<const u64> values);

  MatrixFq transpose() const;
  MatrixFq select_columns(std::span<const std::size_t> columns) const;
  MatrixFq top_rows(std::size_t count) const;
  MatrixFq with_row(std::span<const u64> values) const;

  void swap_rows(std::size_t a, std::size_t b);
  // row[target] -= factor * row[source]
  void subtract_row_multiple(std::size_t target, std::size_t source, u64 factor);
  void scale_row(std::size_t r, u64 factor);

  friend bool operator==(const MatrixFq&, const MatrixFq&) = default;

 private:
  PrimeModulus q_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<u64> data_;
};

// v^T M for a row vector v of length M.rows().
std::vector<u64> left_multiply(std::span<const u64> v, const MatrixFq& m);
// M c for a column vector c of length M.cols().
std::vector<u64> right_multiply(const MatrixFq& m, std::span<const u64> c);

struct RrefResult {
  MatrixFq reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

// Reduced row echelon form with unit pivots.
RrefResult rref(const MatrixFq& m);
std::size_t rank(const MatrixFq& m);

/// Basis of a subspace of F_q^ambient, kept as the nonzero rows of its RREF
/// so that two bases of the same space compare equal.
class KernelBasis {
 public:
  // Canonicalizes; dependent or zero input rows are dropped.
  explicit KernelBasis(const MatrixFq& vectors);

  std::size_t dimension() const noexcept { return vectors_.rows(); }
  std::size_t ambient() const noexcept { return vectors_.cols(); }
  const MatrixFq& matrix() const noexcept { return vectors_; }
  std::span<const u64> vector(std::size_t i) const { return vectors_.row(i); }

  bool contains(std::span<const u64> v) const;

  friend bool operator==(const KernelBasis&, const KernelBasis&) = default;

 private:
  MatrixFq vectors_;
};

// {v : v^T M = 0}, dimension rows - rank.
KernelBasis left_kernel(const MatrixFq& m);
// {c : M c = 0}, dimension cols - rank.
KernelBasis right_kernel(const MatrixFq& m);

bool in_row_space(const MatrixFq& basis, std::span<const u64> v);
bool same_row_space(const MatrixFq& a, const MatrixFq& b);

/// Columns [first, first + count).
struct ColumnRange {
  std::size_t first = 0;
  std::size_t count = 0;
};

enum class BlockStage { lower_triangular, diagonal };

struct BlockElimination {
  MatrixFq matrix;
  // True when the block has rank below its width; the elimination went as far as it could.
  bool singular = false;
  // Column exchanges made when a pivot vanished, as (position column, replacement column).
  std::vector<std::pair<std::size_t, std::size_t>> column_swaps;
  // Block columns in the order the triangular/diagonal shape refers to.
  std::vector<std::size_t> column_order;
};

/// Row-reduce a square block of a basis matrix (rows == block.count) to
/// lower-triangular or diagonal shape. Rows are never rescaled, so a block
/// already in the requested shape comes back unchanged. Row operations keep
/// the row space.
BlockElimination eliminate_block(const MatrixFq& basis, ColumnRange block, BlockStage stage);

// One row per line, space-separated residues.
std::string dump_matrix(const MatrixFq& m);
MatrixFq parse_matrix_dump(PrimeModulus q, std::string_view text);

}  // namespace ecdlp

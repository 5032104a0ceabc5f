#include "ecdlp/linalg.hpp"

#include <charconv>
#include <sstream>

#include "ecdlp/error.hpp"

namespace ecdlp {

MatrixFq::MatrixFq(PrimeModulus q, std::size_t rows, std::size_t cols)
    : q_(q), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

MatrixFq MatrixFq::identity(PrimeModulus q, std::size_t n) {
  MatrixFq m(q, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

MatrixFq MatrixFq::from_rows(PrimeModulus q, const std::vector<std::vector<u64>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  MatrixFq m(q, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ValidationError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

void MatrixFq::set(std::size_t r, std::size_t c, const FieldElement& value) {
  if (value.modulus() != q_) throw ModulusMismatch("matrix entry from a different field");
  data_[r * cols_ + c] = value.residue();
}

void MatrixFq::set_row(std::size_t r, std::span<const u64> values) {
  if (values.size() != cols_) throw ValidationError("row length does not match matrix width");
  for (std::size_t c = 0; c < cols_; ++c) set(r, c, values[c]);
}

MatrixFq MatrixFq::transpose() const {
  MatrixFq t(q_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = (*this)(r, c);
  return t;
}

MatrixFq MatrixFq::select_columns(std::span<const std::size_t> columns) const {
  MatrixFq out(q_, rows_, columns.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < columns.size(); ++j) out.data_[r * columns.size() + j] = (*this)(r, columns[j]);
  return out;
}

MatrixFq MatrixFq::top_rows(std::size_t count) const {
  MatrixFq out(q_, count, cols_);
  std::copy(data_.begin(), data_.begin() + static_cast<std::ptrdiff_t>(count * cols_), out.data_.begin());
  return out;
}

MatrixFq MatrixFq::with_row(std::span<const u64> values) const {
  MatrixFq out(q_, rows_ + 1, cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  out.set_row(rows_, values);
  return out;
}

void MatrixFq::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(data_[a * cols_ + c], data_[b * cols_ + c]);
}

void MatrixFq::subtract_row_multiple(std::size_t target, std::size_t source, u64 factor) {
  if (factor == 0) return;
  const u64 q = q_.value();
  u64* t = data_.data() + target * cols_;
  const u64* s = data_.data() + source * cols_;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (s[c] != 0) t[c] = sub_mod(t[c], mul_mod(factor, s[c], q), q);
  }
}

void MatrixFq::scale_row(std::size_t r, u64 factor) {
  const u64 q = q_.value();
  for (std::size_t c = 0; c < cols_; ++c) data_[r * cols_ + c] = mul_mod(data_[r * cols_ + c], factor, q);
}

std::vector<u64> left_multiply(std::span<const u64> v, const MatrixFq& m) {
  if (v.size() != m.rows()) throw ValidationError("vector length does not match matrix rows");
  const u64 q = m.modulus().value();
  std::vector<u64> out(m.cols(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (v[r] == 0) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) out[c] = add_mod(out[c], mul_mod(v[r] % q, m(r, c), q), q);
  }
  return out;
}

std::vector<u64> right_multiply(const MatrixFq& m, std::span<const u64> c) {
  if (c.size() != m.cols()) throw ValidationError("vector length does not match matrix columns");
  const u64 q = m.modulus().value();
  std::vector<u64> out(m.rows(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t j = 0; j < m.cols(); ++j) out[r] = add_mod(out[r], mul_mod(m(r, j), c[j] % q, q), q);
  return out;
}

RrefResult rref(const MatrixFq& m) {
  RrefResult result{m, 0, {}};
  MatrixFq& a = result.reduced;
  const u64 q = a.modulus().value();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    std::size_t r = pivot_row;
    while (r < a.rows() && a(r, col) == 0) ++r;
    if (r == a.rows()) continue;
    a.swap_rows(r, pivot_row);
    a.scale_row(pivot_row, *inv_mod(a(pivot_row, col), q));
    for (std::size_t other = 0; other < a.rows(); ++other) {
      if (other != pivot_row) a.subtract_row_multiple(other, pivot_row, a(other, col));
    }
    result.pivot_columns.push_back(col);
    ++pivot_row;
  }
  result.rank = pivot_row;
  return result;
}

std::size_t rank(const MatrixFq& m) { return rref(m).rank; }

KernelBasis::KernelBasis(const MatrixFq& vectors) : vectors_(vectors.modulus(), 0, vectors.cols()) {
  RrefResult r = rref(vectors);
  vectors_ = r.reduced.top_rows(r.rank);
}

bool KernelBasis::contains(std::span<const u64> v) const { return in_row_space(vectors_, v); }

KernelBasis right_kernel(const MatrixFq& m) {
  RrefResult r = rref(m);
  const u64 q = m.modulus().value();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : r.pivot_columns) is_pivot[c] = true;

  MatrixFq vectors(m.modulus(), m.cols() - r.rank, m.cols());
  std::size_t k = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    vectors.set(k, free, 1);
    for (std::size_t i = 0; i < r.rank; ++i) {
      vectors.set(k, r.pivot_columns[i], sub_mod(0, r.reduced(i, free), q));
    }
    ++k;
  }
  return KernelBasis(vectors);
}

KernelBasis left_kernel(const MatrixFq& m) { return right_kernel(m.transpose()); }

bool in_row_space(const MatrixFq& basis, std::span<const u64> v) {
  return rank(basis.with_row(v)) == rank(basis);
}

bool same_row_space(const MatrixFq& a, const MatrixFq& b) {
  if (a.cols() != b.cols() || a.modulus() != b.modulus()) return false;
  return KernelBasis(a) == KernelBasis(b);
}

namespace {

bool nonzero_in(const MatrixFq& a, std::size_t row_lo, std::size_t row_hi, std::size_t col) {
  for (std::size_t r = row_lo; r <= row_hi; ++r)
    if (a(r, col) != 0) return true;
  return false;
}

void eliminate_column(MatrixFq& a, std::size_t pivot_row, std::size_t col, std::size_t row_lo,
                      std::size_t row_hi) {
  const u64 q = a.modulus().value();
  const u64 pivot_inv = *inv_mod(a(pivot_row, col), q);
  for (std::size_t r = row_lo; r <= row_hi; ++r) {
    if (r == pivot_row || a(r, col) == 0) continue;
    a.subtract_row_multiple(r, pivot_row, mul_mod(a(r, col), pivot_inv, q));
  }
}

}  // namespace

BlockElimination eliminate_block(const MatrixFq& basis, ColumnRange block, BlockStage stage) {
  const std::size_t w = block.count;
  if (w == 0 || basis.rows() != w || block.first + w > basis.cols()) {
    throw ValidationError("block must be square in the basis row count and fit inside the matrix");
  }
  BlockElimination out{basis, false, {}, {}};
  MatrixFq& a = out.matrix;
  auto& order = out.column_order;
  for (std::size_t i = 0; i < w; ++i) order.push_back(block.first + i);

  if (stage == BlockStage::lower_triangular) {
    // Position t (last to first) gets its pivot in row t; rows above are cleared.
    for (std::size_t t = w; t-- > 0;) {
      std::size_t pos = t + 1;
      for (std::size_t cand = t + 1; cand-- > 0;) {
        if (nonzero_in(a, 0, t, order[cand])) {
          pos = cand;
          break;
        }
      }
      if (pos == t + 1) {
        out.singular = true;
        break;
      }
      if (pos != t) {
        out.column_swaps.emplace_back(order[t], order[pos]);
        std::swap(order[t], order[pos]);
      }
      const std::size_t col = order[t];
      std::size_t r = t;
      while (a(r, col) == 0) --r;
      a.swap_rows(r, t);
      if (t > 0) eliminate_column(a, t, col, 0, t - 1);
    }
  } else {
    // Gauss-Jordan on the block without normalizing pivots.
    for (std::size_t t = 0; t < w; ++t) {
      std::size_t pos = w;
      for (std::size_t cand = t; cand < w; ++cand) {
        if (nonzero_in(a, t, w - 1, order[cand])) {
          pos = cand;
          break;
        }
      }
      if (pos == w) {
        out.singular = true;
        break;
      }
      if (pos != t) {
        out.column_swaps.emplace_back(order[t], order[pos]);
        std::swap(order[t], order[pos]);
      }
      const std::size_t col = order[t];
      std::size_t r = t;
      while (a(r, col) == 0) ++r;
      a.swap_rows(r, t);
      eliminate_column(a, t, col, 0, w - 1);
    }
  }
  return out;
}

std::string dump_matrix(const MatrixFq& m) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ' ';
      os << m(r, c);
    }
    os << '\n';
  }
  return os.str();
}

MatrixFq parse_matrix_dump(PrimeModulus q, std::string_view text) {
  std::vector<std::vector<u64>> rows;
  std::istringstream is{std::string(text)};
  std::string line;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::vector<u64> row;
    std::string token;
    while (ls >> token) {
      u64 v = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
      if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ValidationError("bad matrix entry '" + token + "'");
      }
      row.push_back(v);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return MatrixFq::from_rows(q, rows);
}

}  // namespace ecdlp

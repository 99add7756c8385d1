#include "nilclean/gf2.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <utility>

namespace nilclean {

namespace {

void xor_into(std::span<Word> dst, std::span<const Word> src) {
  for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
}

void swap_rows(Gf2Matrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  auto ra = m.row(a);
  auto rb = m.row(b);
  std::swap_ranges(ra.begin(), ra.end(), rb.begin());
}

void require_square(const Gf2Matrix& a, const char* what) {
  if (!a.is_square()) throw DimensionError(std::string(what) + ": matrix is not square");
}

}  // namespace

bool BitVector::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::size_t BitVector::lowest_set() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return size_;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.size_ != size_) throw DimensionError("BitVector xor: size mismatch");
  xor_into(words_, other.words_);
  return *this;
}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
  Gf2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

Gf2Matrix Gf2Matrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  Gf2Matrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionError("from_rows: ragged rows");
    std::size_t j = 0;
    for (int v : row) {
      if (v != 0 && v != 1) throw std::invalid_argument("from_rows: entries must be 0 or 1");
      m.set(i, j++, v == 1);
    }
    ++i;
  }
  return m;
}

Gf2Matrix Gf2Matrix::from_columns(std::span<const BitVector> columns, std::size_t rows) {
  Gf2Matrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) m.set_column(j, columns[j]);
  return m;
}

BitVector Gf2Matrix::row_vector(std::size_t i) const {
  BitVector v(cols_);
  std::copy_n(row(i).begin(), stride_, v.words().begin());
  return v;
}

BitVector Gf2Matrix::column(std::size_t j) const {
  BitVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (get(i, j)) v.set(i, true);
  }
  return v;
}

void Gf2Matrix::set_column(std::size_t j, const BitVector& v) {
  if (v.size() != rows_) throw DimensionError("set_column: size mismatch");
  for (std::size_t i = 0; i < rows_; ++i) set(i, j, v.get(i));
}

bool Gf2Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Word w) { return w == 0; });
}

bool Gf2Matrix::is_identity() const {
  return is_square() && *this == identity(rows_);
}

Gf2Matrix Gf2Matrix::block(std::size_t r0, std::size_t c0, std::size_t rows,
                           std::size_t cols) const {
  if (r0 + rows > rows_ || c0 + cols > cols_) throw DimensionError("block: out of range");
  Gf2Matrix b(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (get(r0 + i, c0 + j)) b.set(i, j, true);
    }
  }
  return b;
}

void Gf2Matrix::set_block(std::size_t r0, std::size_t c0, const Gf2Matrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw DimensionError("set_block: out of range");
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) set(r0 + i, c0 + j, b.get(i, j));
  }
}

Gf2Matrix add(const Gf2Matrix& a, const Gf2Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("add: dimension mismatch");
  Gf2Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i) xor_into(c.row(i), b.row(i));
  return c;
}

Gf2Matrix mul(const Gf2Matrix& a, const Gf2Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("mul: dimension mismatch");
  Gf2Matrix c(a.rows(), b.cols());
  const std::size_t stride = b.stride();
  if (stride == 0) return c;
  const Word* b_data = b.row(0).data();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Word* __restrict out = c.row(i).data();
    const auto lhs = a.row(i);
    for (std::size_t w = 0; w < lhs.size(); ++w) {
      Word bits = lhs[w];
      while (bits != 0) {
        const std::size_t k = w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
        const Word* __restrict src = b_data + k * stride;
        for (std::size_t x = 0; x < stride; ++x) out[x] ^= src[x];
        bits &= bits - 1;
      }
    }
  }
  return c;
}

BitVector mul(const Gf2Matrix& a, const BitVector& v) {
  if (a.cols() != v.size()) throw DimensionError("mul: dimension mismatch");
  BitVector out(a.rows());
  const auto vw = v.words();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto r = a.row(i);
    Word acc = 0;
    for (std::size_t w = 0; w < r.size(); ++w) acc ^= r[w] & vw[w];
    if (std::popcount(acc) & 1) out.set(i, true);
  }
  return out;
}

Gf2Matrix transpose(const Gf2Matrix& a) {
  Gf2Matrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto r = a.row(i);
    for (std::size_t w = 0; w < r.size(); ++w) {
      Word bits = r[w];
      while (bits != 0) {
        t.set(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)), i, true);
        bits &= bits - 1;
      }
    }
  }
  return t;
}

Gf2Matrix matrix_power(const Gf2Matrix& a, std::uint64_t exponent) {
  require_square(a, "matrix_power");
  Gf2Matrix result = Gf2Matrix::identity(a.rows());
  Gf2Matrix base = a;
  while (exponent != 0) {
    if (exponent & 1U) result = mul(result, base);
    exponent >>= 1;
    if (exponent != 0) base = mul(base, base);
  }
  return result;
}

std::vector<std::size_t> reduce_to_rref(Gf2Matrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < a.cols() && next_row < a.rows(); ++col) {
    std::size_t p = next_row;
    while (p < a.rows() && !a.get(p, col)) ++p;
    if (p == a.rows()) continue;
    swap_rows(a, p, next_row);
    const auto pivot_row = a.row(next_row);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i != next_row && a.get(i, col)) xor_into(a.row(i), pivot_row);
    }
    pivots.push_back(col);
    ++next_row;
  }
  return pivots;
}

std::size_t rank(const Gf2Matrix& a) {
  Gf2Matrix m = a;
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t p = r;
    while (p < m.rows() && !m.get(p, col)) ++p;
    if (p == m.rows()) continue;
    swap_rows(m, p, r);
    const auto pivot_row = m.row(r);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m.get(i, col)) xor_into(m.row(i), pivot_row);
    }
    ++r;
  }
  return r;
}

Gf2Matrix inverse(const Gf2Matrix& a) {
  require_square(a, "inverse");
  const std::size_t n = a.rows();
  Gf2Matrix m = a;
  Gf2Matrix inv = Gf2Matrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && !m.get(p, col)) ++p;
    if (p == n) throw SingularMatrixError();
    swap_rows(m, p, col);
    swap_rows(inv, p, col);
    for (std::size_t i = 0; i < n; ++i) {
      if (i != col && m.get(i, col)) {
        xor_into(m.row(i), m.row(col));
        xor_into(inv.row(i), inv.row(col));
      }
    }
  }
  return inv;
}

bool is_idempotent(const Gf2Matrix& a) {
  require_square(a, "is_idempotent");
  return mul(a, a) == a;
}

bool is_nilpotent(const Gf2Matrix& a) {
  require_square(a, "is_nilpotent");
  return matrix_power(a, a.rows()).is_zero();
}

Gf2Matrix block_diagonal(std::span<const Gf2Matrix> blocks) {
  std::size_t rows = 0;
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  Gf2Matrix m(rows, cols);
  std::size_t r = 0;
  std::size_t c = 0;
  for (const auto& b : blocks) {
    m.set_block(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return m;
}

std::vector<BitVector> null_space(const Gf2Matrix& a) {
  Gf2Matrix m = a;
  const auto pivots = reduce_to_rref(m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<BitVector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    BitVector v(a.cols());
    v.set(free, true);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      if (m.get(r, free)) v.set(pivots[r], true);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

BitVector solve(const Gf2Matrix& a, const BitVector& b) {
  if (b.size() != a.rows()) throw DimensionError("solve: dimension mismatch");
  Gf2Matrix aug(a.rows(), a.cols() + 1);
  aug.set_block(0, 0, a);
  for (std::size_t i = 0; i < a.rows(); ++i) aug.set(i, a.cols(), b.get(i));
  const auto pivots = reduce_to_rref(aug);
  BitVector x(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == a.cols()) throw SingularMatrixError();
    x.set(pivots[r], aug.get(r, a.cols()));
  }
  return x;
}

}  // namespace nilclean

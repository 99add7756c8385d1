#pragma once

// Dense bit-packed matrices and vectors over the two-element field.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace nilclean {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularMatrixError : public std::domain_error {
 public:
  SingularMatrixError() : std::domain_error("matrix is singular over F2") {}
};

/// Fixed-length vector over F2; padding bits past size() are kept zero.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_(words_for(size), 0) {}

  static BitVector unit(std::size_t size, std::size_t index) {
    BitVector v(size);
    v.set(index, true);
    return v;
  }

  std::size_t size() const { return size_; }
  bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i, bool value) {
    const Word mask = Word{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= mask;
    } else {
      words_[i / kWordBits] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  std::span<Word> words() { return words_; }
  std::span<const Word> words() const { return words_; }

  bool is_zero() const;
  /// Index of the lowest set bit, or size() when the vector is zero.
  std::size_t lowest_set() const;

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

/// Row-major bit-packed matrix over F2. Each row occupies stride() words.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * stride_, 0) {}

  static Gf2Matrix zero(std::size_t n) { return Gf2Matrix(n, n); }
  static Gf2Matrix identity(std::size_t n);
  /// Builds a matrix from 0/1 literals; every row must have the same length.
  static Gf2Matrix from_rows(std::initializer_list<std::initializer_list<int>> rows);
  /// Matrix whose columns are the given vectors (all of equal size).
  static Gf2Matrix from_columns(std::span<const BitVector> columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t stride() const { return stride_; }
  bool is_square() const { return rows_ == cols_; }

  bool get(std::size_t i, std::size_t j) const {
    return (data_[i * stride_ + j / kWordBits] >> (j % kWordBits)) & 1U;
  }
  void set(std::size_t i, std::size_t j, bool value) {
    Word& w = data_[i * stride_ + j / kWordBits];
    const Word mask = Word{1} << (j % kWordBits);
    w = value ? (w | mask) : (w & ~mask);
  }
  void flip(std::size_t i, std::size_t j) {
    data_[i * stride_ + j / kWordBits] ^= Word{1} << (j % kWordBits);
  }

  std::span<Word> row(std::size_t i) { return {data_.data() + i * stride_, stride_}; }
  std::span<const Word> row(std::size_t i) const { return {data_.data() + i * stride_, stride_}; }

  BitVector row_vector(std::size_t i) const;
  BitVector column(std::size_t j) const;
  void set_column(std::size_t j, const BitVector& v);

  bool is_zero() const;
  bool is_identity() const;

  /// Sub-block [r0, r0+rows) x [c0, c0+cols).
  Gf2Matrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;
  void set_block(std::size_t r0, std::size_t c0, const Gf2Matrix& b);

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> data_;
};

Gf2Matrix add(const Gf2Matrix& a, const Gf2Matrix& b);
/// Subtraction coincides with addition in characteristic 2.
inline Gf2Matrix sub(const Gf2Matrix& a, const Gf2Matrix& b) { return add(a, b); }
Gf2Matrix mul(const Gf2Matrix& a, const Gf2Matrix& b);
Gf2Matrix transpose(const Gf2Matrix& a);
Gf2Matrix matrix_power(const Gf2Matrix& a, std::uint64_t exponent);

inline Gf2Matrix operator+(const Gf2Matrix& a, const Gf2Matrix& b) { return add(a, b); }
inline Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b) { return mul(a, b); }

/// a * v for a column vector v of length a.cols().
BitVector mul(const Gf2Matrix& a, const BitVector& v);

std::size_t rank(const Gf2Matrix& a);
/// Throws SingularMatrixError when rank(a) < n.
Gf2Matrix inverse(const Gf2Matrix& a);

bool is_idempotent(const Gf2Matrix& a);
/// True iff a^n = 0 where n is the side length.
bool is_nilpotent(const Gf2Matrix& a);

/// Every nilpotent n x n matrix over a field satisfies N^n = 0.
inline std::size_t nilpotency_bound(const Gf2Matrix& a) { return a.rows(); }

Gf2Matrix block_diagonal(std::span<const Gf2Matrix> blocks);

/// Reduced row echelon form computed in place; returns the pivot column of
/// each nonzero row, in row order.
std::vector<std::size_t> reduce_to_rref(Gf2Matrix& a);

/// Basis of {x : a x = 0}, one vector per free column of rref(a), ordered by
/// free column index.
std::vector<BitVector> null_space(const Gf2Matrix& a);

/// Some x with a x = b (free variables set to zero). Throws
/// SingularMatrixError when the system is inconsistent.
BitVector solve(const Gf2Matrix& a, const BitVector& b);

}  // namespace nilclean

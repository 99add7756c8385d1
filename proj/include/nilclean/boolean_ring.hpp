#pragma once

// Matrices over the finite Boolean ring F2^m, decomposed componentwise.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "nilclean/certificate.hpp"
#include "nilclean/gf2.hpp"

namespace nilclean {

/// Each scalar is an element of F2^m packed into one word, bit j holding
/// component j. Addition is XOR and multiplication is AND.
class BoolMatrix {
 public:
  static constexpr unsigned kMaxComponents = 64;

  BoolMatrix() = default;
  /// Zero matrix; throws std::invalid_argument unless 1 <= m <= 64.
  BoolMatrix(unsigned m, std::size_t n);

  static BoolMatrix identity(unsigned m, std::size_t n);
  /// Reassembles a matrix from its component projections (all the same size).
  static BoolMatrix assemble(const std::vector<Gf2Matrix>& components);

  unsigned components() const { return m_; }
  std::size_t size() const { return n_; }
  std::uint64_t mask() const { return mask_; }

  std::uint64_t operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, std::uint64_t value) { data_[i * n_ + j] = value & mask_; }

  /// The F2 matrix seen by component j.
  Gf2Matrix project(unsigned j) const;

  bool is_zero() const;
  friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

 private:
  unsigned m_ = 1;
  std::size_t n_ = 0;
  std::uint64_t mask_ = 1;
  std::vector<std::uint64_t> data_;
};

BoolMatrix add(const BoolMatrix& a, const BoolMatrix& b);
inline BoolMatrix sub(const BoolMatrix& a, const BoolMatrix& b) { return add(a, b); }
BoolMatrix mul(const BoolMatrix& a, const BoolMatrix& b);

/// Componentwise the ring is a product of fields, so N^n = 0.
inline std::size_t nilpotency_bound(const BoolMatrix& a) { return a.size(); }

using BoolCert = NilCleanCert<BoolMatrix>;

BoolCert nil_clean_decompose_boolean(const BoolMatrix& a);

}  // namespace nilclean

#pragma once

// Brute-force ground truth over tiny matrix rings. Nothing here calls the
// decomposition engine; enumeration order is the integer order of the packed
// bit representation (bit i*n + j holds entry (i, j)).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "nilclean/certificate.hpp"
#include "nilclean/gf2.hpp"

namespace nilclean::oracle {

class SizeTooLargeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kMaxEnumerationSize = 4;
inline constexpr std::size_t kMaxStrongSize = 3;

/// Matrix number `code` of size n in enumeration order.
Gf2Matrix decode(std::uint64_t code, std::size_t n);
std::uint64_t encode(const Gf2Matrix& a);

std::vector<Gf2Matrix> enumerate_idempotents(std::size_t n);
/// All N with N^n = 0.
std::vector<Gf2Matrix> enumerate_nilpotents(std::size_t n);

/// First idempotent E (enumeration order) with a + E nilpotent.
std::optional<NilCleanCert<Gf2Matrix>> brute_nil_clean(const Gf2Matrix& a);

struct StrongCensus {
  std::size_t n = 0;
  /// verdicts[code] for every matrix of size n.
  std::vector<bool> verdicts;
  std::size_t count = 0;
};

/// For each n x n matrix, whether some commuting idempotent/nilpotent pair
/// sums to it.
StrongCensus brute_strongly_nil_clean(std::size_t n);

/// The four-element field {0, 1, w, w+1} with w^2 = w + 1, encoded 0..3
/// (bit 0 is the constant term, bit 1 the w coefficient).
namespace f4 {
using Scalar = std::uint8_t;
inline constexpr Scalar kZero = 0;
inline constexpr Scalar kOne = 1;
inline constexpr Scalar kOmega = 2;
inline constexpr Scalar kOmegaPlusOne = 3;

inline Scalar add(Scalar a, Scalar b) { return a ^ b; }
Scalar mul(Scalar a, Scalar b);
/// Multiplicative inverse; throws std::domain_error for zero.
Scalar inv(Scalar a);
const char* name(Scalar a);

/// Row-major n x n matrix over F4.
struct Matrix {
  std::size_t n = 0;
  std::vector<Scalar> entries;

  Scalar operator()(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
  friend bool operator==(const Matrix&, const Matrix&) = default;
};

Matrix scalar_matrix(Scalar a, std::size_t n);
Matrix mul(const Matrix& a, const Matrix& b);
Matrix add(const Matrix& a, const Matrix& b);
bool is_zero(const Matrix& a);
}  // namespace f4

/// Every n x n matrix over F4 that is not idempotent + nilpotent, n in {1, 2}.
std::vector<f4::Matrix> f4_negative_check(std::size_t n);

}  // namespace nilclean::oracle

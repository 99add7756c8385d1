#pragma once

// Nil-clean certificates, generic over the matrix rings in this library.

#include <concepts>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nilclean {

/// Square matrices over a finite ring: closed under add/sub/mul, comparable,
/// with a zero test. nilpotency_bound(a) must bound the nilpotency index of
/// every nilpotent matrix of a's shape.
template <class M>
concept RingMatrix = requires(const M& a, const M& b) {
  { add(a, b) } -> std::same_as<M>;
  { sub(a, b) } -> std::same_as<M>;
  { mul(a, b) } -> std::same_as<M>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { nilpotency_bound(a) } -> std::convertible_to<std::size_t>;
};

/// Raised when a constructed decomposition fails its own re-verification.
/// Never expected on valid input.
class VerificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

template <class M>
struct NilCleanCert {
  M e_part;
  M n_part;
  /// Least k with n_part^k = 0; 1 means n_part = 0.
  std::size_t nilpotency_index = 1;
};

template <class M>
struct StrongCert {
  NilCleanCert<M> cert;
  /// E * N, which equals N * E.
  M commuting_product;
};

/// Exact nilpotency index of n, or nullopt when n^bound != 0. Squares
/// repeatedly, then binary-searches between the bracketing powers using the
/// stored squares.
template <RingMatrix M>
std::optional<std::size_t> nilpotency_index(const M& n, std::size_t bound) {
  if (n.is_zero()) return 1;
  std::vector<M> squares{n};  // squares[j] = n^(2^j), all nonzero
  std::size_t e = 1;
  while (e < bound) {
    M next = mul(squares.back(), squares.back());
    if (next.is_zero()) {
      // n^e != 0 = n^(2e): grow the largest nonzero power greedily.
      M cur = squares.back();
      std::size_t last_nonzero = e;
      for (std::size_t j = squares.size() - 1; j-- > 0;) {
        M candidate = mul(cur, squares[j]);
        if (!candidate.is_zero()) {
          cur = std::move(candidate);
          last_nonzero += std::size_t{1} << j;
        }
      }
      return last_nonzero + 1;
    }
    squares.push_back(std::move(next));
    e *= 2;
  }
  return std::nullopt;
}

template <RingMatrix M>
std::optional<std::size_t> nilpotency_index(const M& n) {
  return nilpotency_index(n, nilpotency_bound(n));
}

template <RingMatrix M>
bool is_nilpotent_in_ring(const M& n) {
  return nilpotency_index(n).has_value();
}

/// True iff E^2 = E, E + N = a, and N has exactly the recorded index.
template <RingMatrix M>
bool verify_cert(const M& a, const NilCleanCert<M>& cert) {
  try {
    if (!(mul(cert.e_part, cert.e_part) == cert.e_part)) return false;
    if (!(add(cert.e_part, cert.n_part) == a)) return false;
    const auto index = nilpotency_index(cert.n_part);
    return index.has_value() && *index == cert.nilpotency_index;
  } catch (const std::invalid_argument&) {
    // Shape or modulus mismatch between a and the certificate.
    return false;
  }
}

template <RingMatrix M>
bool verify_strong_cert(const M& a, const StrongCert<M>& strong) {
  const auto& c = strong.cert;
  try {
    const M en = mul(c.e_part, c.n_part);
    return verify_cert(a, c) && en == mul(c.n_part, c.e_part) && en == strong.commuting_product;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

/// Fills in the index and re-verifies; throws VerificationError on failure.
template <RingMatrix M>
NilCleanCert<M> certify(const M& a, M e_part, M n_part, const char* who) {
  NilCleanCert<M> cert{std::move(e_part), std::move(n_part), 1};
  if (!(mul(cert.e_part, cert.e_part) == cert.e_part)) {
    throw VerificationError(std::string(who) + ": idempotent part is not idempotent");
  }
  if (!(add(cert.e_part, cert.n_part) == a)) throw VerificationError(std::string(who) + ": parts do not sum to the input");
  const auto index = nilpotency_index(cert.n_part);
  if (!index) throw VerificationError(std::string(who) + ": nilpotent part is not nilpotent");
  cert.nilpotency_index = *index;
  return cert;
}

}  // namespace nilclean

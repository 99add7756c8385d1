#include "nilclean/mod2k.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "nilclean/engine.hpp"

namespace nilclean {

namespace {

void require_compatible(const Mod2kMatrix& a, const Mod2kMatrix& b, const char* what) {
  if (a.exponent() != b.exponent() || a.size() != b.size()) {
    throw DimensionError(std::string(what) + ": size or modulus mismatch");
  }
}

}  // namespace

Mod2kMatrix::Mod2kMatrix(unsigned k, std::size_t n)
    : k_(k), n_(n), mask_((std::uint64_t{1} << k) - 1), data_(n * n, 0) {
  if (k < 1 || k > kMaxExponent) {
    throw std::invalid_argument("Mod2kMatrix: exponent must be in [1, 60], got " + std::to_string(k));
  }
}

Mod2kMatrix Mod2kMatrix::identity(unsigned k, std::size_t n) {
  Mod2kMatrix m(k, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Mod2kMatrix Mod2kMatrix::from_rows(unsigned k,
                                   std::initializer_list<std::initializer_list<std::uint64_t>> rows) {
  Mod2kMatrix m(k, rows.size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw DimensionError("Mod2kMatrix::from_rows: matrix must be square");
    std::size_t j = 0;
    for (auto v : row) {
      if (v > m.mask()) throw std::invalid_argument("Mod2kMatrix::from_rows: entry not reduced mod 2^k");
      m.set(i, j++, v);
    }
    ++i;
  }
  return m;
}

bool Mod2kMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::uint64_t v) { return v == 0; });
}

Mod2kMatrix add(const Mod2kMatrix& a, const Mod2kMatrix& b) {
  require_compatible(a, b, "add");
  Mod2kMatrix c(a.exponent(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) c.set(i, j, a(i, j) + b(i, j));
  }
  return c;
}

Mod2kMatrix sub(const Mod2kMatrix& a, const Mod2kMatrix& b) {
  require_compatible(a, b, "sub");
  Mod2kMatrix c(a.exponent(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) c.set(i, j, a(i, j) - b(i, j));
  }
  return c;
}

Mod2kMatrix mul(const Mod2kMatrix& a, const Mod2kMatrix& b) {
  require_compatible(a, b, "mul");
  const std::size_t n = a.size();
  Mod2kMatrix c(a.exponent(), n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t l = 0; l < n; ++l) acc += a(i, l) * b(l, j);
      c.set(i, j, acc);
    }
  }
  return c;
}

Mod2kMatrix scale(std::uint64_t c, const Mod2kMatrix& a) {
  Mod2kMatrix out(a.exponent(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) out.set(i, j, c * a(i, j));
  }
  return out;
}

Gf2Matrix reduce_mod2(const Mod2kMatrix& a) {
  Gf2Matrix r(a.size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) r.set(i, j, a(i, j) & 1U);
  }
  return r;
}

Mod2kMatrix lift_binary(const Gf2Matrix& a, unsigned k) {
  if (!a.is_square()) throw DimensionError("lift_binary: matrix is not square");
  Mod2kMatrix m(k, a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m.set(i, j, a.get(i, j) ? 1 : 0);
  }
  return m;
}

unsigned lifting_steps(unsigned k) {
  unsigned steps = 0;
  while ((1U << steps) < k) ++steps;
  return steps;
}

Mod2kMatrix lift_idempotent(const Mod2kMatrix& e0) {
  if (!is_idempotent(reduce_mod2(e0))) {
    throw std::invalid_argument("lift_idempotent: input is not idempotent modulo 2");
  }
  Mod2kMatrix e = e0;
  for (unsigned step = 0; step < lifting_steps(e0.exponent()); ++step) {
    const Mod2kMatrix e2 = mul(e, e);
    const Mod2kMatrix e3 = mul(e2, e);
    e = sub(scale(3, e2), scale(2, e3));
  }
  if (!(mul(e, e) == e)) throw VerificationError("lift_idempotent: result is not idempotent");
  return e;
}

Mod2kCert nil_clean_decompose_mod2k(const Mod2kMatrix& a) {
  const Gf2Cert base = nil_clean_decompose(reduce_mod2(a));
  Mod2kMatrix e = lift_idempotent(lift_binary(base.e_part, a.exponent()));
  Mod2kMatrix n = sub(a, e);
  Mod2kCert cert = certify(a, std::move(e), std::move(n), "nil_clean_decompose_mod2k");
  if (reduce_mod2(cert.e_part) != base.e_part) {
    throw VerificationError("nil_clean_decompose_mod2k: lifted idempotent changed modulo 2");
  }
  return cert;
}

}  // namespace nilclean

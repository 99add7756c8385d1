#include "nilclean/oracle.hpp"

#include <array>
#include <string>

namespace nilclean::oracle {

namespace {

// Naive per-entry arithmetic on packed codes; deliberately shares nothing
// with the word-parallel kernels.
using Code = std::uint64_t;

bool bit(Code m, std::size_t n, std::size_t i, std::size_t j) { return (m >> (i * n + j)) & 1U; }

Code naive_mul(Code a, Code b, std::size_t n) {
  Code c = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      unsigned acc = 0;
      for (std::size_t l = 0; l < n; ++l) acc ^= bit(a, n, i, l) & bit(b, n, l, j);
      if (acc) c |= Code{1} << (i * n + j);
    }
  }
  return c;
}

bool naive_nilpotent(Code a, std::size_t n) {
  Code p = a;
  for (std::size_t e = 1; e < n; ++e) p = naive_mul(p, a, n);
  return p == 0;
}

std::size_t naive_index(Code a, std::size_t n) {
  Code p = a;
  std::size_t e = 1;
  while (p != 0) {
    p = naive_mul(p, a, n);
    ++e;
  }
  return e;
}

void require_size(std::size_t n, std::size_t max, const char* what) {
  if (n == 0 || n > max) {
    throw SizeTooLargeError(std::string(what) + ": size must be in [1, " + std::to_string(max) + "], got " +
                            std::to_string(n));
  }
}

Code space_size(std::size_t n) { return Code{1} << (n * n); }

std::vector<Code> idempotent_codes(std::size_t n) {
  std::vector<Code> out;
  for (Code m = 0; m < space_size(n); ++m) {
    if (naive_mul(m, m, n) == m) out.push_back(m);
  }
  return out;
}

std::vector<bool> nilpotent_table(std::size_t n) {
  std::vector<bool> table(space_size(n));
  for (Code m = 0; m < space_size(n); ++m) table[m] = naive_nilpotent(m, n);
  return table;
}

}  // namespace

Gf2Matrix decode(std::uint64_t code, std::size_t n) {
  Gf2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, bit(code, n, i, j));
  }
  return m;
}

std::uint64_t encode(const Gf2Matrix& a) {
  if (!a.is_square() || a.rows() > 8) throw SizeTooLargeError("encode: matrix must be square with n <= 8");
  const std::size_t n = a.rows();
  Code c = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (a.get(i, j)) c |= Code{1} << (i * n + j);
    }
  }
  return c;
}

std::vector<Gf2Matrix> enumerate_idempotents(std::size_t n) {
  require_size(n, kMaxEnumerationSize, "enumerate_idempotents");
  std::vector<Gf2Matrix> out;
  for (Code c : idempotent_codes(n)) out.push_back(decode(c, n));
  return out;
}

std::vector<Gf2Matrix> enumerate_nilpotents(std::size_t n) {
  require_size(n, kMaxEnumerationSize, "enumerate_nilpotents");
  std::vector<Gf2Matrix> out;
  for (Code m = 0; m < space_size(n); ++m) {
    if (naive_nilpotent(m, n)) out.push_back(decode(m, n));
  }
  return out;
}

std::optional<NilCleanCert<Gf2Matrix>> brute_nil_clean(const Gf2Matrix& a) {
  if (!a.is_square()) throw DimensionError("brute_nil_clean: matrix is not square");
  const std::size_t n = a.rows();
  require_size(n, kMaxEnumerationSize, "brute_nil_clean");
  const Code target = encode(a);
  for (Code e = 0; e < space_size(n); ++e) {
    if (naive_mul(e, e, n) != e) continue;
    const Code nil = target ^ e;
    if (naive_nilpotent(nil, n)) {
      return NilCleanCert<Gf2Matrix>{decode(e, n), decode(nil, n), naive_index(nil, n)};
    }
  }
  return std::nullopt;
}

StrongCensus brute_strongly_nil_clean(std::size_t n) {
  require_size(n, kMaxStrongSize, "brute_strongly_nil_clean");
  const auto idempotents = idempotent_codes(n);
  const auto nilpotent = nilpotent_table(n);
  StrongCensus census;
  census.n = n;
  census.verdicts.assign(space_size(n), false);
  for (Code a = 0; a < space_size(n); ++a) {
    for (Code e : idempotents) {
      const Code nil = a ^ e;
      if (nilpotent[nil] && naive_mul(e, nil, n) == naive_mul(nil, e, n)) {
        census.verdicts[a] = true;
        ++census.count;
        break;
      }
    }
  }
  return census;
}

namespace f4 {

Scalar mul(Scalar a, Scalar b) {
  // (a0 + a1 w)(b0 + b1 w) with w^2 = w + 1.
  const unsigned a0 = a & 1U, a1 = (a >> 1) & 1U, b0 = b & 1U, b1 = (b >> 1) & 1U;
  const unsigned hi = a1 & b1;
  const unsigned c0 = (a0 & b0) ^ hi;
  const unsigned c1 = (a0 & b1) ^ (a1 & b0) ^ hi;
  return static_cast<Scalar>(c0 | (c1 << 1));
}

Scalar inv(Scalar a) {
  for (Scalar b = 1; b < 4; ++b) {
    if (mul(a, b) == kOne) return b;
  }
  throw std::domain_error("F4: zero has no inverse");
}

const char* name(Scalar a) {
  static constexpr std::array<const char*, 4> names{"0", "1", "w", "w+1"};
  return names.at(a);
}

Matrix scalar_matrix(Scalar a, std::size_t n) {
  Matrix m{n, std::vector<Scalar>(n * n, kZero)};
  for (std::size_t i = 0; i < n; ++i) m.entries[i * n + i] = a;
  return m;
}

Matrix mul(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.n;
  Matrix c{n, std::vector<Scalar>(n * n, kZero)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Scalar acc = kZero;
      for (std::size_t l = 0; l < n; ++l) acc = add(acc, mul(a(i, l), b(l, j)));
      c.entries[i * n + j] = acc;
    }
  }
  return c;
}

Matrix add(const Matrix& a, const Matrix& b) {
  Matrix c = a;
  for (std::size_t i = 0; i < c.entries.size(); ++i) c.entries[i] = add(a.entries[i], b.entries[i]);
  return c;
}

bool is_zero(const Matrix& a) {
  for (auto v : a.entries) {
    if (v != kZero) return false;
  }
  return true;
}

}  // namespace f4

std::vector<f4::Matrix> f4_negative_check(std::size_t n) {
  require_size(n, 2, "f4_negative_check");
  const std::size_t cells = n * n;
  std::size_t total = 1;
  for (std::size_t c = 0; c < cells; ++c) total *= 4;

  std::vector<f4::Matrix> all;
  for (std::size_t code = 0; code < total; ++code) {
    f4::Matrix m{n, std::vector<f4::Scalar>(cells)};
    std::size_t rest = code;
    for (std::size_t c = 0; c < cells; ++c) {
      m.entries[c] = static_cast<f4::Scalar>(rest % 4);
      rest /= 4;
    }
    all.push_back(std::move(m));
  }

  std::vector<f4::Matrix> idempotents;
  std::vector<bool> nilpotent(total);
  for (std::size_t code = 0; code < total; ++code) {
    const auto& m = all[code];
    if (f4::mul(m, m) == m) idempotents.push_back(m);
    f4::Matrix p = m;
    for (std::size_t e = 1; e < n; ++e) p = f4::mul(p, m);
    nilpotent[code] = f4::is_zero(p);
  }

  auto code_of = [cells](const f4::Matrix& m) {
    std::size_t code = 0;
    for (std::size_t c = cells; c > 0; --c) code = code * 4 + m.entries[c - 1];
    return code;
  };

  std::vector<f4::Matrix> failures;
  for (const auto& a : all) {
    bool found = false;
    for (const auto& e : idempotents) {
      // Characteristic 2: a - e = a + e.
      if (nilpotent[code_of(f4::add(a, e))]) {
        found = true;
        break;
      }
    }
    if (!found) failures.push_back(a);
  }
  return failures;
}

}  // namespace nilclean::oracle

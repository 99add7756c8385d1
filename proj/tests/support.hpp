#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "nilclean/gf2.hpp"
#include "nilclean/gf2_poly.hpp"
#include "nilclean/mod2k.hpp"

namespace testing_support {

using nilclean::Gf2Matrix;
using nilclean::Gf2Poly;

inline Gf2Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  Gf2Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rng() & 1U);
  }
  return m;
}

inline Gf2Matrix random_matrix(std::mt19937_64& rng, std::size_t n) { return random_matrix(rng, n, n); }

// Product of random elementary matrices; always invertible.
inline Gf2Matrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  Gf2Matrix q = Gf2Matrix::identity(n);
  if (n < 2) return q;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t step = 0; step < 4 * n; ++step) {
    const std::size_t src = pick(rng);
    std::size_t dst = pick(rng);
    if (dst == src) dst = (dst + 1) % n;
    for (std::size_t j = 0; j < n; ++j) {
      if (q.get(src, j)) q.flip(dst, j);
    }
  }
  for (std::size_t step = 0; step < n; ++step) {
    const std::size_t a = pick(rng);
    const std::size_t b = pick(rng);
    for (std::size_t j = 0; j < n; ++j) {
      const bool t = q.get(a, j);
      q.set(a, j, q.get(b, j));
      q.set(b, j, t);
    }
  }
  return q;
}

inline nilclean::Mod2kMatrix random_mod2k(std::mt19937_64& rng, unsigned k, std::size_t n) {
  nilclean::Mod2kMatrix m(k, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, rng());
  }
  return m;
}

inline Gf2Matrix reference_mul(const Gf2Matrix& a, const Gf2Matrix& b) {
  Gf2Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      int acc = 0;
      for (std::size_t l = 0; l < a.cols(); ++l) acc += a.get(i, l) && b.get(l, j);
      c.set(i, j, acc % 2);
    }
  }
  return c;
}

inline std::size_t reference_rank(const Gf2Matrix& a) {
  std::vector<std::vector<int>> m(a.rows(), std::vector<int>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a.get(i, j);
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && m[p][c] == 0) ++p;
    if (p == a.rows()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i != r && m[i][c]) {
        for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] ^= m[r][j];
      }
    }
    ++r;
  }
  return r;
}

// det(tI - A) by Leibniz expansion with polynomial entries; n <= 4.
inline Gf2Poly reference_char_poly(const Gf2Matrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  Gf2Poly det;
  do {
    Gf2Poly term = Gf2Poly::one();
    for (std::size_t i = 0; i < n; ++i) {
      Gf2Poly entry;
      if (a.get(i, perm[i])) entry = Gf2Poly::one();
      if (perm[i] == i) entry += Gf2Poly::monomial(1);
      term = term * entry;
    }
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

inline std::vector<Gf2Poly> monic_polynomials(std::size_t degree) {
  std::vector<Gf2Poly> out;
  for (std::uint64_t low = 0; low < (std::uint64_t{1} << degree); ++low) {
    Gf2Poly p = Gf2Poly::monomial(degree);
    for (std::size_t i = 0; i < degree; ++i) p.set_coeff(i, (low >> i) & 1U);
    out.push_back(p);
  }
  return out;
}

}  // namespace testing_support

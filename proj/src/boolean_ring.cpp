#include "nilclean/boolean_ring.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "nilclean/engine.hpp"

namespace nilclean {

namespace {

void require_compatible(const BoolMatrix& a, const BoolMatrix& b, const char* what) {
  if (a.components() != b.components() || a.size() != b.size()) {
    throw DimensionError(std::string(what) + ": size or component count mismatch");
  }
}

}  // namespace

BoolMatrix::BoolMatrix(unsigned m, std::size_t n)
    : m_(m), n_(n), mask_(m >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1), data_(n * n, 0) {
  if (m < 1 || m > kMaxComponents) {
    throw std::invalid_argument("BoolMatrix: component count must be in [1, 64], got " + std::to_string(m));
  }
}

BoolMatrix BoolMatrix::identity(unsigned m, std::size_t n) {
  BoolMatrix b(m, n);
  for (std::size_t i = 0; i < n; ++i) b.set(i, i, b.mask());
  return b;
}

BoolMatrix BoolMatrix::assemble(const std::vector<Gf2Matrix>& components) {
  if (components.empty()) throw std::invalid_argument("BoolMatrix::assemble: no components");
  const std::size_t n = components.front().rows();
  BoolMatrix b(static_cast<unsigned>(components.size()), n);
  for (unsigned c = 0; c < components.size(); ++c) {
    const auto& g = components[c];
    if (g.rows() != n || g.cols() != n) throw DimensionError("BoolMatrix::assemble: component size mismatch");
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (g.get(i, j)) b.data_[i * n + j] |= std::uint64_t{1} << c;
      }
    }
  }
  return b;
}

Gf2Matrix BoolMatrix::project(unsigned j) const {
  if (j >= m_) throw std::out_of_range("BoolMatrix::project: component out of range");
  Gf2Matrix g(n_, n_);
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) g.set(r, c, ((*this)(r, c) >> j) & 1U);
  }
  return g;
}

bool BoolMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::uint64_t v) { return v == 0; });
}

BoolMatrix add(const BoolMatrix& a, const BoolMatrix& b) {
  require_compatible(a, b, "add");
  BoolMatrix c(a.components(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) c.set(i, j, a(i, j) ^ b(i, j));
  }
  return c;
}

BoolMatrix mul(const BoolMatrix& a, const BoolMatrix& b) {
  require_compatible(a, b, "mul");
  const std::size_t n = a.size();
  BoolMatrix c(a.components(), n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t l = 0; l < n; ++l) acc ^= a(i, l) & b(l, j);
      c.set(i, j, acc);
    }
  }
  return c;
}

BoolCert nil_clean_decompose_boolean(const BoolMatrix& a) {
  std::vector<Gf2Matrix> e_parts;
  std::vector<Gf2Matrix> n_parts;
  for (unsigned j = 0; j < a.components(); ++j) {
    Gf2Cert c = nil_clean_decompose(a.project(j));
    e_parts.push_back(std::move(c.e_part));
    n_parts.push_back(std::move(c.n_part));
  }
  return certify(a, BoolMatrix::assemble(e_parts), BoolMatrix::assemble(n_parts),
                 "nil_clean_decompose_boolean");
}

}  // namespace nilclean

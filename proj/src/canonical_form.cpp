#include "nilclean/canonical_form.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

namespace nilclean {

namespace {

// Echelon basis of a Krylov space. Each stored vector has a distinct pivot
// (its lowest set bit) that is clear in every vector stored after it, so a
// single ordered pass reduces any input. Tags record each stored vector as a
// polynomial in A applied to the seed.
class KrylovEchelon {
 public:
  void reduce(BitVector& x, Gf2Poly& tag) const {
    for (std::size_t i = 0; i < vecs_.size(); ++i) {
      if (x.get(pivots_[i])) {
        x ^= vecs_[i];
        tag += tags_[i];
      }
    }
  }

  void insert(BitVector x, Gf2Poly tag) {
    pivots_.push_back(x.lowest_set());
    vecs_.push_back(std::move(x));
    tags_.push_back(std::move(tag));
  }

 private:
  std::vector<BitVector> vecs_;
  std::vector<std::size_t> pivots_;
  std::vector<Gf2Poly> tags_;
};

struct Krylov {
  Gf2Poly minpoly;
  std::vector<BitVector> basis;  // v, Av, ..., A^{d-1} v
  KrylovEchelon echelon;
};

Krylov krylov(const Gf2Matrix& a, const BitVector& v) {
  Krylov k;
  BitVector current = v;
  for (std::size_t i = 0;; ++i) {
    BitVector x = current;
    Gf2Poly tag = Gf2Poly::monomial(i);
    k.echelon.reduce(x, tag);
    if (x.is_zero()) {
      k.minpoly = std::move(tag);
      return k;
    }
    k.echelon.insert(std::move(x), std::move(tag));
    k.basis.push_back(current);
    current = mul(a, current);
  }
}

// Lowest j >= from with m(A) e_j != 0, i.e. the first nonzero column of m(A);
// r if none.
std::size_t first_uncovered(const Gf2Matrix& a, const Gf2Poly& m, std::size_t from) {
  const std::size_t r = a.rows();
  const Gf2Matrix image = evaluate(m, a);
  std::vector<Word> nonzero(image.stride(), 0);
  for (std::size_t i = 0; i < r; ++i) {
    const auto row = image.row(i);
    for (std::size_t w = 0; w < row.size(); ++w) nonzero[w] |= row[w];
  }
  for (std::size_t j = from; j < r; ++j) {
    if ((nonzero[j / kWordBits] >> (j % kWordBits)) & 1U) return j;
  }
  return r;
}

// A vector whose local minimal polynomial is the minimal polynomial of a.
// Starts from e_0 and folds in, in index order, each standard basis vector
// whose minimal polynomial does not divide the current one, splitting the
// lcm into coprime parts.
Krylov maximal_krylov(const Gf2Matrix& a) {
  const std::size_t r = a.rows();
  BitVector v = BitVector::unit(r, 0);
  Krylov kv = krylov(a, v);
  std::size_t j = 1;
  while (static_cast<std::size_t>(kv.minpoly.degree()) < r) {
    j = first_uncovered(a, kv.minpoly, j);
    if (j >= r) break;
    const BitVector e = BitVector::unit(r, j);
    const Gf2Poly q = local_minimal_polynomial(a, e);
    const Gf2Poly& m = kv.minpoly;

    // lcm(m, q) = p1 * q1 with p1 | m, q1 | q and gcd(p1, q1) = 1; q1 keeps
    // the irreducibles occurring to a higher power in q than in m.
    const Gf2Poly excess = q / gcd(m, q);
    const Gf2Poly q1 = supported_part(q, excess);
    const Gf2Poly p1 = m / supported_part(m, excess);
    v = evaluate(m / p1, a, v) ^ evaluate(q / q1, a, e);
    kv = krylov(a, v);
    if (kv.minpoly != p1 * q1) throw std::logic_error("maximal_krylov: lcm combination failed");
    ++j;
  }
  return kv;
}

Gf2Matrix rows_matrix(const std::vector<BitVector>& rows, std::size_t cols) {
  Gf2Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto src = rows[i].words();
    auto dst = m.row(i);
    for (std::size_t w = 0; w < dst.size(); ++w) dst[w] = src[w];
  }
  return m;
}

}  // namespace

Gf2Matrix companion(const Gf2Poly& p) {
  const long deg = p.degree();
  if (deg < 1) throw std::invalid_argument("companion: polynomial must have degree >= 1");
  const auto n = static_cast<std::size_t>(deg);
  Gf2Matrix c(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) c.set(i + 1, i, true);
  for (std::size_t i = 0; i < n; ++i) c.set(i, n - 1, p.coeff(i));
  return c;
}

Gf2Poly local_minimal_polynomial(const Gf2Matrix& a, const BitVector& v) {
  return krylov(a, v).minpoly;
}

Gf2Matrix frobenius_matrix(const std::vector<Gf2Poly>& factors) {
  std::vector<Gf2Matrix> blocks;
  blocks.reserve(factors.size());
  for (const auto& f : factors) blocks.push_back(companion(f));
  return block_diagonal(blocks);
}

FrobeniusForm frobenius_form(const Gf2Matrix& a) {
  if (!a.is_square()) throw DimensionError("frobenius_form: matrix is not square");
  const std::size_t n = a.rows();

  struct Block {
    Gf2Poly poly;
    Gf2Matrix columns;  // basis of the cyclic block, original coordinates
  };
  std::vector<Block> found;  // non-increasing degree, each divides its predecessor

  // Invariant: the columns of `embed` span an A-invariant subspace on which A
  // acts by `sub`.
  Gf2Matrix sub = a;
  Gf2Matrix embed = Gf2Matrix::identity(n);
  while (sub.rows() > 0) {
    const std::size_t r = sub.rows();
    Krylov kv = maximal_krylov(sub);
    const std::size_t d = kv.basis.size();
    const Gf2Matrix krylov_cols = Gf2Matrix::from_columns(kv.basis, r);
    found.push_back({kv.minpoly, mul(embed, krylov_cols)});
    if (d == r) break;

    // psi vanishes on v..A^{d-2}v and is 1 on A^{d-1}v. The common kernel of
    // psi, psi A, ..., psi A^{d-1} is an A-invariant complement of the block.
    const BitVector psi = solve(rows_matrix(kv.basis, r), BitVector::unit(d, d - 1));
    const Gf2Matrix sub_t = transpose(sub);
    std::vector<BitVector> functionals{psi};
    for (std::size_t i = 1; i < d; ++i) functionals.push_back(mul(sub_t, functionals.back()));
    const auto complement = null_space(rows_matrix(functionals, r));
    if (complement.size() != r - d) throw std::logic_error("frobenius_form: complement has wrong dimension");

    std::vector<BitVector> cols = kv.basis;
    cols.insert(cols.end(), complement.begin(), complement.end());
    const Gf2Matrix change = Gf2Matrix::from_columns(cols, r);
    const Gf2Matrix conjugated = mul(inverse(change), mul(sub, change));

    sub = conjugated.block(d, d, r - d, r - d);
    embed = mul(embed, Gf2Matrix::from_columns(complement, r));
  }

  // Emit in ascending divisibility order; equal factors keep discovery order.
  FrobeniusForm form;
  form.transform = Gf2Matrix(n, n);
  std::size_t col = 0;
  std::size_t end = found.size();
  while (end > 0) {
    std::size_t begin = end - 1;
    while (begin > 0 && found[begin - 1].poly == found[end - 1].poly) --begin;
    for (std::size_t i = begin; i < end; ++i) {
      form.transform.set_block(0, col, found[i].columns);
      col += found[i].columns.cols();
      form.invariant_factors.push_back(found[i].poly);
    }
    end = begin;
  }

  for (std::size_t i = 0; i + 1 < form.invariant_factors.size(); ++i) {
    if (!divides(form.invariant_factors[i], form.invariant_factors[i + 1])) {
      throw std::logic_error("frobenius_form: divisibility chain broken");
    }
  }
  const Gf2Matrix expected = frobenius_matrix(form.invariant_factors);
  if (mul(a, form.transform) != mul(form.transform, expected)) {
    throw std::logic_error("frobenius_form: similarity check failed");
  }
  return form;
}

std::vector<Gf2Poly> invariant_factors(const Gf2Matrix& a) {
  return frobenius_form(a).invariant_factors;
}

Gf2Poly char_poly(const Gf2Matrix& a) {
  Gf2Poly product = Gf2Poly::one();
  for (const auto& f : invariant_factors(a)) product = product * f;
  return product;
}

}  // namespace nilclean

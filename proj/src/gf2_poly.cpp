#include "nilclean/gf2_poly.hpp"

#include <bit>
#include <stdexcept>

namespace nilclean {

Gf2Poly Gf2Poly::monomial(std::size_t degree) {
  Gf2Poly p;
  p.set_coeff(degree, true);
  return p;
}

Gf2Poly Gf2Poly::from_exponents(std::initializer_list<std::size_t> exponents) {
  Gf2Poly p;
  for (auto e : exponents) p.set_coeff(e, !p.coeff(e));
  return p;
}

Gf2Poly Gf2Poly::from_coefficients(const std::vector<int>& coeffs) {
  Gf2Poly p;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] & 1) p.set_coeff(i, true);
  }
  return p;
}

long Gf2Poly::degree() const {
  if (words_.empty()) return -1;
  const Word top = words_.back();
  return static_cast<long>((words_.size() - 1) * kWordBits) +
         static_cast<long>(kWordBits - 1 - std::countl_zero(top));
}

bool Gf2Poly::coeff(std::size_t i) const {
  const std::size_t w = i / kWordBits;
  return w < words_.size() && ((words_[w] >> (i % kWordBits)) & 1U);
}

void Gf2Poly::set_coeff(std::size_t i, bool value) {
  const std::size_t w = i / kWordBits;
  if (w >= words_.size()) {
    if (!value) return;
    words_.resize(w + 1, 0);
  }
  const Word mask = Word{1} << (i % kWordBits);
  words_[w] = value ? (words_[w] | mask) : (words_[w] & ~mask);
  trim();
}

void Gf2Poly::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

Gf2Poly& Gf2Poly::operator+=(const Gf2Poly& other) {
  if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
  for (std::size_t w = 0; w < other.words_.size(); ++w) words_[w] ^= other.words_[w];
  trim();
  return *this;
}

Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Gf2Poly out;
  out.words_.assign(a.words_.size() + b.words_.size(), 0);
  for (std::size_t wa = 0; wa < a.words_.size(); ++wa) {
    Word bits = a.words_[wa];
    while (bits != 0) {
      const unsigned shift = static_cast<unsigned>(std::countr_zero(bits));
      bits &= bits - 1;
      // Add b * t^(wa*64 + shift).
      for (std::size_t wb = 0; wb < b.words_.size(); ++wb) {
        const Word x = b.words_[wb];
        out.words_[wa + wb] ^= x << shift;
        if (shift != 0) out.words_[wa + wb + 1] ^= x >> (kWordBits - shift);
      }
    }
  }
  out.trim();
  return out;
}

std::string Gf2Poly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (long i = degree(); i >= 0; --i) {
    if (!coeff(static_cast<std::size_t>(i))) continue;
    if (!s.empty()) s += " + ";
    if (i == 0) {
      s += "1";
    } else if (i == 1) {
      s += "t";
    } else {
      s += "t^" + std::to_string(i);
    }
  }
  return s;
}

std::pair<Gf2Poly, Gf2Poly> divmod(const Gf2Poly& a, const Gf2Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  Gf2Poly quotient;
  Gf2Poly rem = a;
  const long db = b.degree();
  while (rem.degree() >= db) {
    const auto shift = static_cast<std::size_t>(rem.degree() - db);
    quotient.set_coeff(shift, true);
    rem += b * Gf2Poly::monomial(shift);
  }
  return {quotient, rem};
}

Gf2Poly gcd(Gf2Poly a, Gf2Poly b) {
  while (!b.is_zero()) {
    Gf2Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Gf2Poly supported_part(Gf2Poly a, const Gf2Poly& s) {
  Gf2Poly result = Gf2Poly::one();
  Gf2Poly c = gcd(a, s);
  while (c.degree() > 0) {
    result = result * c;
    a = a / c;
    c = gcd(a, c);
  }
  return result;
}

BitVector evaluate(const Gf2Poly& p, const Gf2Matrix& a, const BitVector& v) {
  BitVector acc(v.size());
  for (long i = p.degree(); i >= 0; --i) {
    acc = mul(a, acc);
    if (p.coeff(static_cast<std::size_t>(i))) acc ^= v;
  }
  return acc;
}

// Paterson-Stockmeyer: about 2 sqrt(deg p) matrix products.
Gf2Matrix evaluate(const Gf2Poly& p, const Gf2Matrix& a) {
  const std::size_t n = a.rows();
  if (p.is_zero()) return Gf2Matrix::zero(n);
  const auto d = static_cast<std::size_t>(p.degree());
  std::size_t s = 1;
  while (s * s < d + 1) ++s;

  std::vector<Gf2Matrix> powers{Gf2Matrix::identity(n)};  // A^0 .. A^s
  for (std::size_t i = 1; i <= s; ++i) powers.push_back(mul(powers.back(), a));

  Gf2Matrix acc = Gf2Matrix::zero(n);
  for (std::size_t chunk = d / s + 1; chunk-- > 0;) {
    acc = mul(acc, powers[s]);
    for (std::size_t i = 0; i < s; ++i) {
      const std::size_t e = chunk * s + i;
      if (e <= d && p.coeff(e)) acc = add(acc, powers[i]);
    }
  }
  return acc;
}

}  // namespace nilclean

#include "ihara_towers/matrix.hpp"

#include <utility>

namespace ihara_towers {

bool IntMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

IntMatrix IntMatrix::minor_without(std::size_t k) const {
  if (k >= n_) throw std::out_of_range("minor index out of range");
  IntMatrix out(n_ - 1);
  for (std::size_t i = 0, oi = 0; i < n_; ++i) {
    if (i == k) continue;
    for (std::size_t j = 0, oj = 0; j < n_; ++j) {
      if (j == k) continue;
      out(oi, oj++) = (*this)(i, j);
    }
    ++oi;
  }
  return out;
}

IntMatrix IntMatrix::permuted(std::span<const std::size_t> order) const {
  if (order.size() != n_) throw std::invalid_argument("permutation size mismatch");
  IntMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out(i, j) = (*this)(order[i], order[j]);
  return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("matrix size mismatch");
  IntMatrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

BigInt determinant(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;

  // pivot[k + 1] holds the level-k pivot; pivot[0] = 1 plays the role of P_{-1}.
  std::vector<BigInt> pivot(n + 1);
  pivot[0] = 1;
  std::vector<std::size_t> level(n, 0);
  int sign = 1;
  BigInt tmp;

  auto lift = [&](std::size_t i, std::size_t target) {
    if (level[i] == target) return;
    const BigInt& num = pivot[target];
    const BigInt& den = pivot[level[i]];
    for (std::size_t j = target; j < n; ++j) {
      BigInt& x = m(i, j);
      if (sgn(x) == 0) continue;
      mpz_mul(x.get_mpz_t(), x.get_mpz_t(), num.get_mpz_t());
      mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), den.get_mpz_t());
    }
    level[i] = target;
  };

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t r = k;
    while (r < n && sgn(m(r, k)) == 0) ++r;
    if (r == n) return 0;
    if (r != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(r, j));
      std::swap(level[k], level[r]);
      sign = -sign;
    }
    lift(k, k);
    pivot[k + 1] = m(k, k);
    if (k + 1 == n) break;

    const BigInt& pk = pivot[k + 1];
    const BigInt& prev = pivot[k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(m(i, k)) == 0) continue;
      lift(i, k);
      const BigInt aik = m(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt& x = m(i, j);
        const BigInt& akj = m(k, j);
        if (sgn(akj) == 0) {
          if (sgn(x) == 0) continue;
          mpz_mul(x.get_mpz_t(), x.get_mpz_t(), pk.get_mpz_t());
        } else {
          mpz_mul(tmp.get_mpz_t(), x.get_mpz_t(), pk.get_mpz_t());
          mpz_submul(tmp.get_mpz_t(), aik.get_mpz_t(), akj.get_mpz_t());
          mpz_swap(x.get_mpz_t(), tmp.get_mpz_t());
        }
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
      level[i] = k + 1;
    }
  }
  BigInt det = pivot[n];
  if (sign < 0) det = -det;
  return det;
}

}  // namespace ihara_towers

#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ihara_towers/bigint.hpp"

namespace ihara_towers {

/// Square matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), data_(n * n) {}

  std::size_t size() const noexcept { return n_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  std::span<BigInt> row(std::size_t i) { return {data_.data() + i * n_, n_}; }
  std::span<const BigInt> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }

  bool is_symmetric() const;

  /// Copy with row and column `k` removed.
  IntMatrix minor_without(std::size_t k) const;

  /// Simultaneous row/column permutation: out(i, j) = (*this)(order[i], order[j]).
  IntMatrix permuted(std::span<const std::size_t> order) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<BigInt> data_;
};

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);

/// Exact determinant by fraction-free (Bareiss) elimination. Rows whose entry in
/// the pivot column is zero are not touched at that step; their pending scale
/// factor telescopes to a ratio of two pivots and is applied when the row is
/// next needed, so banded and sparse inputs cost roughly their fill-in.
BigInt determinant(IntMatrix m);

}  // namespace ihara_towers

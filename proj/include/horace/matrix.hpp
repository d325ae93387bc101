#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "horace/field.hpp"

namespace horace {

// Dense matrix over F_p, row major.
class FFMatrix {
 public:
  FFMatrix(std::size_t rows, std::size_t cols, u64 p)
      : rows_(rows), cols_(cols), p_(p), a_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  u64 prime() const { return p_; }

  u64& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  u64 at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

 private:
  std::size_t rows_, cols_;
  u64 p_;
  std::vector<u64> a_;
};

// Rank by deterministic Gaussian elimination: pivots are chosen as the first
// row with a nonzero entry in the current column, columns scanned in order.
std::size_t ff_rank(FFMatrix m);

inline std::size_t ff_kernel_dim(const FFMatrix& m) {
  return m.cols() - ff_rank(m);
}

// Exact integer matrix with a fraction-free (Bareiss) determinant.
class BigIntMatrix {
 public:
  BigIntMatrix(std::size_t n, std::size_t m) : rows_(n), cols_(m), a_(n * m) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  mpz_class& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const mpz_class& at(std::size_t r, std::size_t c) const {
    return a_[r * cols_ + c];
  }

 private:
  std::size_t rows_, cols_;
  std::vector<mpz_class> a_;
};

mpz_class bigint_det(BigIntMatrix m);  // square only

// Rank over the rationals (fraction-free elimination on an integer matrix).
std::size_t bigint_rank(BigIntMatrix m);

}  // namespace horace

#include "horace/matrix.hpp"

namespace horace {

std::size_t ff_rank(FFMatrix m) {
  const u64 p = m.prime();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t piv = rank;
    while (piv < m.rows() && m.at(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != rank)
      for (std::size_t c = col; c < m.cols(); ++c)
        std::swap(m.at(piv, c), m.at(rank, c));
    const u64 inv = invm(m.at(rank, col), p);
    for (std::size_t c = col; c < m.cols(); ++c)
      m.at(rank, c) = mulm(m.at(rank, c), inv, p);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || m.at(r, col) == 0) continue;
      const u64 f = m.at(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        m.at(r, c) = subm(m.at(r, c), mulm(f, m.at(rank, c), p), p);
    }
    ++rank;
  }
  return rank;
}

mpz_class bigint_det(BigIntMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: square only");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m.at(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m.at(k, c), m.at(piv, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        mpz_class q = num / prev;  // exact by Bareiss
        m.at(i, j) = q;
      }
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : mpz_class(-m.at(n - 1, n - 1));
}

std::size_t bigint_rank(BigIntMatrix m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  std::size_t rank = 0;
  mpz_class prev = 1;
  for (std::size_t col = 0; col < nc && rank < nr; ++col) {
    std::size_t piv = rank;
    while (piv < nr && m.at(piv, col) == 0) ++piv;
    if (piv == nr) continue;
    if (piv != rank)
      for (std::size_t c = 0; c < nc; ++c)
        std::swap(m.at(piv, c), m.at(rank, c));
    for (std::size_t i = rank + 1; i < nr; ++i) {
      for (std::size_t j = col + 1; j < nc; ++j) {
        mpz_class num = m.at(i, j) * m.at(rank, col) - m.at(i, col) * m.at(rank, j);
        m.at(i, j) = num / prev;
      }
      m.at(i, col) = 0;
    }
    prev = m.at(rank, col);
    ++rank;
  }
  return rank;
}

}  // namespace horace

#include "horace/hankel.hpp"

#include <stdexcept>

namespace horace {

mpz_class binom_z(long n, long k) {
  if (n < 0) throw std::invalid_argument("binom: negative upper index");
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

BigIntMatrix hankel_matrix(long e, long r, long n) {
  BigIntMatrix m(n + 1, n + 1);
  for (long i = 0; i <= n; ++i)
    for (long j = 0; j <= n; ++j) m.at(i, j) = binom_z(e, r - n + i + j);
  return m;
}

mpz_class hankel_det(long e, long r, long n) {
  return bigint_det(hankel_matrix(e, r, n));
}

bool hankel_invertible(long e, long r, long n) {
  return hankel_det(e, r, n) != 0;
}

mpz_class hankel_p_factor(long e, long r, long n) {
  mpz_class p = 1;
  for (long i = 0; i <= n; ++i) p *= binom_z(e, r - n + i);
  return p;
}

mpz_class hankel_q_factor(long e, long r, long n) {
  mpz_class q = 1;
  for (long i = 0; i <= n; ++i) q *= binom_z(e + i, r - n + i);
  return q;
}

bool eq2_trivial_solution(long e, long p, long i, long r) {
  const long rows = p - i - r - 1;
  const long cols = r + 1;
  if (rows < cols) return false;  // kernel is forced only in the stated range
  BigIntMatrix m(rows, cols);
  for (long k = 0; k < rows; ++k)
    for (long s = 0; s < cols; ++s) m.at(k, s) = binom_z(e, e - p + 1 + k + s);
  return bigint_rank(std::move(m)) == static_cast<std::size_t>(cols);
}

std::vector<HankelSweepRow> hankel_sweep(long e_max) {
  std::vector<HankelSweepRow> out;
  for (long e = 1; e <= e_max; ++e)
    for (long r = 1; r <= e; ++r)
      for (long n = 1; n <= r; ++n)
        out.push_back({e, r, n, hankel_det(e, r, n)});
  return out;
}

}  // namespace horace

#pragma once

#include <vector>

#include "horace/matrix.hpp"

namespace horace {

// binom(n, k) as an exact integer; zero for k < 0 or k > n (n >= 0).
mpz_class binom_z(long n, long k);

// The symmetric (n+1) x (n+1) matrix with entry (i, j) = binom(e, r-n+i+j).
BigIntMatrix hankel_matrix(long e, long r, long n);

bool hankel_invertible(long e, long r, long n);
mpz_class hankel_det(long e, long r, long n);

// Row factors P(e) = prod_i binom(e, r-n+i) and Q(e) = prod_i binom(e+i,
// r-n+i).  Both divide det H_{r,n}(e) as polynomials in e over the
// rationals, so an integer zero of either is a zero of the determinant
// (value-level divisibility does not hold in general).
mpz_class hankel_p_factor(long e, long r, long n);
mpz_class hankel_q_factor(long e, long r, long n);

// Coefficient matrix of the homogeneous system tying together the Taylor
// coefficients a_{i, r-k, k}: (p-i-r-1) rows, (r+1) columns, entry
// (k, s) = binom(e, e-p+1+k+s).  Returns true when the kernel over the
// rationals is zero (only the trivial solution).
bool eq2_trivial_solution(long e, long p, long i, long r);

struct HankelSweepRow {
  long e, r, n;
  mpz_class det;
};
std::vector<HankelSweepRow> hankel_sweep(long e_max);

}  // namespace horace

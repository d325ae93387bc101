#pragma once

#include <utility>
#include <vector>

#include "horace/matrix.hpp"

namespace horace {

// Hermite interpolation at random points of the affine chart: n points of
// multiplicity e against plane curves of degree d over F_prime.
struct InterpProblem {
  long n = 1;
  long e = 1;
  long d = 0;
  u64 prime = kDefaultPrime;
  u64 seed = 0;
};

struct RankReport {
  long d = 0;
  long rows = 0, cols = 0;
  long rank = 0, kernel = 0;
  bool regular = false;  // rank == min(rows, cols)
  long seeds_tried = 1;  // > 1 when a deficient sample triggered retries
};

std::vector<std::pair<u64, u64>> sample_points(long n, u64 prime, u64 seed);

// Rows: all Taylor coefficients of order < e at each point, of each
// monomial x^a y^b with a + b <= d.  Row count n*e(e+1)/2, column count
// (d+1)(d+2)/2; columns ordered by total degree, then y-exponent.
FFMatrix interp_matrix(const InterpProblem& p);
FFMatrix interp_matrix_at(const std::vector<std::pair<u64, u64>>& pts, long e,
                          long d, u64 prime);

// Maximal rank is certified by a single sample; a deficient sample is
// retried with two derived seeds before reporting special-at-sample.
RankReport regularity(const InterpProblem& p);

// One report per degree in [d_lo, d_hi], sharing one point sample; any
// deficient degree is re-checked through regularity()'s retry policy.
std::vector<RankReport> oracle_sweep(long n, long e, long d_lo, long d_hi,
                                     u64 prime = kDefaultPrime, u64 seed = 0);

}  // namespace horace

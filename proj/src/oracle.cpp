#include "horace/oracle.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace horace {

namespace {

// Pascal triangle mod p up to row n.
std::vector<std::vector<u64>> binom_table(long n, u64 p) {
  std::vector<std::vector<u64>> b(n + 1);
  for (long i = 0; i <= n; ++i) {
    b[i].assign(i + 1, 1);
    for (long j = 1; j < i; ++j) b[i][j] = addm(b[i - 1][j - 1], b[i - 1][j], p);
  }
  return b;
}

}  // namespace

std::vector<std::pair<u64, u64>> sample_points(long n, u64 prime, u64 seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<u64> dist(0, prime - 1);
  std::set<std::pair<u64, u64>> seen;
  std::vector<std::pair<u64, u64>> pts;
  long attempts = 0;
  while (static_cast<long>(pts.size()) < n) {
    if (++attempts > 100 * n + 1000)
      throw std::runtime_error("cannot sample enough distinct points");
    std::pair<u64, u64> pt{dist(rng), dist(rng)};
    if (seen.insert(pt).second) pts.push_back(pt);
  }
  return pts;
}

FFMatrix interp_matrix_at(const std::vector<std::pair<u64, u64>>& pts, long e,
                          long d, u64 prime) {
  const long n = static_cast<long>(pts.size());
  const long rows = n * e * (e + 1) / 2;
  const long cols = (d + 1) * (d + 2) / 2;
  FFMatrix m(rows, cols, prime);
  auto binom = binom_table(d, prime);

  // Powers of the coordinates per point.
  std::vector<std::vector<u64>> px(n), py(n);
  for (long q = 0; q < n; ++q) {
    px[q].assign(d + 1, 1);
    py[q].assign(d + 1, 1);
    for (long k = 1; k <= d; ++k) {
      px[q][k] = mulm(px[q][k - 1], pts[q].first, prime);
      py[q][k] = mulm(py[q][k - 1], pts[q].second, prime);
    }
  }

  long row = 0;
  for (long q = 0; q < n; ++q) {
    for (long ord = 0; ord < e; ++ord) {
      for (long alpha = ord; alpha >= 0; --alpha, ++row) {
        long beta = ord - alpha;
        long col = 0;
        for (long deg = 0; deg <= d; ++deg) {
          for (long b = 0; b <= deg; ++b, ++col) {
            long a = deg - b;
            if (alpha > a || beta > b) continue;
            u64 v = mulm(binom[a][alpha], binom[b][beta], prime);
            v = mulm(v, px[q][a - alpha], prime);
            v = mulm(v, py[q][b - beta], prime);
            m.at(row, col) = v;
          }
        }
      }
    }
  }
  return m;
}

FFMatrix interp_matrix(const InterpProblem& p) {
  if (p.prime <= static_cast<u64>(p.d))
    throw std::invalid_argument("prime must exceed the degree");
  return interp_matrix_at(sample_points(p.n, p.prime, p.seed), p.e, p.d,
                          p.prime);
}

RankReport regularity(const InterpProblem& p) {
  RankReport rep;
  rep.d = p.d;
  rep.rows = p.n * p.e * (p.e + 1) / 2;
  rep.cols = (p.d + 1) * (p.d + 2) / 2;
  const long want = std::min(rep.rows, rep.cols);
  for (long attempt = 0; attempt < 3; ++attempt) {
    InterpProblem q = p;
    q.seed = p.seed + attempt;
    long rank = static_cast<long>(ff_rank(interp_matrix(q)));
    rep.seeds_tried = attempt + 1;
    if (rank > rep.rank) {
      rep.rank = rank;
      rep.kernel = rep.cols - rank;
    }
    if (rep.rank == want) break;  // maximal rank: certified, stop
  }
  rep.regular = rep.rank == want;
  return rep;
}

std::vector<RankReport> oracle_sweep(long n, long e, long d_lo, long d_hi,
                                     u64 prime, u64 seed) {
  auto pts = sample_points(n, prime, seed);
  std::vector<RankReport> out;
  for (long d = d_lo; d <= d_hi; ++d) {
    RankReport rep;
    rep.d = d;
    rep.rows = n * e * (e + 1) / 2;
    rep.cols = (d + 1) * (d + 2) / 2;
    const long want = std::min(rep.rows, rep.cols);
    rep.rank = static_cast<long>(ff_rank(interp_matrix_at(pts, e, d, prime)));
    rep.kernel = rep.cols - rep.rank;
    rep.regular = rep.rank == want;
    if (!rep.regular) {
      // a shared sample may be unlucky for one degree: fall back to the
      // retrying single-degree check
      rep = regularity(InterpProblem{n, e, d, prime, seed + 17});
    }
    out.push_back(rep);
  }
  return out;
}

}  // namespace horace
